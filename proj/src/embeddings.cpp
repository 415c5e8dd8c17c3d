#include "ordkit/embeddings.hpp"

#include "ordkit/error.hpp"
#include "ordkit/notations.hpp"

namespace ordkit {

TransformerCollapse::TransformerCollapse(TransformerPtr t)
    : transformer_(std::move(t)), fix_(std::make_shared<BhfixOrder>(restrict(transformer_))),
      image_order_(transformer_->apply(fix_)) {}

Term TransformerCollapse::operator()(const Term& e) const { return collapse(eta_inverse(*transformer_, *fix_, e)); }

OmegaEmbedding::OmegaEmbedding(OrderPtr x)
    : collapse_(scaled_sum_transformer(x)), source_(std::make_shared<OmegaOrder>(x)),
      target_(std::make_shared<BottomOrder>(collapse_.fix())) {}

Term OmegaEmbedding::apply(const Term& t, bool*) const {
    Term y = bottom();
    const auto xs = t.args();
    for (std::size_t i = xs.size(); i-- > 0;)
        y = collapse_(pair(xs[i], y));
    return y;
}

EpsilonEmbedding::EpsilonEmbedding(OrderPtr x)
    : collapse_(prod_omega_transformer(x)), source_(std::make_shared<EpsilonOrder>(x)), target_(collapse_.fix()) {}

Term EpsilonEmbedding::apply(const Term& t, bool* anomaly) const {
    switch (t.tag()) {
    case Tag::Zero:
        return collapse_(pair(bottom(), omega_seq({})));
    case Tag::Eps:
        return collapse_(pair(t.arg(0), omega_seq({})));
    case Tag::Sum: {
        std::vector<Term> images;
        for (const auto& s : t.args())
            images.push_back(apply(s, anomaly));
        for (std::size_t i = 1; i < images.size(); ++i)
            if (!leq(*target_, images[i], images[i - 1])) {
                if (anomaly)
                    *anomaly = true;
                return collapse_(pair(bottom(), omega_seq({})));
            }
        return collapse_(pair(eps_degree(t), omega_seq(std::move(images))));
    }
    default:
        throw DomainError("epsilon embedding: not a term of " + source_->spec());
    }
}

ThetaEmbedding::ThetaEmbedding(OrderPtr x)
    : collapse_(eps_pad_transformer(x)), theta_(std::make_shared<ThetaOrder>(x)), source_(theta_),
      target_(collapse_.image_order()) {}

Term ThetaEmbedding::apply(const Term& t, bool* anomaly) const {
    switch (t.tag()) {
    case Tag::Zero:
        return zero();
    case Tag::Omega:
        return eps(pad_mid());
    case Tag::Big:
        return eps(pad_right(t.arg(0)));
    case Tag::Theta:
        return eps(pad_left(collapse_(apply(t.arg(0), anomaly))));
    case Tag::Sum: {
        std::vector<Term> parts;
        for (const auto& s : t.args())
            parts.push_back(apply(s, anomaly));
        return sum(std::move(parts));
    }
    default:
        throw DomainError("theta embedding: not a term of " + source_->spec());
    }
}

std::string ThetaEmbedding::check_term(const Term& r, const Term& image) const {
    Term best = zero();
    for (const auto& y : collapse_.transformer()->support(*collapse_.fix(), image)) {
        Term e = eps(pad_left(y));
        if (target_->less(best, e))
            best = std::move(e);
    }
    const Term lhs = apply(theta_->star(r));
    if (lhs == best)
        return {};
    return "f(r*) = " + show(*target_, lhs) + " but max{0, e_y : y in supp f(r)} = " + show(*target_, best);
}

MinimalEmbedding::MinimalEmbedding(std::shared_ptr<const BhfixOrder> fix)
    : source_(fix), target_(canonical_target(fix)) {}

Term MinimalEmbedding::apply(const Term& t, bool*) const { return min_embed(target_, t); }

std::string MinimalEmbedding::check_term(const Term& t, const Term& image) const {
    if (t == image)
        return {};
    return "f(t) = " + show(*source_, image) + " differs from t";
}

} // namespace ordkit
