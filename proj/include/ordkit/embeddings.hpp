#pragma once

#include "ordkit/bhfix.hpp"
#include "ordkit/notations.hpp"

#include <memory>
#include <string>

namespace ordkit {

/// The collapse T_Y → Y for Y = ϑ(T↾ℕ): η⁻¹ followed by the canonical
/// collapse of D^{T↾ℕ}_Y.
class TransformerCollapse {
public:
    explicit TransformerCollapse(TransformerPtr t);

    const TransformerPtr& transformer() const noexcept { return transformer_; }
    const std::shared_ptr<const BhfixOrder>& fix() const noexcept { return fix_; }
    /// T_Y for Y = fix().
    const OrderPtr& image_order() const noexcept { return image_order_; }

    Term operator()(const Term& e) const;

private:
    TransformerPtr transformer_;
    std::shared_ptr<const BhfixOrder> fix_;
    OrderPtr image_order_;
};

/// An order-preserving map candidate between two orders.
class Embedding {
public:
    virtual ~Embedding() = default;

    virtual std::string name() const = 0;
    virtual const OrderPtr& source() const = 0;
    virtual const OrderPtr& target() const = 0;
    /// Sets *anomaly when a branch that the construction never reaches on
    /// valid inputs had to be taken.
    virtual Term apply(const Term& t, bool* anomaly = nullptr) const = 0;
    /// Extra per-term identity; empty when it holds.
    virtual std::string check_term(const Term&, const Term&) const { return {}; }
};

/// f: ω^X → {⊥} ∪ Y with T_Y = X × ({⊥} ∪ Y):
/// f(⟨⟩) = ⊥, f(⟨x0,...⟩) = ϑ(x0, f(⟨x1,...⟩)).
class OmegaEmbedding final : public Embedding {
public:
    explicit OmegaEmbedding(OrderPtr x);
    std::string name() const override { return "omega"; }
    const OrderPtr& source() const override { return source_; }
    const OrderPtr& target() const override { return target_; }
    Term apply(const Term& t, bool* anomaly = nullptr) const override;
    const TransformerCollapse& collapse() const noexcept { return collapse_; }

private:
    TransformerCollapse collapse_;
    OrderPtr source_, target_;
};

/// f: ε_X → Y with T_Y = ({⊥} ∪ X) × ω^Y, using the ε-degree.
class EpsilonEmbedding final : public Embedding {
public:
    explicit EpsilonEmbedding(OrderPtr x);
    std::string name() const override { return "epsilon"; }
    const OrderPtr& source() const override { return source_; }
    const OrderPtr& target() const override { return target_; }
    /// The fallback ϑ(⊥, ⟨⟩) for non-decreasing images sets *anomaly.
    Term apply(const Term& t, bool* anomaly = nullptr) const override;
    const TransformerCollapse& collapse() const noexcept { return collapse_; }

private:
    TransformerCollapse collapse_;
    OrderPtr source_, target_;
};

/// f: ϑ_X → T_Y = ε_{Y ∪ {Ω} ∪ X} with Y = ϑ(eps_pad(X)).
class ThetaEmbedding final : public Embedding {
public:
    explicit ThetaEmbedding(OrderPtr x);
    std::string name() const override { return "theta"; }
    const OrderPtr& source() const override { return source_; }
    const OrderPtr& target() const override { return target_; }
    Term apply(const Term& t, bool* anomaly = nullptr) const override;
    /// f(r*) = max({0} ∪ {ε_y | y ∈ supp(f(r))}).
    std::string check_term(const Term& r, const Term& image) const override;
    const TransformerCollapse& collapse() const noexcept { return collapse_; }

private:
    TransformerCollapse collapse_;
    std::shared_ptr<const ThetaOrder> theta_;
    OrderPtr source_, target_;
};

/// min_embed from ϑ(T) into ϑ(T) itself with the canonical collapse; the
/// per-term check is f(t) = t.
class MinimalEmbedding final : public Embedding {
public:
    explicit MinimalEmbedding(std::shared_ptr<const BhfixOrder> fix);
    std::string name() const override { return "minimal"; }
    const OrderPtr& source() const override { return source_; }
    const OrderPtr& target() const override { return source_; }
    Term apply(const Term& t, bool* anomaly = nullptr) const override;
    std::string check_term(const Term& t, const Term& image) const override;

private:
    OrderPtr source_;
    CollapseTarget target_;
};

} // namespace ordkit
