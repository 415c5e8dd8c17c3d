#include "ordkit/audit.hpp"
#include "ordkit/embeddings.hpp"
#include "ordkit/notations.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace ordkit;

namespace {

// Pairwise order preservation, membership, and no fallback branch taken.
void require_embedding(const Embedding& f, std::size_t max_len) {
    auto src = enumerate_terms(*f.source(), max_len);
    REQUIRE_FALSE(src.empty());
    std::vector<Term> img;
    for (const auto& s : src) {
        bool anomaly = false;
        img.push_back(f.apply(s, &anomaly));
        INFO(f.name(), " ", show(*f.source(), s));
        CHECK_FALSE(anomaly);
        CHECK(f.target()->member(img.back()));
        CHECK(f.check_term(s, img.back()).empty());
    }
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j)
            CHECK(f.source()->less(src[i], src[j]) == f.target()->less(img[i], img[j]));
}

std::string image_text(const Embedding& f, const std::string& source_term) {
    return show(*f.target(), f.apply(parse_term(*f.source(), source_term)));
}

} // namespace

TEST_CASE("omega embedding") {
    OmegaEmbedding f(fin_order(2));
    CHECK(f.target()->spec() == "bot+bhfix(scaled_sum(fin:2))");
    CHECK(image_text(f, "w[]") == "bot");
    CHECK(image_text(f, "w[1]") == "p((1,bot);)");
    CHECK(image_text(f, "w[1,0]") == "p((1,0); p((0,bot);))");
    require_embedding(f, 4);
}

TEST_CASE("epsilon embedding") {
    EpsilonEmbedding f(fin_order(1));
    CHECK(image_text(f, "0") == "p((bot,w[]);)");
    CHECK(image_text(f, "e[0]") == "p((0,w[]);)");
    CHECK(eps_degree(parse_term(*f.source(), "w(e[0],0)")) == Term::nat(0));
    require_embedding(f, 4);
}

TEST_CASE("theta embedding") {
    ThetaEmbedding f(fin_order(1));
    CHECK(image_text(f, "0") == "0");
    CHECK(image_text(f, "Om") == "e[Om]");
    CHECK(image_text(f, "E[0]") == "e[R:0]");
    CHECK(image_text(f, "w(0)") == "w(0)");
    CHECK(image_text(f, "th(0)") == "e[L:p(0;)]");
    require_embedding(f, 4);
}

TEST_CASE("the collapse behind the theta embedding is a Bachmann-Howard collapse") {
    TransformerCollapse c(eps_pad_transformer(fin_order(1)));
    const auto& y = *c.fix();
    auto ty = enumerate_terms(*c.image_order(), 4);
    std::vector<Term> images;
    for (const auto& e : ty) {
        images.push_back(c(e));
        REQUIRE(y.member(images.back()));
        // supp(σ) <^fin ϑ(σ)
        CHECK(fin_less(y, c.transformer()->support(y, e), images.back()));
    }
    // σ < τ with supp(σ) <^fin ϑ(τ) gives ϑ(σ) < ϑ(τ)
    for (std::size_t i = 0; i < ty.size(); ++i)
        for (std::size_t j = 0; j < ty.size(); ++j)
            if (c.image_order()->less(ty[i], ty[j]) &&
                fin_less(y, c.transformer()->support(y, ty[i]), images[j]))
                CHECK(y.less(images[i], images[j]));
}

TEST_CASE("minimal embedding into the fixed point itself") {
    auto fix = std::make_shared<BhfixOrder>(restrict(scaled_sum_transformer(fin_order(2))));
    MinimalEmbedding f(fix);
    require_embedding(f, 7);
    auto r = audit_embedding(f, 7);
    CHECK(r.pass);
}

TEST_CASE("audit reports for the embeddings") {
    OmegaEmbedding omega(fin_order(2));
    EpsilonEmbedding epsilon(fin_order(1));
    ThetaEmbedding theta(fin_order(1));
    for (const Embedding* f : {static_cast<const Embedding*>(&omega), static_cast<const Embedding*>(&epsilon),
                               static_cast<const Embedding*>(&theta)}) {
        auto r = audit_embedding(*f, 4);
        INFO(f->name(), " ", r.violation);
        CHECK(r.pass);
        CHECK(r.counterexample.empty());
    }
}
