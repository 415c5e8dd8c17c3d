#include "ordkit/dconstruction.hpp"
#include "ordkit/error.hpp"
#include "ordkit/linear.hpp"
#include "ordkit/notations.hpp"
#include "ordkit/specs.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace ordkit;

namespace {

DElement el(const CodedDilator& d, const Order& x, const std::string& text) { return parse_delement(d, x, text); }

ElementMap shift_map(std::uint64_t by) {
    return [by](const Term& t) { return Term::nat(t.value() + by); };
}

} // namespace

TEST_CASE("membership") {
    auto ss = parse_dilator_spec("scaled_sum(fin:1)");
    auto nat = nat_order();
    CHECK(d_member(*ss, *nat, el(*ss, *nat, "<{}; (0,bot)>")));
    CHECK_FALSE(d_member(*ss, *nat, el(*ss, *nat, "<{5}; (0,bot)>")));
    CHECK(d_member(*ss, *nat, el(*ss, *nat, "<{5}; (0,0)>")));
    auto id = parse_dilator_spec("id");
    CHECK(d_member(*id, *nat, el(*id, *nat, "<{3}; 0>")));
    CHECK_FALSE(d_member(*id, *nat, DElement{{Term::nat(3), Term::nat(1)}, Term::nat(0)}));
    CHECK_FALSE(d_member(*id, *nat, DElement{{Term::nat(3)}, Term::nat(7)}));
}

TEST_CASE("comparison examples") {
    auto nat = nat_order();
    auto id = parse_dilator_spec("id");
    CHECK(d_less(*id, *nat, el(*id, *nat, "<{3}; 0>"), el(*id, *nat, "<{7}; 0>")));
    CHECK_FALSE(d_less(*id, *nat, el(*id, *nat, "<{7}; 0>"), el(*id, *nat, "<{3}; 0>")));

    auto k = parse_dilator_spec("const(fin:1,0)");
    auto e = el(*k, *nat, "<{}; 0>");
    CHECK_FALSE(d_less(*k, *nat, e, e));

    auto ss = parse_dilator_spec("scaled_sum(fin:2)");
    CHECK(d_less(*ss, *nat, el(*ss, *nat, "<{}; (0,bot)>"), el(*ss, *nat, "<{}; (1,bot)>")));
    // ⊥ is least in the second component
    CHECK(d_less(*ss, *nat, el(*ss, *nat, "<{}; (0,bot)>"), el(*ss, *nat, "<{4}; (0,0)>")));
    CHECK(d_less(*ss, *nat, el(*ss, *nat, "<{4}; (0,0)>"), el(*ss, *nat, "<{}; (1,bot)>")));
}

TEST_CASE("arity bounds are enforced") {
    auto t = tabulate(*parse_dilator_spec("scaled_sum(fin:1)"), 1, 3);
    auto nat = nat_order();
    auto a = el(*t, *nat, "<{1}; 1>");
    auto b = el(*t, *nat, "<{2}; 1>");
    CHECK_THROWS_AS(d_less(*t, *nat, a, b), ArityExceeded);
    CHECK_THROWS_AS(d_enumerate(*t, *fin_order(2), 3), ArityExceeded);
    CHECK_NOTHROW(d_enumerate(*t, *fin_order(1), 3));
}

TEST_CASE("maps and supports") {
    auto id = parse_dilator_spec("id");
    auto nat = nat_order();
    auto e = el(*id, *nat, "<{0}; 0>");
    CHECK(d_map([](const Term& t) { return t; }, *nat, e) == e);
    CHECK(d_map(shift_map(4), *nat, e) == el(*id, *nat, "<{4}; 0>"));
    CHECK(d_supp(el(*id, *nat, "<{2}; 0>")) == std::vector<Term>{Term::nat(2)});

    // D_{g∘f} = D_g ∘ D_f, and supp(D_f(e)) = f[supp(e)]
    auto w = parse_dilator_spec("omega");
    auto x = fin_order(3);
    for (const auto& d : d_enumerate(*w, *x, 4)) {
        auto once = d_map(shift_map(5), *nat, d_map(shift_map(2), *nat, d));
        CHECK(once == d_map(shift_map(7), *nat, d));
        auto img = d_map(shift_map(2), *nat, d);
        REQUIRE(img.support.size() == d.support.size());
        for (std::size_t i = 0; i < d.support.size(); ++i)
            CHECK(img.support[i].value() == d.support[i].value() + 2);
        CHECK(d_member(*w, *nat, img));
    }
}

TEST_CASE("d_less is linear and the merge is injective") {
    for (const char* spec : {"id", "const(fin:1,0)", "scaled_sum(fin:2)", "prod_omega(fin:1)", "omega", "epsilon",
                             "eps_pad(fin:1)"}) {
        auto d = parse_dilator_spec(spec);
        for (std::size_t size : {0U, 1U, 2U, 4U}) {
            auto x = fin_order(size);
            const std::size_t len = std::string(spec).rfind("eps", 0) == 0 ? 5 : 7;
            auto es = d_enumerate(*d, *x, len);
            INFO(spec, " over fin:", size);
            for (const auto& e : es)
                REQUIRE(d_member(*d, *x, e));
            auto r = check_linear(es.size(), [&](std::size_t i, std::size_t j) { return d_less(*d, *x, es[i], es[j]); });
            CHECK(r.pass);
            // equal codes after pushing into T_{|a∪b|} force equal elements
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    const auto c = sorted_union(*x, es[i].support, es[j].support);
                    const Term pi = d->map(inclusion_index(*x, es[i].support, c), es[i].code);
                    const Term pj = d->map(inclusion_index(*x, es[j].support, c), es[j].code);
                    CHECK_FALSE(pi == pj);
                }
        }
    }
}

TEST_CASE("eta examples") {
    auto w = omega_transformer();
    auto dw = restrict(w);
    auto x = fin_order(2);
    CHECK(eta(*w, el(*dw, *x, "<{1}; w[0]>")) == parse_term(*w->apply(x), "w[1]"));
    CHECK(eta(*w, el(*dw, *x, "<{}; w[]>")) == parse_term(*w->apply(x), "w[]"));
    CHECK(eta(*w, el(*dw, *x, "<{0,1}; w[1,0,0]>")) == parse_term(*w->apply(x), "w[1,0,0]"));

    auto id = identity_transformer();
    auto did = restrict(id);
    auto nat = nat_order();
    CHECK(eta(*id, el(*did, *nat, "<{6}; 0>")) == Term::nat(6));
    CHECK(eta_inverse(*id, *nat, Term::nat(6)) == el(*did, *nat, "<{6}; 0>"));
}

TEST_CASE("eta is a support preserving order isomorphism on fragments") {
    for (const char* spec : {"omega", "epsilon", "prod_omega(fin:1)", "scaled_sum(fin:1)"}) {
        auto t = parse_transformer_spec(spec);
        auto d = restrict(t);
        for (std::size_t size : {1U, 2U}) {
            auto x = fin_order(size);
            auto tx = t->apply(x);
            auto ds = d_enumerate(*d, *x, 5);
            std::set<std::string> images;
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const Term img = eta(*t, ds[i]);
                REQUIRE(tx->member(img));
                CHECK(t->support(*x, img) == ds[i].support);
                CHECK(eta_inverse(*t, *x, img) == ds[i]);
                images.insert(show(*tx, img));
                for (std::size_t j = 0; j < ds.size(); ++j)
                    CHECK(tx->less(img, eta(*t, ds[j])) == (i < j));
            }
            CHECK(images.size() == ds.size());
            // every element of T_X is hit by something
            for (const auto& e : enumerate_terms(*tx, 3))
                CHECK(d_member(*d, *x, eta_inverse(*t, *x, e)));
        }
    }
}

TEST_CASE("eta_lift") {
    auto d = parse_dilator_spec("scaled_sum(fin:1)");
    auto x = fin_order(3);
    auto ident = [](std::size_t, const Term& c) { return c; };
    for (const auto& e : d_enumerate(*d, *x, 3))
        CHECK(eta_lift(ident, e) == e);

    // a tabulated presentation, matched rank by rank with the original
    auto table = tabulate(*d, 3, 3);
    std::map<std::pair<std::size_t, Term>, Term, decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first)
                     return a.first < b.first;
                 return Term::structural_less(a.second, b.second);
             })>
        rank_match;
    for (std::size_t n = 0; n <= 3; ++n) {
        auto from = table->enumerate(n, 1);
        auto to = d->enumerate(n, 3);
        robust_sort(from, [&](const Term& a, const Term& b) { return table->less(n, a, b); });
        robust_sort(to, [&](const Term& a, const Term& b) { return d->less(n, a, b); });
        REQUIRE(from.size() == to.size());
        for (std::size_t i = 0; i < from.size(); ++i)
            rank_match.emplace(std::pair{n, from[i]}, to[i]);
    }
    auto eta0 = [&](std::size_t n, const Term& c) { return rank_match.at({n, c}); };
    auto src = d_enumerate(*table, *x, 1);
    CHECK_FALSE(src.empty());
    for (const auto& a : src) {
        const auto la = eta_lift(eta0, a);
        CHECK(d_member(*d, *x, la));
        CHECK(la.support == a.support);
        for (const auto& b : src)
            CHECK(d_less(*table, *x, a, b) == d_less(*d, *x, la, eta_lift(eta0, b)));
    }
}

TEST_CASE("text form") {
    auto d = parse_dilator_spec("prod_omega(fin:1)");
    auto x = fin_order(2);
    for (const auto& e : d_enumerate(*d, *x, 4))
        CHECK(parse_delement(*d, *x, show_delement(*d, *x, e)) == e);
    // supports are kept as written, and must be increasing to be members
    CHECK(show_delement(*d, *x, el(*d, *x, "<{1,0}; (bot,w[1,0])>")) == "<{1,0}; (bot,w[1,0])>");
    CHECK_FALSE(d_member(*d, *x, el(*d, *x, "<{1,0}; (bot,w[1,0])>")));
    CHECK(d_member(*d, *x, el(*d, *x, "<{0,1}; (bot,w[1,0])>")));
    CHECK_THROWS_AS(parse_delement(*d, *x, "<{0}; (bot,w[0]"), ParseError);
}

TEST_CASE("full support codes") {
    auto d = parse_dilator_spec("scaled_sum(fin:2)");
    CHECK(full_support_codes(*d, 0, 3).size() == 2);
    CHECK(full_support_codes(*d, 1, 3).size() == 2);
    CHECK(full_support_codes(*d, 2, 3).empty());
}
