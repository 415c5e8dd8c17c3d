#include "ordkit/dilators.hpp"
#include "ordkit/error.hpp"
#include "ordkit/notations.hpp"
#include "ordkit/specs.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

using namespace ordkit;

namespace {

const char* const builtin_specs[] = {"id",          "const(fin:1,0)", "const(omega(fin:1),w[0,0])", "scaled_sum(fin:1)",
                                     "scaled_sum(fin:2)", "prod_omega(fin:1)", "eps_pad(fin:1)", "omega",
                                     "epsilon"};

// T_0 = ∅, T_1 = {0}, T_2 = {0 < 1}, every element with empty support, yet
// the two embeddings 1 -> 2 send 0 to different codes.
const char* const broken_naturality = R"(arity 2
elem 1 0
elem 2 0
elem 2 1
lt 2 0 1
supp 1 0 -
supp 2 0 -
supp 2 1 -
map 1 1 0 0 0
map 1 2 0 0 0
map 1 2 1 0 1
map 2 2 0,1 0 0
map 2 2 0,1 1 1
)";

// One constant element plus the identity: T_n = {c} ∪ n with c on top.
const char* const const_plus_id = R"(# constant on top of the identity, truncated at 2
arity 2
elem 0 9
elem 1 0
elem 1 9
elem 2 0
elem 2 1
elem 2 9
lt 1 0 9
lt 2 0 1
lt 2 0 9
lt 2 1 9
supp 0 9 -
supp 1 0 0
supp 1 9 -
supp 2 0 0
supp 2 1 1
supp 2 9 -
map 0 0 - 9 9
map 0 1 - 9 9
map 0 2 - 9 9
map 1 1 0 0 0
map 1 1 0 9 9
map 1 2 0 0 0
map 1 2 0 9 9
map 1 2 1 0 1
map 1 2 1 9 9
map 2 2 0,1 0 0
map 2 2 0,1 1 1
map 2 2 0,1 9 9
)";

std::string without_line(std::string text, const std::string& line) {
    auto pos = text.find(line + "\n");
    REQUIRE(pos != std::string::npos);
    return text.erase(pos, line.size() + 1);
}

std::vector<std::string> codes(const CodedDilator& d, const std::vector<Term>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts)
        out.push_back(d.show_code(t));
    return out;
}

} // namespace

TEST_CASE("restriction examples") {
    auto w = restrict(omega_transformer());
    Cursor c("w[1,0]");
    CHECK(w->member(2, w->parse_code(c)));
    CHECK(restrict(identity_transformer())->enumerate(0, 5).empty());
    auto k = parse_dilator_spec("const(fin:1,0)");
    for (std::size_t n = 0; n <= 4; ++n) {
        auto es = k->enumerate(n, 5);
        REQUIRE(es.size() == 1);
        CHECK(k->support(n, es[0]).empty());
    }
    CHECK_THROWS_AS(constant_transformer(fin_order(1), Term::nat(3)), DomainError);
    CHECK_THROWS_AS(parse_dilator_spec("const(fin:1,3)"), ParseError);
}

TEST_CASE("restriction agrees with the transformer on finite orders") {
    for (const char* spec : builtin_specs) {
        auto t = parse_transformer_spec(spec);
        auto d = restrict(t);
        for (std::size_t n = 0; n <= 4; ++n) {
            auto direct = enumerate_terms(*t->apply(fin_order(n)), 4);
            auto coded = d->enumerate(n, 4);
            std::sort(direct.begin(), direct.end(), TermStructuralLess{});
            std::sort(coded.begin(), coded.end(), TermStructuralLess{});
            CHECK(direct == coded);
        }
    }
}

TEST_CASE("every built-in dilator is coherent up to 4") {
    for (const char* spec : builtin_specs) {
        auto r = check_coherence(*parse_dilator_spec(spec), 4, 4);
        INFO(spec, ": ", r.property, " ", r.counterexample);
        CHECK(r.pass);
        CHECK(r.checks > 0);
    }
    CHECK(check_coherence(*parse_dilator_spec("id"), 0, 4).pass);
}

TEST_CASE("scaled_sum supports") {
    auto d = parse_dilator_spec("scaled_sum(fin:2)");
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& s : d->enumerate(n, 4)) {
            const Term& second = s.arg(1);
            if (second.is(Tag::Bot))
                CHECK(d->support(n, s).empty());
            else
                CHECK(d->support(n, s) == IndexSet{second.value()});
        }
}

TEST_CASE("eps_pad relabels only the lower atoms") {
    auto d = parse_dilator_spec("eps_pad(fin:1)");
    OrderEmbedding f(2, 3, {0, 2});
    auto code = [&](const std::string& text) {
        Cursor c(text);
        return d->parse_code(c);
    };
    CHECK(d->map(f, code("0")) == code("0"));
    CHECK(d->map(f, code("e[Om]")) == code("e[Om]"));
    CHECK(d->map(f, code("e[R:0]")) == code("e[R:0]"));
    CHECK(d->map(f, code("e[L:1]")) == code("e[L:2]"));
    CHECK(d->map(f, code("w(e[L:1],e[L:0],0)")) == code("w(e[L:2],e[L:0],0)"));
    CHECK(d->support(2, code("w(e[R:0],e[L:1],e[Om])")) == IndexSet{1});
}

TEST_CASE("broken naturality is reported") {
    auto t = parse_table(broken_naturality, "broken");
    auto r = check_coherence(*t, 2, 1);
    CHECK_FALSE(r.pass);
    CHECK(r.property == "naturality");
    CHECK(r.counterexample.find("sigma=0") != std::string::npos);
}

TEST_CASE("tables load, round-trip and check") {
    auto t = parse_table(const_plus_id, "cid");
    CHECK(t->arity_bound() == 2);
    CHECK(codes(*t, t->enumerate(2, 1)) == std::vector<std::string>{"0", "1", "9"});
    CHECK(check_coherence(*t, 2, 1).pass);

    const auto text = table_to_text(*t);
    auto again = parse_table(text, "again");
    CHECK(again->data() == t->data());
    CHECK(table_to_text(*again) == text);

    const auto path = std::filesystem::temp_directory_path() / "ordkit_test_table.txt";
    save_table(*t, path);
    CHECK(load_table(path)->data() == t->data());
    std::filesystem::remove(path);

    CHECK_THROWS_AS(t->require_arity(3), ArityExceeded);
    CHECK_THROWS_AS(t->enumerate(3, 1), ArityExceeded);
}

TEST_CASE("empty tables") {
    auto t = parse_table("arity 3\n", "empty");
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(t->enumerate(n, 1).empty());
    CHECK(check_coherence(*t, 3, 1).pass);
}

TEST_CASE("table errors") {
    const std::string good = const_plus_id;
    CHECK_THROWS_AS(parse_table(without_line(good, "map 1 2 1 9 9"), "x"), ParseError);
    CHECK_THROWS_AS(parse_table(without_line(good, "supp 2 1 1"), "x"), ParseError);
    CHECK_THROWS_AS(parse_table(good + "supp 2 5 3\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_table(good + "elem 2 5\nsupp 2 5 2\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_table(good + "frobnicate 1\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_table("elem 0 1\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_table(good + "elem 3 0\n", "x"), ParseError);
    // 1 < 0 next to 0 < 1 is not a linear order; only strict loading notices
    const auto cyclic = good + "lt 2 1 0\n";
    CHECK_THROWS_AS(parse_table(cyclic, "x", TableValidation::strict), ParseError);
    CHECK_NOTHROW(parse_table(cyclic, "x", TableValidation::structural));
    CHECK_THROWS_AS(load_table("/nonexistent/ordkit/table"), ParseError);
}

TEST_CASE("tabulate reproduces the dilator") {
    for (const char* spec : {"scaled_sum(fin:1)", "prod_omega(fin:1)", "const(fin:1,0)"}) {
        auto d = parse_dilator_spec(spec);
        auto t = tabulate(*d, 3, 3);
        INFO(spec);
        CHECK(check_coherence(*t, 3, 1).pass);
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(t->enumerate(n, 1).size() >= d->enumerate(n, 3).size());
        CHECK(table_to_text(*tabulate(*d, 3, 3)) == table_to_text(*t));
    }
}
