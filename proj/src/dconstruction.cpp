#include "ordkit/dconstruction.hpp"

#include "ordkit/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace ordkit {

bool d_member(const CodedDilator& t, const Order& x, const DElement& e) {
    const auto& a = e.support;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!x.member(a[i]))
            return false;
        if (i && !x.less(a[i - 1], a[i]))
            return false;
    }
    const std::size_t n = a.size();
    if (auto bound = t.arity_bound(); bound && n > *bound)
        return false;
    return t.member(n, e.code) && t.support(n, e.code) == full_set(n);
}

bool d_less(const CodedDilator& t, const Order& x, const DElement& a, const DElement& b) {
    const auto c = sorted_union(x, a.support, b.support);
    t.require_arity(c.size());
    const auto fa = inclusion_index(x, a.support, c);
    const auto fb = inclusion_index(x, b.support, c);
    return t.less(c.size(), t.map(fa, a.code), t.map(fb, b.code));
}

DElement d_map(const ElementMap& f, const Order& target, const DElement& e) {
    std::vector<Term> image;
    image.reserve(e.support.size());
    for (const auto& s : e.support)
        image.push_back(f(s));
    auto sorted = sorted_set(target, image);
    if (sorted.size() != image.size())
        throw DomainError("d_map: the map is not injective on the support");
    return {std::move(sorted), e.code};
}

Term eta(const OrderTransformer& t, const DElement& e) {
    const auto& a = e.support;
    return t.map([&](const Term& i) { return a.at(static_cast<std::size_t>(i.value())); }, e.code);
}

DElement eta_inverse(const OrderTransformer& t, const Order& x, const Term& e) {
    auto a = t.support(x, e);
    std::unordered_map<Term, std::uint64_t, TermHash> position;
    for (std::size_t i = 0; i < a.size(); ++i)
        position.emplace(a[i], i);
    Term code = t.map(
        [&](const Term& y) {
            auto it = position.find(y);
            if (it == position.end())
                throw DomainError("eta_inverse: the transformer consulted a point outside the support");
            return Term::nat(it->second);
        },
        e);
    return {std::move(a), std::move(code)};
}

DElement eta_lift(const CodeFamily& eta0, const DElement& e) { return {e.support, eta0(e.support.size(), e.code)}; }

std::vector<Term> full_support_codes(const CodedDilator& t, std::size_t n, std::size_t max_len) {
    std::vector<Term> out;
    const IndexSet full = full_set(n);
    for (auto& c : t.enumerate(n, max_len))
        if (t.code_length(c) <= max_len && t.support(n, c) == full)
            out.push_back(std::move(c));
    return out;
}

std::vector<DElement> d_enumerate(const CodedDilator& t, const Order& x, std::size_t max_len) {
    const std::vector<Term> pool = enumerate_terms(x, max_len);
    // Codes carry at least one atom per support point, so |a| <= max_len
    // for unbounded dilators; bounded ones stop at their arity.
    std::size_t n_max = std::min(pool.size(), max_len);
    if (auto bound = t.arity_bound()) {
        n_max = pool.size();
        if (n_max > *bound)
            throw ArityExceeded(n_max, *bound);
    }
    std::vector<DElement> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto codes = full_support_codes(t, n, max_len);
        if (codes.empty())
            continue;
        // all n-element subsets of the sorted pool, in lexicographic order
        std::vector<std::size_t> pick(n);
        for (std::size_t i = 0; i < n; ++i)
            pick[i] = i;
        for (;;) {
            std::vector<Term> a;
            a.reserve(n);
            for (auto i : pick)
                a.push_back(pool[i]);
            for (const auto& c : codes)
                out.push_back({a, c});
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == pool.size() - n + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<std::pair<std::string, DElement>> keyed;
    keyed.reserve(out.size());
    for (auto& e : out)
        keyed.emplace_back(show_delement(t, x, e), std::move(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    out.clear();
    for (auto& [_, e] : keyed)
        out.push_back(std::move(e));
    robust_sort(out, [&](const DElement& p, const DElement& q) { return d_less(t, x, p, q); });
    return out;
}

std::string show_delement(const CodedDilator& t, const Order& x, const DElement& e) {
    std::string out = "<{";
    for (std::size_t i = 0; i < e.support.size(); ++i) {
        if (i)
            out += ',';
        x.print(e.support[i], out);
    }
    out += "}; ";
    t.print_code(e.code, out);
    out += '>';
    return out;
}

DElement parse_delement(const CodedDilator& t, const Order& x, Cursor& in) {
    in.expect("<");
    in.expect("{");
    DElement e;
    if (!in.consume("}")) {
        do {
            e.support.push_back(x.parse(in));
        } while (in.consume(","));
        in.expect("}");
    }
    in.expect(";");
    e.code = t.parse_code(in);
    in.expect(">");
    return e;
}

DElement parse_delement(const CodedDilator& t, const Order& x, std::string_view text) {
    Cursor in(text);
    DElement e = parse_delement(t, x, in);
    in.expect_end();
    return e;
}

} // namespace ordkit
