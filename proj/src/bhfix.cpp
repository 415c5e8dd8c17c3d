#include "ordkit/bhfix.hpp"

#include "ordkit/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace ordkit {

Term collapse_term(Term code, std::vector<Term> indices) {
    std::vector<Term> args;
    args.reserve(indices.size() + 1);
    args.push_back(std::move(code));
    for (auto& s : indices)
        args.push_back(std::move(s));
    return Term::node(Tag::Collapse, std::move(args));
}

const Term& collapse_code(const Term& t) { return t.arg(0); }

std::span<const Term> collapse_indices(const Term& t) {
    if (!t.is(Tag::Collapse) || t.arity() == 0)
        return {};
    return t.args().subspan(1);
}

std::size_t v_len(const Term& t) {
    std::size_t len = 1;
    for (const auto& s : collapse_indices(t))
        len += 2 * v_len(s);
    return len;
}

bool BhfixOrder::member(const Term& t) const {
    if (!t.is(Tag::Collapse) || t.arity() == 0)
        return false;
    const auto s = collapse_indices(t);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!member(s[i]))
            return false;
        if (i && !less(s[i - 1], s[i]))
            return false;
    }
    const std::size_t n = s.size();
    dilator_->require_arity(n);
    const Term& code = collapse_code(t);
    return dilator_->member(n, code) && dilator_->support(n, code) == full_set(n);
}

BhfixOrder::Merge BhfixOrder::merge_indices(std::span<const Term> s, std::span<const Term> t) const {
    Merge m;
    std::size_t i = 0, j = 0;
    while (i < s.size() || j < t.size()) {
        if (j == t.size() || (i < s.size() && !(s[i] == t[j]) && less(s[i], t[j]))) {
            m.f.push_back(m.k++);
            ++i;
        } else if (i == s.size() || !(s[i] == t[j])) {
            m.g.push_back(m.k++);
            ++j;
        } else {
            m.f.push_back(m.k);
            m.g.push_back(m.k++);
            ++i;
            ++j;
        }
    }
    return m;
}

struct BhfixOrder::Memo {
    struct PairKey {
        Term a, b;
        bool operator==(const PairKey&) const = default;
    };
    struct PairHash {
        std::size_t operator()(const PairKey& p) const noexcept {
            return p.a.hash() * 0x9e3779b97f4a7c15ULL ^ p.b.hash();
        }
    };
    struct MapKey {
        Term code;
        std::uint64_t packed;
        bool operator==(const MapKey&) const = default;
    };
    struct MapHash {
        std::size_t operator()(const MapKey& m) const noexcept {
            return m.code.hash() * 0x9e3779b97f4a7c15ULL ^ m.packed;
        }
    };
    std::mutex mutex;
    std::unordered_map<PairKey, bool, PairHash> less;
    std::unordered_map<MapKey, Term, MapHash> maps;
};

BhfixOrder::BhfixOrder(DilatorPtr dilator) : dilator_(std::move(dilator)), memo_(std::make_unique<Memo>()) {}
BhfixOrder::~BhfixOrder() = default;

bool BhfixOrder::less_memo(const Term& a, const Term& b) const {
    Memo::PairKey key{a, b};
    {
        std::lock_guard lock(memo_->mutex);
        if (auto it = memo_->less.find(key); it != memo_->less.end())
            return it->second;
    }
    const bool r = less_impl(a, b, nullptr);
    std::lock_guard lock(memo_->mutex);
    memo_->less.emplace(std::move(key), r);
    return r;
}

Term BhfixOrder::mapped_code(const Term& code, std::span<const std::size_t> images, std::size_t k) const {
    // 4 bits per image and for k; larger diagrams are not cached
    const bool cacheable = k < 16 && images.size() <= 14;
    std::uint64_t packed = k;
    if (cacheable) {
        for (std::size_t v : images)
            packed = packed << 4 | v;
        packed |= std::uint64_t{images.size()} << 60;
        std::lock_guard lock(memo_->mutex);
        if (auto it = memo_->maps.find({code, packed}); it != memo_->maps.end())
            return it->second;
    }
    const OrderEmbedding f(images.size(), k, {images.begin(), images.end()});
    Term out = dilator_->map(f, code);
    if (cacheable) {
        std::lock_guard lock(memo_->mutex);
        memo_->maps.emplace(Memo::MapKey{code, packed}, out);
    }
    return out;
}

bool BhfixOrder::less_impl(const Term& a, const Term& b, const Tracer* trace) const {
    if (!a.is(Tag::Collapse) || !b.is(Tag::Collapse) || a.arity() == 0 || b.arity() == 0)
        return Term::structural_less(a, b);
    const auto s = collapse_indices(a);
    const auto t = collapse_indices(b);
    const std::size_t here = trace ? v_len(a) + v_len(b) : 0;
    auto rec = [&](const Term& x, const Term& y) {
        if (!trace)
            return less_memo(x, y);
        (*trace)(here, v_len(x) + v_len(y));
        return less_impl(x, y, trace);
    };

    // s below or equal to the last index of t
    if (!t.empty()) {
        const Term& last = t.back();
        if (a == last || rec(a, last))
            return true;
    }

    // T_f(σ) < T_g(τ) in T_k, and s_{n-1} < t or n = 0
    Merge m;
    m.f.reserve(s.size());
    m.g.reserve(t.size());
    {
        std::size_t i = 0, j = 0;
        while (i < s.size() || j < t.size()) {
            if (i < s.size() && j < t.size() && s[i] == t[j]) {
                m.f.push_back(m.k);
                m.g.push_back(m.k++);
                ++i;
                ++j;
            } else if (j == t.size() || (i < s.size() && rec(s[i], t[j]))) {
                m.f.push_back(m.k++);
                ++i;
            } else {
                m.g.push_back(m.k++);
                ++j;
            }
        }
    }
    dilator_->require_arity(m.k);
    if (!dilator_->less(m.k, mapped_code(collapse_code(a), m.f, m.k), mapped_code(collapse_code(b), m.g, m.k)))
        return false;
    return s.empty() || rec(s.back(), b);
}

bool BhfixOrder::less(const Term& a, const Term& b) const { return less_impl(a, b, nullptr); }

bool BhfixOrder::less_traced(const Term& a, const Term& b, const Tracer& trace) const {
    return less_impl(a, b, &trace);
}

std::vector<Term> BhfixOrder::fragment(std::size_t max_len) const { return fragment_impl(max_len, max_len); }

std::vector<Term> BhfixOrder::fragment_impl(std::size_t max_len, std::size_t code_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    // Indices have v_len <= (max_len - 1) / 2; take them sorted so that
    // strictly increasing index lists are exactly the subsets.
    const std::size_t inner = (max_len - 1) / 2;
    std::vector<Term> pool = inner ? fragment_impl(inner, code_len) : std::vector<Term>{};
    {
        std::vector<std::pair<std::string, Term>> keyed;
        for (auto& p : pool)
            keyed.emplace_back(show(*this, p), std::move(p));
        std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        pool.clear();
        for (auto& [_, p] : keyed)
            pool.push_back(std::move(p));
        sort_terms(*this, pool);
    }
    std::vector<std::size_t> lens;
    for (const auto& p : pool)
        lens.push_back(v_len(p));

    std::deque<std::vector<Term>> codes; // stable references while growing
    auto codes_at = [&](std::size_t n) -> const std::vector<Term>& {
        while (codes.size() <= n) {
            const std::size_t k = codes.size();
            dilator_->require_arity(k);
            codes.push_back(full_support_codes(*dilator_, k, code_len));
        }
        return codes[n];
    };

    std::vector<Term> chosen;
    auto extend = [&](auto& self, std::size_t from, std::size_t used) -> void {
        for (const auto& c : codes_at(chosen.size()))
            out.push_back(collapse_term(c, chosen));
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (used + 2 * lens[i] > max_len)
                continue;
            chosen.push_back(pool[i]);
            self(self, i + 1, used + 2 * lens[i]);
            chosen.pop_back();
        }
    };
    extend(extend, 0, 1);
    return out;
}

void BhfixOrder::print(const Term& t, std::string& out) const {
    out += "p(";
    dilator_->print_code(collapse_code(t), out);
    out += ';';
    const auto s = collapse_indices(t);
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += i ? "," : " ";
        print(s[i], out);
    }
    out += ')';
}

Term BhfixOrder::parse(Cursor& in) const {
    in.expect("p(");
    Term code = dilator_->parse_code(in);
    in.expect(";");
    std::vector<Term> indices;
    if (!in.consume(")")) {
        do {
            indices.push_back(parse(in));
        } while (in.consume(","));
        in.expect(")");
    }
    return collapse_term(std::move(code), std::move(indices));
}

Term collapse(const DElement& e) { return collapse_term(e.code, e.support); }

CollapseTarget canonical_target(const std::shared_ptr<const BhfixOrder>& fix) {
    return {fix, [](const DElement& e) { return collapse(e); }};
}

Term min_embed(const CollapseTarget& target, const Term& t) {
    if (!t.is(Tag::Collapse) || t.arity() == 0)
        throw DomainError("min_embed: not a collapse term");
    std::vector<Term> images;
    for (const auto& s : collapse_indices(t))
        images.push_back(min_embed(target, s));
    auto sorted = sorted_set(*target.order, images);
    if (sorted.size() != images.size())
        throw DomainError("min_embed: index images are not pairwise distinct");
    return target.collapse({std::move(sorted), collapse_code(t)});
}

} // namespace ordkit

namespace ordkit {

std::string BhfixOrder::why_not_member(const Term& t) const {
    if (!t.is(Tag::Collapse) || t.arity() == 0)
        return "not a term p(sigma; ...)";
    const auto s = collapse_indices(t);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (auto why = why_not_member(s[i]); !why.empty())
            return why;
        if (i && !less(s[i - 1], s[i]))
            return show(*this, t) + ": indices must be strictly increasing";
    }
    const std::size_t n = s.size();
    dilator_->require_arity(n);
    const Term& code = collapse_code(t);
    if (!dilator_->member(n, code))
        return show(*this, t) + ": " + dilator_->show_code(code) + " is not an element of T_" + std::to_string(n);
    if (dilator_->support(n, code) != full_set(n))
        return show(*this, t) + ": the support of " + dilator_->show_code(code) + " in T_" + std::to_string(n) +
               " is " + show_index_set(dilator_->support(n, code)) + ", not all of " + std::to_string(n);
    return {};
}

} // namespace ordkit
