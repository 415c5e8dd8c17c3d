#include "ordkit/notations.hpp"

#include "chains.hpp"
#include "ordkit/error.hpp"

#include <algorithm>
#include <numeric>

namespace ordkit {

Term zero() { return Term::leaf(Tag::Zero); }
Term omega_seq(std::vector<Term> entries) { return Term::node(Tag::Seq, std::move(entries)); }
Term eps(Term x) { return Term::node(Tag::Eps, {std::move(x)}); }
Term sum(std::vector<Term> summands) { return Term::node(Tag::Sum, std::move(summands)); }
Term big_omega() { return Term::leaf(Tag::Omega); }
Term big_eps(Term x) { return Term::node(Tag::Big, {std::move(x)}); }
Term theta(Term s) { return Term::node(Tag::Theta, {std::move(s)}); }
Term pad_left(Term y) { return Term::node(Tag::Left, {std::move(y)}); }
Term pad_mid() { return Term::leaf(Tag::Mid); }
Term pad_right(Term x) { return Term::node(Tag::Right, {std::move(x)}); }
Term bottom() { return Term::leaf(Tag::Bot); }
Term pair(Term a, Term b) { return Term::node(Tag::Pair, {std::move(a), std::move(b)}); }

namespace {

/// Lexicographic comparison of ω-sums: a proper prefix is smaller,
/// otherwise the first differing summand decides.
template <class Less>
bool sum_less(const Term& s, const Term& t, Less less) {
    const auto a = s.args();
    const auto b = t.args();
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t j = 0; j < common; ++j)
        if (!(a[j] == b[j]))
            return less(a[j], b[j]);
    return a.size() < b.size();
}

template <class Leq>
bool weakly_decreasing(std::span<const Term> xs, Leq leq_fn) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!leq_fn(xs[i], xs[i - 1]))
            return false;
    return true;
}

void print_list(const Order& order, std::span<const Term> xs, std::string& out) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        order.print(xs[i], out);
    }
}

std::vector<Term> parse_list(const Order& order, Cursor& in, std::string_view close) {
    std::vector<Term> xs;
    if (in.consume(close))
        return xs;
    do {
        xs.push_back(order.parse(in));
    } while (in.consume(","));
    in.expect(close);
    return xs;
}

detail::Pool pool_of(const Order& order, std::size_t max_len) {
    detail::Pool pool;
    auto terms = order.fragment(max_len);
    std::vector<std::size_t> idx(terms.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> lens(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        lens[i] = order.length(terms[i]);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lens[a] < lens[b]; });
    for (std::size_t i : idx)
        pool.add(terms[i], lens[i]);
    return pool;
}

} // namespace

// ---------------------------------------------------------------------------
// ω^X

std::string OmegaOrder::spec() const { return "omega(" + base_->spec() + ")"; }

bool OmegaOrder::member(const Term& t) const {
    if (!t.is(Tag::Seq))
        return false;
    for (const auto& x : t.args())
        if (!base_->member(x))
            return false;
    return weakly_decreasing(t.args(), [&](const Term& a, const Term& b) { return leq(*base_, a, b); });
}

bool OmegaOrder::less(const Term& a, const Term& b) const {
    return sum_less(a, b, [&](const Term& x, const Term& y) { return base_->less(x, y); });
}

std::size_t OmegaOrder::length(const Term& t) const {
    std::size_t n = 0;
    for (const auto& x : t.args())
        n += base_->length(x);
    return std::max<std::size_t>(n, 1);
}

std::vector<Term> OmegaOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    out.push_back(omega_seq({}));
    const auto pool = pool_of(*base_, max_len);
    detail::for_each_chain(
        pool, 1, max_len, [&](const Term& prev, const Term& next) { return leq(*base_, next, prev); },
        [&](const std::vector<Term>& chain) { out.push_back(omega_seq(chain)); });
    return out;
}

void OmegaOrder::print(const Term& t, std::string& out) const {
    out += "w[";
    print_list(*base_, t.args(), out);
    out += ']';
}

Term OmegaOrder::parse(Cursor& in) const {
    in.expect("w[");
    return omega_seq(parse_list(*base_, in, "]"));
}

// ---------------------------------------------------------------------------
// ε_X

std::string EpsilonOrder::spec() const { return "epsilon(" + base_->spec() + ")"; }

bool EpsilonOrder::member(const Term& t) const {
    switch (t.tag()) {
    case Tag::Zero:
        return true;
    case Tag::Eps:
        return t.arity() == 1 && base_->member(t.arg(0));
    case Tag::Sum: {
        if (t.arity() == 0)
            return false;
        for (const auto& s : t.args())
            if (!member(s))
                return false;
        if (t.arity() == 1)
            return !t.arg(0).is(Tag::Eps);
        return weakly_decreasing(t.args(), [&](const Term& a, const Term& b) { return leq(*this, a, b); });
    }
    default:
        return false;
    }
}

bool EpsilonOrder::less(const Term& s, const Term& t) const {
    switch (s.tag()) {
    case Tag::Zero:
        return !t.is(Tag::Zero);
    case Tag::Eps:
        if (t.is(Tag::Eps))
            return base_->less(s.arg(0), t.arg(0));
        if (t.is(Tag::Sum))
            return leq(*this, s, t.arg(0));
        return false;
    case Tag::Sum:
        if (t.is(Tag::Eps))
            return less(s.arg(0), t);
        if (t.is(Tag::Sum))
            return sum_less(s, t, [&](const Term& a, const Term& b) { return less(a, b); });
        return false;
    default:
        return false;
    }
}

std::size_t EpsilonOrder::length(const Term& t) const {
    switch (t.tag()) {
    case Tag::Eps:
        return 1 + base_->length(t.arg(0));
    case Tag::Sum: {
        std::size_t n = 1;
        for (const auto& s : t.args())
            n += length(s);
        return n;
    }
    default:
        return 1;
    }
}

std::vector<Term> EpsilonOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    const auto atoms = pool_of(*base_, max_len - 1);
    detail::Pool pool;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Term> layer;
        if (len == 1)
            layer.push_back(zero());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms.lengths[i] + 1 == len)
                layer.push_back(eps(atoms.terms[i]));
        if (len >= 2) {
            detail::for_each_chain(
                pool, len - 1, len - 1, [&](const Term& prev, const Term& next) { return leq(*this, next, prev); },
                [&](const std::vector<Term>& chain) {
                    if (chain.size() == 1 && chain[0].is(Tag::Eps))
                        return;
                    layer.push_back(sum(chain));
                });
        }
        for (auto& t : layer) {
            out.push_back(t);
            pool.add(std::move(t), len);
        }
    }
    return out;
}

void EpsilonOrder::print(const Term& t, std::string& out) const {
    switch (t.tag()) {
    case Tag::Zero:
        out += '0';
        break;
    case Tag::Eps:
        out += "e[";
        base_->print(t.arg(0), out);
        out += ']';
        break;
    case Tag::Sum:
        out += "w(";
        print_list(*this, t.args(), out);
        out += ')';
        break;
    default:
        out += "<?>";
    }
}

Term EpsilonOrder::parse(Cursor& in) const {
    if (in.consume("e[")) {
        Term x = base_->parse(in);
        in.expect("]");
        return eps(std::move(x));
    }
    if (in.consume("w(")) {
        auto xs = parse_list(*this, in, ")");
        if (xs.empty())
            in.fail("an ω-sum needs at least one summand");
        return sum(std::move(xs));
    }
    if (in.consume("0"))
        return zero();
    in.fail("expected an ε-term (0, e[x] or w(...))");
}

Term eps_degree(const Term& t) {
    switch (t.tag()) {
    case Tag::Eps:
        return t.arg(0);
    case Tag::Sum:
        return eps_degree(t.arg(0));
    default:
        return bottom();
    }
}

// ---------------------------------------------------------------------------
// ϑ_X

std::string ThetaOrder::spec() const { return "theta(" + base_->spec() + ")"; }

bool ThetaOrder::member(const Term& t) const {
    switch (t.tag()) {
    case Tag::Zero:
    case Tag::Omega:
        return true;
    case Tag::Big:
        return t.arity() == 1 && base_->member(t.arg(0));
    case Tag::Theta:
        return t.arity() == 1 && member(t.arg(0));
    case Tag::Sum: {
        if (t.arity() == 0)
            return false;
        for (const auto& s : t.args())
            if (!member(s))
                return false;
        if (t.arity() == 1) {
            const Tag head = t.arg(0).tag();
            return head != Tag::Omega && head != Tag::Big && head != Tag::Theta;
        }
        return weakly_decreasing(t.args(), [&](const Term& a, const Term& b) { return leq(*this, a, b); });
    }
    default:
        return false;
    }
}

Term ThetaOrder::star(const Term& t) const {
    switch (t.tag()) {
    case Tag::Theta:
        return t;
    case Tag::Sum: {
        Term best = star(t.arg(0));
        for (std::size_t i = 1; i < t.arity(); ++i) {
            Term c = star(t.arg(i));
            if (less(best, c))
                best = std::move(c);
        }
        return best;
    }
    default:
        return zero();
    }
}

bool ThetaOrder::less(const Term& s, const Term& t) const {
    switch (s.tag()) {
    case Tag::Zero:
        return !t.is(Tag::Zero);
    case Tag::Omega:
        if (t.is(Tag::Big))
            return true;
        if (t.is(Tag::Sum))
            return leq(*this, s, t.arg(0));
        return false;
    case Tag::Big:
        if (t.is(Tag::Big))
            return base_->less(s.arg(0), t.arg(0));
        if (t.is(Tag::Sum))
            return leq(*this, s, t.arg(0));
        return false;
    case Tag::Theta:
        switch (t.tag()) {
        case Tag::Theta: {
            const Term& sp = s.arg(0);
            const Term& tp = t.arg(0);
            if (less(sp, tp) && less(star(sp), t))
                return true;
            return leq(*this, s, star(tp));
        }
        case Tag::Omega:
        case Tag::Big:
            return true;
        case Tag::Sum:
            return leq(*this, s, t.arg(0));
        default:
            return false;
        }
    case Tag::Sum:
        switch (t.tag()) {
        case Tag::Omega:
        case Tag::Big:
        case Tag::Theta:
            return less(s.arg(0), t);
        case Tag::Sum:
            return sum_less(s, t, [&](const Term& a, const Term& b) { return less(a, b); });
        default:
            return false;
        }
    default:
        return false;
    }
}

std::size_t ThetaOrder::length(const Term& t) const {
    switch (t.tag()) {
    case Tag::Big:
        return 1 + base_->length(t.arg(0));
    case Tag::Theta:
        return 1 + length(t.arg(0));
    case Tag::Sum: {
        std::size_t n = 1;
        for (const auto& s : t.args())
            n += length(s);
        return n;
    }
    default:
        return 1;
    }
}

std::vector<Term> ThetaOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    const auto atoms = pool_of(*base_, max_len - 1);
    detail::Pool pool;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Term> layer;
        if (len == 1) {
            layer.push_back(zero());
            layer.push_back(big_omega());
        }
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms.lengths[i] + 1 == len)
                layer.push_back(big_eps(atoms.terms[i]));
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool.lengths[i] + 1 == len)
                layer.push_back(theta(pool.terms[i]));
        if (len >= 2) {
            detail::for_each_chain(
                pool, len - 1, len - 1, [&](const Term& prev, const Term& next) { return leq(*this, next, prev); },
                [&](const std::vector<Term>& chain) {
                    if (chain.size() == 1) {
                        const Tag head = chain[0].tag();
                        if (head == Tag::Omega || head == Tag::Big || head == Tag::Theta)
                            return;
                    }
                    layer.push_back(sum(chain));
                });
        }
        for (auto& t : layer) {
            out.push_back(t);
            pool.add(std::move(t), len);
        }
    }
    return out;
}

void ThetaOrder::print(const Term& t, std::string& out) const {
    switch (t.tag()) {
    case Tag::Zero:
        out += '0';
        break;
    case Tag::Omega:
        out += "Om";
        break;
    case Tag::Big:
        out += "E[";
        base_->print(t.arg(0), out);
        out += ']';
        break;
    case Tag::Theta:
        out += "th(";
        print(t.arg(0), out);
        out += ')';
        break;
    case Tag::Sum:
        out += "w(";
        print_list(*this, t.args(), out);
        out += ')';
        break;
    default:
        out += "<?>";
    }
}

Term ThetaOrder::parse(Cursor& in) const {
    if (in.consume("Om"))
        return big_omega();
    if (in.consume("E[")) {
        Term x = base_->parse(in);
        in.expect("]");
        return big_eps(std::move(x));
    }
    if (in.consume("th(")) {
        Term s = parse(in);
        in.expect(")");
        return theta(std::move(s));
    }
    if (in.consume("w(")) {
        auto xs = parse_list(*this, in, ")");
        if (xs.empty())
            in.fail("an ω-sum needs at least one summand");
        return sum(std::move(xs));
    }
    if (in.consume("0"))
        return zero();
    in.fail("expected a ϑ-term (0, Om, E[x], th(s) or w(...))");
}

// ---------------------------------------------------------------------------
// Y ∪ {Ω} ∪ X

namespace {

int pad_rank(const Term& t) {
    switch (t.tag()) {
    case Tag::Left:
        return 0;
    case Tag::Mid:
        return 1;
    case Tag::Right:
        return 2;
    default:
        return 3;
    }
}

} // namespace

std::string PadOrder::spec() const { return "pad(" + lower_->spec() + "," + upper_->spec() + ")"; }

bool PadOrder::member(const Term& t) const {
    switch (t.tag()) {
    case Tag::Left:
        return t.arity() == 1 && lower_->member(t.arg(0));
    case Tag::Mid:
        return true;
    case Tag::Right:
        return t.arity() == 1 && upper_->member(t.arg(0));
    default:
        return false;
    }
}

bool PadOrder::less(const Term& a, const Term& b) const {
    const int ra = pad_rank(a);
    const int rb = pad_rank(b);
    if (ra != rb)
        return ra < rb;
    if (a.is(Tag::Left))
        return lower_->less(a.arg(0), b.arg(0));
    if (a.is(Tag::Right))
        return upper_->less(a.arg(0), b.arg(0));
    return false;
}

std::size_t PadOrder::length(const Term& t) const {
    if (t.is(Tag::Left))
        return lower_->length(t.arg(0));
    if (t.is(Tag::Right))
        return upper_->length(t.arg(0));
    return 1;
}

std::vector<Term> PadOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    for (auto& y : lower_->fragment(max_len))
        out.push_back(pad_left(std::move(y)));
    out.push_back(pad_mid());
    for (auto& x : upper_->fragment(max_len))
        out.push_back(pad_right(std::move(x)));
    return out;
}

void PadOrder::print(const Term& t, std::string& out) const {
    switch (t.tag()) {
    case Tag::Left:
        out += "L:";
        lower_->print(t.arg(0), out);
        break;
    case Tag::Mid:
        out += "Om";
        break;
    case Tag::Right:
        out += "R:";
        upper_->print(t.arg(0), out);
        break;
    default:
        out += "<?>";
    }
}

Term PadOrder::parse(Cursor& in) const {
    if (in.consume("L:"))
        return pad_left(lower_->parse(in));
    if (in.consume("R:"))
        return pad_right(upper_->parse(in));
    if (in.consume("Om"))
        return pad_mid();
    in.fail("expected a padded element (L:y, Om or R:x)");
}

// ---------------------------------------------------------------------------
// {⊥} ∪ X and A × B

std::string BottomOrder::spec() const { return "bot+" + base_->spec(); }

bool BottomOrder::member(const Term& t) const { return t.is(Tag::Bot) || base_->member(t); }

bool BottomOrder::less(const Term& a, const Term& b) const {
    if (a.is(Tag::Bot))
        return !b.is(Tag::Bot);
    if (b.is(Tag::Bot))
        return false;
    return base_->less(a, b);
}

std::size_t BottomOrder::length(const Term& t) const { return t.is(Tag::Bot) ? 1 : base_->length(t); }

std::vector<Term> BottomOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    out.push_back(bottom());
    for (auto& x : base_->fragment(max_len))
        out.push_back(std::move(x));
    return out;
}

void BottomOrder::print(const Term& t, std::string& out) const {
    if (t.is(Tag::Bot))
        out += "bot";
    else
        base_->print(t, out);
}

Term BottomOrder::parse(Cursor& in) const {
    if (in.consume("bot"))
        return bottom();
    return base_->parse(in);
}

std::string PairOrder::spec() const { return "pair(" + first_->spec() + "," + second_->spec() + ")"; }

bool PairOrder::member(const Term& t) const {
    return t.is(Tag::Pair) && t.arity() == 2 && first_->member(t.arg(0)) && second_->member(t.arg(1));
}

bool PairOrder::less(const Term& a, const Term& b) const {
    if (!a.is(Tag::Pair) || !b.is(Tag::Pair) || a.arity() != 2 || b.arity() != 2)
        return Term::structural_less(a, b);
    if (!(a.arg(0) == b.arg(0)))
        return first_->less(a.arg(0), b.arg(0));
    return second_->less(a.arg(1), b.arg(1));
}

std::size_t PairOrder::length(const Term& t) const {
    if (!t.is(Tag::Pair) || t.arity() != 2)
        return 1;
    return first_->length(t.arg(0)) + second_->length(t.arg(1));
}

std::vector<Term> PairOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len < 2)
        return out;
    const auto as = pool_of(*first_, max_len - 1);
    const auto bs = pool_of(*second_, max_len - 1);
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < bs.size() && as.lengths[i] + bs.lengths[j] <= max_len; ++j)
            out.push_back(pair(as.terms[i], bs.terms[j]));
    return out;
}

void PairOrder::print(const Term& t, std::string& out) const {
    out += '(';
    first_->print(t.arg(0), out);
    out += ',';
    second_->print(t.arg(1), out);
    out += ')';
}

Term PairOrder::parse(Cursor& in) const {
    in.expect("(");
    Term a = first_->parse(in);
    in.expect(",");
    Term b = second_->parse(in);
    in.expect(")");
    return pair(std::move(a), std::move(b));
}

} // namespace ordkit

namespace ordkit {

std::string OmegaOrder::why_not_member(const Term& t) const {
    if (!t.is(Tag::Seq))
        return "not a sequence w[...]";
    for (const auto& x : t.args())
        if (auto why = base_->why_not_member(x); !why.empty())
            return why;
    if (!member(t))
        return show(*this, t) + ": entries must be weakly decreasing";
    return {};
}

std::string EpsilonOrder::why_not_member(const Term& t) const {
    switch (t.tag()) {
    case Tag::Zero:
        return {};
    case Tag::Eps:
        return base_->why_not_member(t.arg(0));
    case Tag::Sum:
        if (t.arity() == 0)
            return "w() needs at least one summand";
        for (const auto& s : t.args())
            if (auto why = why_not_member(s); !why.empty())
                return why;
        if (t.arity() == 1 && t.arg(0).is(Tag::Eps))
            return show(*this, t) + ": a single summand must not be of the form e[x]";
        if (!member(t))
            return show(*this, t) + ": summands must be weakly decreasing";
        return {};
    default:
        return "not a term of " + spec();
    }
}

std::string ThetaOrder::why_not_member(const Term& t) const {
    switch (t.tag()) {
    case Tag::Zero:
    case Tag::Omega:
        return {};
    case Tag::Big:
        return base_->why_not_member(t.arg(0));
    case Tag::Theta:
        return why_not_member(t.arg(0));
    case Tag::Sum:
        if (t.arity() == 0)
            return "w() needs at least one summand";
        for (const auto& s : t.args())
            if (auto why = why_not_member(s); !why.empty())
                return why;
        if (t.arity() == 1 && (t.arg(0).is(Tag::Omega) || t.arg(0).is(Tag::Big) || t.arg(0).is(Tag::Theta)))
            return show(*this, t) + ": a single summand must not be of the form Om, E[x] or th(s)";
        if (!member(t))
            return show(*this, t) + ": summands must be weakly decreasing";
        return {};
    default:
        return "not a term of " + spec();
    }
}

} // namespace ordkit
