#include "ordkit/orders.hpp"

#include "ordkit/error.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace ordkit {

// ---------------------------------------------------------------------------
// fin:k and nat

std::string FiniteOrder::spec() const { return "fin:" + std::to_string(size_); }

bool FiniteOrder::member(const Term& t) const { return t.is(Tag::Nat) && t.value() < size_; }

bool FiniteOrder::less(const Term& a, const Term& b) const { return a.value() < b.value(); }

std::vector<Term> FiniteOrder::fragment(std::size_t max_len) const {
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out.push_back(Term::nat(i));
    return out;
}

void FiniteOrder::print(const Term& t, std::string& out) const { out += std::to_string(t.value()); }

Term FiniteOrder::parse(Cursor& in) const { return Term::nat(in.parse_uint()); }

bool NatOrder::less(const Term& a, const Term& b) const { return a.value() < b.value(); }

std::vector<Term> NatOrder::fragment(std::size_t max_len) const {
    if (max_len == 0)
        return {};
    throw Unbounded("order 'nat' has infinitely many elements of each length");
}

void NatOrder::print(const Term& t, std::string& out) const { out += std::to_string(t.value()); }

Term NatOrder::parse(Cursor& in) const { return Term::nat(in.parse_uint()); }

std::shared_ptr<const FiniteOrder> fin_order(std::size_t size) {
    // Small sizes are requested constantly by dilator restrictions.
    static const auto cache = [] {
        std::array<std::shared_ptr<const FiniteOrder>, 64> c;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = std::make_shared<const FiniteOrder>(i);
        return c;
    }();
    if (size < cache.size())
        return cache[size];
    return std::make_shared<const FiniteOrder>(size);
}

OrderPtr nat_order() {
    static const OrderPtr nat = std::make_shared<const NatOrder>();
    return nat;
}

// ---------------------------------------------------------------------------
// generic helpers

bool leq(const Order& order, const Term& a, const Term& b) { return a == b || order.less(a, b); }

int compare(const Order& order, const Term& a, const Term& b) {
    if (a == b)
        return 0;
    return order.less(a, b) ? -1 : 1;
}

std::string show(const Order& order, const Term& t) {
    std::string out;
    order.print(t, out);
    return out;
}

Term parse_term(const Order& order, std::string_view text) {
    Cursor in(text);
    Term t = order.parse(in);
    in.expect_end();
    return t;
}

void sort_terms(const Order& order, std::vector<Term>& terms) {
    robust_sort(terms, [&](const Term& a, const Term& b) { return order.less(a, b); });
}

std::vector<Term> enumerate_terms(const Order& order, std::size_t max_len) {
    std::vector<Term> terms = order.fragment(max_len);
    std::vector<std::pair<std::string, Term>> keyed;
    keyed.reserve(terms.size());
    for (auto& t : terms)
        keyed.emplace_back(show(order, t), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    terms.clear();
    for (auto& [_, t] : keyed)
        terms.push_back(std::move(t));
    sort_terms(order, terms);
    return terms;
}

// ---------------------------------------------------------------------------
// embeddings of finite orders

OrderEmbedding::OrderEmbedding(std::size_t domain, std::size_t codomain, std::vector<std::size_t> images)
    : codomain_(codomain), images_(std::move(images)) {
    if (images_.size() != domain)
        throw DomainError("embedding: " + std::to_string(images_.size()) + " images for domain " +
                          std::to_string(domain));
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] >= codomain)
            throw DomainError("embedding: image " + std::to_string(images_[i]) + " outside codomain " +
                              std::to_string(codomain));
        if (i > 0 && images_[i - 1] >= images_[i])
            throw DomainError("embedding: images are not strictly increasing");
    }
}

OrderEmbedding OrderEmbedding::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = i;
    return {n, n, std::move(images)};
}

ElementMap OrderEmbedding::as_element_map() const {
    return [images = images_](const Term& t) {
        if (!t.is(Tag::Nat) || t.value() >= images.size())
            throw DomainError("embedding applied outside its domain");
        return Term::nat(images[t.value()]);
    };
}

OrderEmbedding compose(const OrderEmbedding& g, const OrderEmbedding& f) {
    if (f.codomain() != g.domain())
        throw DomainError("compose: codomain " + std::to_string(f.codomain()) + " does not match domain " +
                          std::to_string(g.domain()));
    std::vector<std::size_t> images;
    images.reserve(f.domain());
    for (std::size_t i : f.images())
        images.push_back(g(i));
    return {f.domain(), g.codomain(), std::move(images)};
}

std::vector<OrderEmbedding> all_embeddings(std::size_t n, std::size_t m) {
    std::vector<OrderEmbedding> out;
    if (n > m)
        return out;
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = i;
    while (true) {
        out.emplace_back(n, m, images);
        // next n-combination of {0..m-1}
        std::size_t i = n;
        while (i > 0 && images[i - 1] == m - n + i - 1)
            --i;
        if (i == 0)
            break;
        ++images[i - 1];
        for (std::size_t j = i; j < n; ++j)
            images[j] = images[j - 1] + 1;
    }
    return out;
}

IndexSet finite_image(const OrderEmbedding& f, const IndexSet& a) {
    IndexSet out;
    out.reserve(a.size());
    for (std::size_t i : a) {
        if (i >= f.domain())
            throw DomainError("finite_image: element " + std::to_string(i) + " outside domain");
        out.push_back(f(i));
    }
    return out;
}

IndexSet full_set(std::size_t n) {
    IndexSet out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

std::string show_index_set(const IndexSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(a[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// finite subsets

std::vector<Term> sorted_set(const Order& order, std::vector<Term> elements) {
    robust_sort(elements, [&](const Term& a, const Term& b) { return order.less(a, b); });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

FinSubset::FinSubset(OrderPtr ambient, std::vector<Term> elements) : ambient_(std::move(ambient)) {
    for (const auto& e : elements)
        if (!ambient_->member(e))
            throw DomainError("element " + show(*ambient_, e) + " is not in " + ambient_->spec());
    elements_ = sorted_set(*ambient_, std::move(elements));
}

bool operator==(const FinSubset& a, const FinSubset& b) {
    return a.elements_ == b.elements_ && (a.ambient_ == b.ambient_ || a.ambient_->spec() == b.ambient_->spec());
}

namespace {

void require_same_ambient(const FinSubset& a, const FinSubset& b) {
    if (a.ambient_ptr() != b.ambient_ptr() && a.ambient().spec() != b.ambient().spec())
        throw DomainError("ambient mismatch: " + a.ambient().spec() + " vs " + b.ambient().spec());
}

} // namespace

bool fin_less(const Order& order, const Term& s, std::span<const Term> b) {
    return std::any_of(b.begin(), b.end(), [&](const Term& t) { return order.less(s, t); });
}

bool fin_less(const Order& order, std::span<const Term> a, const Term& t) {
    return std::all_of(a.begin(), a.end(), [&](const Term& s) { return order.less(s, t); });
}

bool fin_less(const FinSubset& a, const FinSubset& b) {
    require_same_ambient(a, b);
    return std::all_of(a.elements().begin(), a.elements().end(),
                       [&](const Term& s) { return fin_less(a.ambient(), s, b.elements()); });
}

std::vector<Term> enumerate_increasing(const FinSubset& a) { return {a.elements().begin(), a.elements().end()}; }

OrderEmbedding inclusion_index(const Order& order, std::span<const Term> a, std::span<const Term> c) {
    std::vector<std::size_t> images;
    images.reserve(a.size());
    std::size_t j = 0;
    for (const auto& s : a) {
        while (j < c.size() && !(c[j] == s) && order.less(c[j], s))
            ++j;
        if (j == c.size() || !(c[j] == s))
            throw DomainError("inclusion_index: " + show(order, s) + " is not in the superset");
        images.push_back(j++);
    }
    return {a.size(), c.size(), std::move(images)};
}

OrderEmbedding inclusion_index(const FinSubset& a, const FinSubset& c) {
    require_same_ambient(a, c);
    return inclusion_index(a.ambient(), a.elements(), c.elements());
}

FinSubset finite_image(const ElementMap& f, OrderPtr target, const FinSubset& a) {
    std::vector<Term> image;
    image.reserve(a.size());
    for (const auto& s : a.elements())
        image.push_back(f(s));
    FinSubset out(std::move(target), std::move(image));
    if (out.size() != a.size())
        throw DomainError("finite_image: map is not injective on the subset");
    return out;
}

std::vector<Term> sorted_union(const Order& order, std::span<const Term> a, std::span<const Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (order.less(a[i], b[j])) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

FinSubset set_union(const FinSubset& a, const FinSubset& b) {
    require_same_ambient(a, b);
    return FinSubset(a.ambient_ptr(), sorted_union(a.ambient(), a.elements(), b.elements()));
}

} // namespace ordkit

namespace ordkit {

std::string Order::why_not_member(const Term& t) const {
    if (member(t))
        return {};
    return show(*this, t) + " is not an element of " + spec();
}

} // namespace ordkit
