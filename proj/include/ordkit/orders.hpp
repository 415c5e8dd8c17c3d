#pragma once

#include "ordkit/cursor.hpp"
#include "ordkit/term.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordkit {

/// A linear order given by decision procedures on terms. Implementations are
/// immutable and may be shared between threads.
class Order {
public:
    virtual ~Order() = default;

    /// Canonical spec text. Ambient orders are compared by this string.
    virtual std::string spec() const = 0;

    virtual bool member(const Term& t) const = 0;

    /// Empty for members; otherwise names the violated formation rule.
    virtual std::string why_not_member(const Term& t) const;

    /// Strict order. Only specified on members; on raw trees it is total
    /// and deterministic but otherwise unconstrained.
    virtual bool less(const Term& a, const Term& b) const = 0;

    /// Structural size used to bound enumerations. Always >= 1 on members.
    virtual std::size_t length(const Term& t) const = 0;

    /// Every member of length <= max_len, each exactly once, in an
    /// unspecified order. Throws Unbounded when that set is infinite.
    virtual std::vector<Term> fragment(std::size_t max_len) const = 0;

    virtual void print(const Term& t, std::string& out) const = 0;
    virtual Term parse(Cursor& in) const = 0;
};

using OrderPtr = std::shared_ptr<const Order>;

/// Action of an order embedding on elements.
using ElementMap = std::function<Term(const Term&)>;

/// A finite set {0,...,n-1}-valued: sorted, duplicate free.
using IndexSet = std::vector<std::size_t>;

/// The order n = {0 < 1 < ... < n-1}.
class FiniteOrder final : public Order {
public:
    explicit FiniteOrder(std::size_t size) : size_(size) {}

    std::size_t size() const noexcept { return size_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term&) const override { return 1; }
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    std::size_t size_;
};

/// The naturals. Not enumerable.
class NatOrder final : public Order {
public:
    std::string spec() const override { return "nat"; }
    bool member(const Term& t) const override { return t.is(Tag::Nat); }
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term&) const override { return 1; }
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;
};

std::shared_ptr<const FiniteOrder> fin_order(std::size_t size);
OrderPtr nat_order();

bool leq(const Order& order, const Term& a, const Term& b);
/// -1, 0 or 1; 0 means structurally equal.
int compare(const Order& order, const Term& a, const Term& b);
std::string show(const Order& order, const Term& t);
/// Parses a complete element text; does not check membership.
Term parse_term(const Order& order, std::string_view text);

/// Stable merge sort. Unlike std::sort it stays well defined when `less`
/// is not a strict weak order, which matters when auditing broken orders.
template <class T, class Less>
void robust_sort(std::vector<T>& items, Less less) {
    if (items.size() < 2)
        return;
    std::vector<T> buffer(items.size(), items.front());
    for (std::size_t width = 1; width < items.size(); width *= 2) {
        for (std::size_t lo = 0; lo < items.size(); lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, items.size());
            const std::size_t hi = std::min(lo + 2 * width, items.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi)
                buffer[k++] = less(items[j], items[i]) ? items[j++] : items[i++];
            while (i < mid)
                buffer[k++] = items[i++];
            while (j < hi)
                buffer[k++] = items[j++];
        }
        items.swap(buffer);
    }
}

/// Sorts by the order relation; ties and inconsistencies fall back on the
/// incoming order, so callers pre-sort for determinism.
void sort_terms(const Order& order, std::vector<Term>& terms);

/// All members of length <= max_len, first ordered lexicographically by
/// serialized form and then (stably) by the order itself.
std::vector<Term> enumerate_terms(const Order& order, std::size_t max_len);

/// Strictly increasing map n -> m.
class OrderEmbedding {
public:
    OrderEmbedding(std::size_t domain, std::size_t codomain, std::vector<std::size_t> images);

    static OrderEmbedding identity(std::size_t n);

    std::size_t domain() const noexcept { return images_.size(); }
    std::size_t codomain() const noexcept { return codomain_; }
    std::span<const std::size_t> images() const noexcept { return images_; }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }

    /// The action on elements of fin:n / nat.
    ElementMap as_element_map() const;

    friend bool operator==(const OrderEmbedding&, const OrderEmbedding&) = default;

private:
    std::size_t codomain_;
    std::vector<std::size_t> images_;
};

/// g ∘ f. Requires codomain(f) = domain(g).
OrderEmbedding compose(const OrderEmbedding& g, const OrderEmbedding& f);

/// Every embedding n -> m, images in lexicographic order.
std::vector<OrderEmbedding> all_embeddings(std::size_t n, std::size_t m);

/// [f]^{<ω} on index sets.
IndexSet finite_image(const OrderEmbedding& f, const IndexSet& a);
IndexSet full_set(std::size_t n);
std::string show_index_set(const IndexSet& a);

/// Finite subset of an ambient order, stored strictly increasing.
class FinSubset {
public:
    /// Sorts and deduplicates; throws DomainError on non-members.
    FinSubset(OrderPtr ambient, std::vector<Term> elements);

    const Order& ambient() const noexcept { return *ambient_; }
    const OrderPtr& ambient_ptr() const noexcept { return ambient_; }
    std::span<const Term> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    friend bool operator==(const FinSubset& a, const FinSubset& b);

private:
    OrderPtr ambient_;
    std::vector<Term> elements_;
};

/// a <^fin b: every s in a lies below some t in b.
bool fin_less(const FinSubset& a, const FinSubset& b);
/// s <^fin b and a <^fin t.
bool fin_less(const Order& order, const Term& s, std::span<const Term> b);
bool fin_less(const Order& order, std::span<const Term> a, const Term& t);

/// en_a: position i ↦ i-th smallest element.
std::vector<Term> enumerate_increasing(const FinSubset& a);

/// |ι_a^c|: the positions of a's elements inside c. Throws if a ⊄ c.
OrderEmbedding inclusion_index(const FinSubset& a, const FinSubset& c);
OrderEmbedding inclusion_index(const Order& order, std::span<const Term> a, std::span<const Term> c);

/// [f]^{<ω}(a), re-sorted in `target`. Throws if f leaves the target or
/// collapses elements.
FinSubset finite_image(const ElementMap& f, OrderPtr target, const FinSubset& a);

/// a ∪ b by sorted merge.
FinSubset set_union(const FinSubset& a, const FinSubset& b);
std::vector<Term> sorted_union(const Order& order, std::span<const Term> a, std::span<const Term> b);

/// Sorted, duplicate-free copy (robust against inconsistent orders).
std::vector<Term> sorted_set(const Order& order, std::vector<Term> elements);

} // namespace ordkit
