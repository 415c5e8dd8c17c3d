#pragma once

#include "ordkit/orders.hpp"

#include <memory>
#include <vector>

namespace ordkit {

// Term builders. They do not validate; use the owning order's member().
Term zero();
Term omega_seq(std::vector<Term> entries);
Term eps(Term x);
Term sum(std::vector<Term> summands);
Term big_omega();
Term big_eps(Term x);
Term theta(Term s);
Term pad_left(Term y);
Term pad_mid();
Term pad_right(Term x);
Term bottom();
Term pair(Term a, Term b);

/// ω^X: weakly decreasing sequences <x0 ≥ ... ≥ x_{n-1}>, compared
/// lexicographically with proper prefixes below their extensions.
class OmegaOrder final : public Order {
public:
    explicit OmegaOrder(OrderPtr base) : base_(std::move(base)) {}

    const OrderPtr& base() const noexcept { return base_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    std::string why_not_member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    /// Sum of the entry lengths, and 1 for the empty sequence.
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    OrderPtr base_;
};

/// ε_X: terms 0, ε_x and ω^{t0}+...+ω^{tn} (n ≥ 0), membership and order
/// decided by one simultaneous recursion.
class EpsilonOrder final : public Order {
public:
    explicit EpsilonOrder(OrderPtr base) : base_(std::move(base)) {}

    const OrderPtr& base() const noexcept { return base_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    std::string why_not_member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    /// Node count: L(0) = 1, L(ε_x) = 1 + L_X(x), L(sum) = 1 + Σ L(t_i).
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    OrderPtr base_;
};

/// The ε-degree t* ∈ {⊥} ∪ X: 0* = ⊥, ε_x* = x, (ω^{t0}+...)* = t0*.
Term eps_degree(const Term& t);

/// ϑ_X: terms 0, Ω, 𝔈_x, ϑs and ω-sums, with the star map s ↦ s*
/// tracking the largest ϑ-subterm that is not hidden under another ϑ.
class ThetaOrder final : public Order {
public:
    explicit ThetaOrder(OrderPtr base) : base_(std::move(base)) {}

    const OrderPtr& base() const noexcept { return base_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    std::string why_not_member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    /// Node count, as for ε_X; guarantees length(star(s)) <= length(s).
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

    Term star(const Term& t) const;

private:
    OrderPtr base_;
};

/// Y ∪ {Ω} ∪ X, ordered as written.
class PadOrder final : public Order {
public:
    PadOrder(OrderPtr lower, OrderPtr upper) : lower_(std::move(lower)), upper_(std::move(upper)) {}

    const OrderPtr& lower() const noexcept { return lower_; }
    const OrderPtr& upper() const noexcept { return upper_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    OrderPtr lower_;
    OrderPtr upper_;
};

/// {⊥} ∪ X with ⊥ least.
class BottomOrder final : public Order {
public:
    explicit BottomOrder(OrderPtr base) : base_(std::move(base)) {}

    const OrderPtr& base() const noexcept { return base_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    OrderPtr base_;
};

/// A × B, lexicographic.
class PairOrder final : public Order {
public:
    PairOrder(OrderPtr first, OrderPtr second) : first_(std::move(first)), second_(std::move(second)) {}

    const OrderPtr& first() const noexcept { return first_; }
    const OrderPtr& second() const noexcept { return second_; }

    std::string spec() const override;
    bool member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term& t) const override;
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

private:
    OrderPtr first_;
    OrderPtr second_;
};

} // namespace ordkit
