#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ordkit {

/// Node labels shared by every term language in the library. Which labels
/// may appear where is decided by the owning order.
enum class Tag : std::uint8_t {
    Nat,      // element of fin:k / nat, payload in value()
    Bot,      // ⊥
    Zero,     // 0 of ε_X, ϑ_X
    Omega,    // Ω of ϑ_X
    Eps,      // ε_x
    Big,      // 𝔈_x of ϑ_X
    Theta,    // ϑ s of ϑ_X
    Sum,      // ω^{t0} + ... + ω^{tn}
    Seq,      // <x0,...,x_{n-1}> of ω^X
    Pair,     // (a, b)
    Left,     // y of Y ∪ {Ω} ∪ X
    Mid,      // Ω of Y ∪ {Ω} ∪ X
    Right,    // x of Y ∪ {Ω} ∪ X
    Collapse, // ϑ_σ^{s0,...,s_{n-1}}; arg 0 is σ, the rest are the indices
};

/// Immutable tree with structural equality. Copies share storage, so
/// passing terms by value is cheap.
class Term {
public:
    /// The leaf 0.
    Term();

    static Term nat(std::uint64_t value);
    static Term leaf(Tag tag);
    static Term node(Tag tag, std::vector<Term> args);

    Tag tag() const noexcept;
    std::uint64_t value() const noexcept;
    std::span<const Term> args() const noexcept;
    const Term& arg(std::size_t i) const;
    std::size_t arity() const noexcept;
    std::size_t hash() const noexcept;

    bool is(Tag tag) const noexcept { return this->tag() == tag; }

    friend bool operator==(const Term& a, const Term& b) noexcept;

    /// Total order on raw trees (tag, value, then arguments). Only used to
    /// make containers deterministic; it is unrelated to any notation order.
    static bool structural_less(const Term& a, const Term& b) noexcept;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

struct TermStructuralLess {
    bool operator()(const Term& a, const Term& b) const noexcept { return Term::structural_less(a, b); }
};

} // namespace ordkit
