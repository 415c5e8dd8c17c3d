#pragma once

#include "ordkit/dconstruction.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace ordkit {

/// Builds ϑ_σ^{s0,...,s_{n-1}}.
Term collapse_term(Term code, std::vector<Term> indices);
const Term& collapse_code(const Term& t);
std::span<const Term> collapse_indices(const Term& t);

/// L(ϑ_σ^{s0..s_{n-1}}) = 1 + 2·L(s0) + ... + 2·L(s_{n-1}).
std::size_t v_len(const Term& t);

/// The computable Bachmann-Howard fixed point ϑ(T) of a coded dilator.
class BhfixOrder final : public Order {
public:
    explicit BhfixOrder(DilatorPtr dilator);
    ~BhfixOrder() override;

    const DilatorPtr& dilator() const noexcept { return dilator_; }

    std::string spec() const override { return "bhfix(" + dilator_->spec() + ")"; }
    /// Throws ArityExceeded if the term needs T_n beyond the bound.
    bool member(const Term& t) const override;
    std::string why_not_member(const Term& t) const override;
    bool less(const Term& a, const Term& b) const override;
    std::size_t length(const Term& t) const override { return v_len(t); }
    /// Terms of v_len <= max_len all of whose codes, at every depth, have
    /// code_length <= max_len.
    std::vector<Term> fragment(std::size_t max_len) const override;
    void print(const Term& t, std::string& out) const override;
    Term parse(Cursor& in) const override;

    /// Called with (L(s)+L(t), L(s')+L(t')) for every recursive comparison
    /// s' < t' issued while deciding s < t.
    using Tracer = std::function<void(std::size_t parent, std::size_t child)>;
    bool less_traced(const Term& a, const Term& b, const Tracer& trace) const;

    /// The diagram maps used to compare two codes: positions of both index lists inside
    /// their merged union, and its size k.
    struct Merge {
        std::size_t k = 0;
        std::vector<std::size_t> f, g;
    };
    Merge merge_indices(std::span<const Term> s, std::span<const Term> t) const;

private:
    std::vector<Term> fragment_impl(std::size_t max_len, std::size_t code_len) const;
    bool less_impl(const Term& a, const Term& b, const Tracer* trace) const;
    bool less_memo(const Term& a, const Term& b) const;
    Term mapped_code(const Term& code, std::span<const std::size_t> images, std::size_t k) const;

    DilatorPtr dilator_;
    // Caches recursive comparisons and diagram maps; internally locked.
    struct Memo;
    std::unique_ptr<Memo> memo_;
};

/// The canonical collapse ⟨a,σ⟩ ↦ ϑ_σ^{a in increasing order}.
Term collapse(const DElement& e);

/// An order X together with a collapse D^T_X → X.
struct CollapseTarget {
    OrderPtr order;
    std::function<Term(const DElement&)> collapse;
};

CollapseTarget canonical_target(const std::shared_ptr<const BhfixOrder>& fix);

/// f(ϑ_σ^{s0..}) = collapse(⟨{f(s0),...}, σ⟩). Throws DomainError when the
/// images of the indices are not pairwise distinct.
Term min_embed(const CollapseTarget& target, const Term& t);

} // namespace ordkit
