#pragma once

#include "ordkit/dilators.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ordkit {

/// ⟨a, σ⟩ ∈ D^T_X: a finite subset of X, stored increasing, and a code
/// σ ∈ T_{|a|} whose support is all of |a|.
struct DElement {
    std::vector<Term> support;
    Term code;

    friend bool operator==(const DElement&, const DElement&) = default;
};

bool d_member(const CodedDilator& t, const Order& x, const DElement& e);

/// Pushes both codes into T_{|a∪b|} along the inclusion indices and compares
/// there. Throws ArityExceeded when |a∪b| is beyond the dilator's bound.
bool d_less(const CodedDilator& t, const Order& x, const DElement& a, const DElement& b);

/// D_f(⟨a,σ⟩) = ⟨f[a], σ⟩, re-sorted in the target order.
DElement d_map(const ElementMap& f, const Order& target, const DElement& e);

inline const std::vector<Term>& d_supp(const DElement& e) { return e.support; }

/// η(⟨a,σ⟩) = T_{ι∘en_a}(σ).
Term eta(const OrderTransformer& t, const DElement& e);

/// Inverse of η: ⟨supp(e), T_g(e)⟩ where g sends supp(e) to its positions.
DElement eta_inverse(const OrderTransformer& t, const Order& x, const Term& e);

/// ⟨a, σ⟩ ↦ ⟨a, η⁰_{|a|}(σ)⟩ for a family η⁰_n: S_n → T_n.
using CodeFamily = std::function<Term(std::size_t n, const Term& code)>;
DElement eta_lift(const CodeFamily& eta0, const DElement& e);

/// Every ⟨a,σ⟩ with a drawn from the members of X of length <= max_len
/// and code_length(σ) <= max_len, sorted by d_less (ties broken by text).
/// Throws ArityExceeded if a support size beyond the dilator's bound could
/// occur.
std::vector<DElement> d_enumerate(const CodedDilator& t, const Order& x, std::size_t max_len);

/// `<{x1,...,xk}; sigma>`
std::string show_delement(const CodedDilator& t, const Order& x, const DElement& e);
DElement parse_delement(const CodedDilator& t, const Order& x, Cursor& in);
DElement parse_delement(const CodedDilator& t, const Order& x, std::string_view text);

/// Members of T_n with full support and code_length <= max_len.
std::vector<Term> full_support_codes(const CodedDilator& t, std::size_t n, std::size_t max_len);

} // namespace ordkit
