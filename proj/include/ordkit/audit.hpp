#pragma once

#include "ordkit/bhfix.hpp"
#include "ordkit/embeddings.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ordkit {

/// Result of one audit command. Rendering excludes the elapsed time so
/// that reports are byte-identical across runs.
struct AuditReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string property; ///< what was audited
    bool pass = true;
    std::string violation;                   ///< failed sub-property
    std::vector<std::string> counterexample; ///< serialized witness lines
    std::vector<std::string> recheck;        ///< `ordkit compare ...` lines
    std::vector<std::pair<std::string, std::size_t>> counts;
    double elapsed_ms = 0;

    void count(std::string key, std::size_t value) { counts.emplace_back(std::move(key), value); }
};

std::string render_text(const AuditReport& r);
std::string render_json(const AuditReport& r);

/// Exhaustive strict-linear-order audit of the members of length <= max_len.
AuditReport audit_order(const OrderPtr& order, std::size_t max_len);

AuditReport audit_dilator(const DilatorPtr& dilator, std::size_t max_n, std::size_t max_len);

/// Both collapse conditions for the canonical collapse ⟨a,σ⟩ ↦ ϑ_σ^a on the
/// preimage of the enumerated fragment of ϑ(T).
AuditReport audit_collapse(const std::shared_ptr<const BhfixOrder>& fix, std::size_t max_len);

/// Order preservation on all source pairs of length <= max_len plus the
/// embedding's per-term identity.
AuditReport audit_embedding(const Embedding& f, std::size_t max_len);

/// η: D^{T↾ℕ}_X → T_X is a support-preserving order bijection between the
/// fragments of length <= max_len, and d_less is linear there.
AuditReport audit_reconstruction(const TransformerPtr& t, const OrderPtr& x, std::size_t max_len);

/// Shell-quotes a word for the recheck lines.
std::string shell_quote(const std::string& word);

} // namespace ordkit
