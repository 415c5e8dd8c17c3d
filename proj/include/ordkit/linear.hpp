#pragma once

#include "ordkit/simd/kernels.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ordkit {

/// Outcome of an exhaustive strict-linear-order audit over indices 0..n-1.
struct LinearityResult {
    bool pass = true;
    /// "irreflexivity", "trichotomy" or "transitivity"; empty on pass.
    std::string property;
    /// Offending indices: {i} for irreflexivity, {i, j} for trichotomy,
    /// {r, s, t} with r<s, s<t, not r<t for transitivity.
    std::vector<std::size_t> witness;
    std::size_t terms = 0;
    std::size_t pairs = 0;
    std::size_t triples = 0;
    /// rank[i] = |{j : j < i}|. Meaningful only on pass.
    std::vector<std::size_t> rank;
};

/// Evaluates less(i, j) for all n² pairs (on `threads` workers, 0 = all
/// cores) and checks the axioms on the resulting relation matrix. The
/// reported witness is always the first in index order, so results do not
/// depend on scheduling. Exceptions from `less` are rethrown.
LinearityResult check_linear(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                             unsigned threads = 0, simd::Level level = simd::active_level());

/// Just the matrix fill used by check_linear.
simd::BitMatrix relation_matrix(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                                unsigned threads = 0);

/// Axiom check on an already filled matrix.
LinearityResult check_linear(const simd::BitMatrix& m, simd::Level level = simd::active_level());

/// Runs body(i) for i in [0, n) on worker threads; the exception thrown for
/// the smallest i, if any, is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

} // namespace ordkit
