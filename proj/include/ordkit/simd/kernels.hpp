#pragma once

#include "ordkit/simd/bitmatrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ordkit::simd {

enum class Level { scalar, avx2, neon };

std::string_view level_name(Level level) noexcept;
/// Whether this binary contains the kernel and the CPU can run it.
bool level_available(Level level) noexcept;
/// Best available level, unless ORDKIT_SIMD=scalar|avx2|neon selects
/// another available one.
Level active_level() noexcept;

/// Row kernels. Both return the index of the first word w in [begin, words)
/// whose combined value is nonzero, or `words` if there is none.
struct RowKernels {
    /// a[w] & ~b[w]
    std::size_t (*first_andnot_word)(const std::uint64_t* a, const std::uint64_t* b, std::size_t begin,
                                     std::size_t words);
    /// ~(a[w] ^ b[w]) & mask[w]
    std::size_t (*first_equal_word)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
                                    std::size_t begin, std::size_t words);
};

const RowKernels& kernels(Level level);

namespace detail {
const RowKernels& scalar_kernels() noexcept;
const RowKernels* avx2_kernels() noexcept; // nullptr when not compiled in
const RowKernels* neon_kernels() noexcept; // nullptr when not compiled in
} // namespace detail

struct Triple {
    std::size_t r, s, t;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct IndexPair {
    std::size_t i, j;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Lexicographically first (r, s, t) with M[r][s], M[s][t] and not M[r][t].
std::optional<Triple> find_transitivity_violation(const BitMatrix& m, Level level);

/// Lexicographically first i < j where M[i][j] == M[j][i], given mt = Mᵀ.
std::optional<IndexPair> find_trichotomy_violation(const BitMatrix& m, const BitMatrix& mt, Level level);

/// First i with M[i][i].
std::optional<std::size_t> find_reflexive(const BitMatrix& m) noexcept;

} // namespace ordkit::simd
