#include "ordkit/simd/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <string_view>

namespace ordkit::simd {

std::string_view level_name(Level level) noexcept {
    switch (level) {
    case Level::avx2:
        return "avx2";
    case Level::neon:
        return "neon";
    case Level::scalar:
        break;
    }
    return "scalar";
}

bool level_available(Level level) noexcept {
    switch (level) {
    case Level::scalar:
        return true;
    case Level::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return detail::avx2_kernels() != nullptr && __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Level::neon:
        return detail::neon_kernels() != nullptr;
    }
    return false;
}

Level active_level() noexcept {
    static const Level level = [] {
        if (const char* forced = std::getenv("ORDKIT_SIMD")) {
            const std::string_view name(forced);
            for (Level l : {Level::scalar, Level::avx2, Level::neon})
                if (name == level_name(l) && level_available(l))
                    return l;
        }
        if (level_available(Level::avx2))
            return Level::avx2;
        if (level_available(Level::neon))
            return Level::neon;
        return Level::scalar;
    }();
    return level;
}

const RowKernels& kernels(Level level) {
    if (!level_available(level))
        return detail::scalar_kernels();
    switch (level) {
    case Level::avx2:
        return *detail::avx2_kernels();
    case Level::neon:
        return *detail::neon_kernels();
    case Level::scalar:
        break;
    }
    return detail::scalar_kernels();
}

std::optional<Triple> find_transitivity_violation(const BitMatrix& m, Level level) {
    const RowKernels& k = kernels(level);
    const std::size_t words = m.words_per_row();
    for (std::size_t r = 0; r < m.size(); ++r) {
        const std::uint64_t* row_r = m.row(r);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = row_r[w];
            while (bits) {
                const std::size_t s = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                // t ranges over M[s] \ M[r]
                const std::size_t tw = k.first_andnot_word(m.row(s), row_r, 0, words);
                if (tw < words) {
                    const std::uint64_t diff = m.row(s)[tw] & ~row_r[tw];
                    return Triple{r, s, tw * 64 + static_cast<std::size_t>(std::countr_zero(diff))};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<IndexPair> find_trichotomy_violation(const BitMatrix& m, const BitMatrix& mt, Level level) {
    const RowKernels& k = kernels(level);
    const std::size_t n = m.size();
    const std::size_t words = m.words_per_row();
    // mask of the columns j with i < j < n, rebuilt per row
    std::vector<std::uint64_t> mask(words, 0);
    for (std::size_t j = 0; j < n; ++j)
        mask[j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t i = 0; i < n; ++i) {
        mask[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        const std::size_t w = k.first_equal_word(m.row(i), mt.row(i), mask.data(), i / 64, words);
        if (w < words) {
            const std::uint64_t eq = ~(m.row(i)[w] ^ mt.row(i)[w]) & mask[w];
            return IndexPair{i, w * 64 + static_cast<std::size_t>(std::countr_zero(eq))};
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> find_reflexive(const BitMatrix& m) noexcept {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.get(i, i))
            return i;
    return std::nullopt;
}

} // namespace ordkit::simd
