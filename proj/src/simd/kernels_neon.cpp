#include "ordkit/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace ordkit::simd::detail {

namespace {

inline bool any_bits(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

std::size_t first_andnot_word(const std::uint64_t* a, const std::uint64_t* b, std::size_t begin, std::size_t words) {
    std::size_t w = begin;
    if (w < words && (w % 2) != 0) {
        if (a[w] & ~b[w])
            return w;
        ++w;
    }
    for (; w + 2 <= words; w += 2) {
        const uint64x2_t x = vbicq_u64(vld1q_u64(a + w), vld1q_u64(b + w));
        if (any_bits(x))
            return (a[w] & ~b[w]) ? w : w + 1;
    }
    for (; w < words; ++w)
        if (a[w] & ~b[w])
            return w;
    return words;
}

std::size_t first_equal_word(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
                             std::size_t begin, std::size_t words) {
    std::size_t w = begin;
    if (w < words && (w % 2) != 0) {
        if (~(a[w] ^ b[w]) & mask[w])
            return w;
        ++w;
    }
    for (; w + 2 <= words; w += 2) {
        const uint64x2_t x = vbicq_u64(vld1q_u64(mask + w), veorq_u64(vld1q_u64(a + w), vld1q_u64(b + w)));
        if (any_bits(x))
            return (~(a[w] ^ b[w]) & mask[w]) ? w : w + 1;
    }
    for (; w < words; ++w)
        if (~(a[w] ^ b[w]) & mask[w])
            return w;
    return words;
}

constexpr RowKernels kNeon{first_andnot_word, first_equal_word};

} // namespace

const RowKernels* neon_kernels() noexcept { return &kNeon; }

} // namespace ordkit::simd::detail

#else

namespace ordkit::simd::detail {
const RowKernels* neon_kernels() noexcept { return nullptr; }
} // namespace ordkit::simd::detail

#endif
