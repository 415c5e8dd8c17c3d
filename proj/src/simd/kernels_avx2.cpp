#include "ordkit/simd/kernels.hpp"

#if defined(ORDKIT_HAVE_AVX2)
#include <immintrin.h>

namespace ordkit::simd::detail {

namespace {

std::size_t first_andnot_word(const std::uint64_t* a, const std::uint64_t* b, std::size_t begin, std::size_t words) {
    std::size_t w = begin;
    for (; w < words && (w % 4) != 0; ++w)
        if (a[w] & ~b[w])
            return w;
    for (; w + 4 <= words; w += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
        // testc(b, a) is 1 iff (a & ~b) == 0
        if (!_mm256_testc_si256(vb, va)) {
            for (std::size_t k = w; k < w + 4; ++k)
                if (a[k] & ~b[k])
                    return k;
        }
    }
    for (; w < words; ++w)
        if (a[w] & ~b[w])
            return w;
    return words;
}

std::size_t first_equal_word(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
                             std::size_t begin, std::size_t words) {
    std::size_t w = begin;
    for (; w < words && (w % 4) != 0; ++w)
        if (~(a[w] ^ b[w]) & mask[w])
            return w;
    for (; w + 4 <= words; w += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
        const __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + w));
        // testc(a ^ b, mask) is 1 iff (mask & ~(a ^ b)) == 0
        if (!_mm256_testc_si256(_mm256_xor_si256(va, vb), vm)) {
            for (std::size_t k = w; k < w + 4; ++k)
                if (~(a[k] ^ b[k]) & mask[k])
                    return k;
        }
    }
    for (; w < words; ++w)
        if (~(a[w] ^ b[w]) & mask[w])
            return w;
    return words;
}

constexpr RowKernels kAvx2{first_andnot_word, first_equal_word};

} // namespace

const RowKernels* avx2_kernels() noexcept { return &kAvx2; }

} // namespace ordkit::simd::detail

#else

namespace ordkit::simd::detail {
const RowKernels* avx2_kernels() noexcept { return nullptr; }
} // namespace ordkit::simd::detail

#endif
