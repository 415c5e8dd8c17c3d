#include "ordkit/simd/kernels.hpp"

namespace ordkit::simd::detail {

namespace {

std::size_t first_andnot_word(const std::uint64_t* a, const std::uint64_t* b, std::size_t begin, std::size_t words) {
    for (std::size_t w = begin; w < words; ++w)
        if (a[w] & ~b[w])
            return w;
    return words;
}

std::size_t first_equal_word(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* mask,
                             std::size_t begin, std::size_t words) {
    for (std::size_t w = begin; w < words; ++w)
        if (~(a[w] ^ b[w]) & mask[w])
            return w;
    return words;
}

constexpr RowKernels kScalar{first_andnot_word, first_equal_word};

} // namespace

const RowKernels& scalar_kernels() noexcept { return kScalar; }

} // namespace ordkit::simd::detail
