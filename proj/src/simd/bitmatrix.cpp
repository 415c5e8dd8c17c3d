#include "ordkit/simd/bitmatrix.hpp"

#include <bit>

namespace ordkit::simd {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_(((n + 255) / 256) * 4), data_(n * words_, 0) {}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint64_t* r = row(i);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(j, i);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

std::size_t BitMatrix::row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w)
        c += static_cast<std::size_t>(std::popcount(r[w]));
    return c;
}

} // namespace ordkit::simd
