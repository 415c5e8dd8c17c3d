#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordkit::simd {

/// Square bit matrix, rows padded to a multiple of 256 bits so that every
/// row can be streamed with full-width vector loads.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t i, std::size_t j) const noexcept {
        return (data_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j) noexcept { data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

    std::uint64_t* row(std::size_t i) noexcept { return data_.data() + i * words_; }
    const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * words_; }

    BitMatrix transposed() const;
    /// Number of set bits in row i.
    std::size_t row_count(std::size_t i) const noexcept;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

} // namespace ordkit::simd
