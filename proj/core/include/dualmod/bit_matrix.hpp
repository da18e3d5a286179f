#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dualmod {

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Dense matrix over GF(2), row-major, 64 entries per word. Bits past `cols`
/// in the last word of each row are always zero.
class BitMatrixF2 {
public:
    BitMatrixF2() = default;
    BitMatrixF2(std::size_t rows, std::size_t cols);

    static BitMatrixF2 identity(std::size_t n);
    /// Rows given as 0/1 lists, for tests and small literals.
    static BitMatrixF2 from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = data_[r * stride_ + c / kWordBits];
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
    }

    std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }

    void xor_row_into(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    bool is_zero() const;
    bool is_symmetric() const;

    BitMatrixF2 transpose() const;
    /// Sub-matrix on the given row and column index lists.
    BitMatrixF2 select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    /// Product via the method of four Russians (8-row lookup tables).
    friend BitMatrixF2 operator*(const BitMatrixF2& a, const BitMatrixF2& b);
    friend BitMatrixF2 operator+(const BitMatrixF2& a, const BitMatrixF2& b);
    BitMatrixF2& operator+=(const BitMatrixF2& other);

    friend bool operator==(const BitMatrixF2&, const BitMatrixF2&) = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const noexcept { return data_; }
    std::vector<std::uint64_t>& words() noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// dst ^= src over a word span.
inline void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t rank(BitMatrixF2 m);

/// Original indices of a maximal independent set of rows, chosen by
/// elimination with left-to-right pivot columns and the first (lowest index)
/// available row as pivot.
std::vector<std::size_t> pivot_rows(const BitMatrixF2& m);

/// Throws std::domain_error if singular.
BitMatrixF2 inverse(const BitMatrixF2& m);

}  // namespace dualmod
