#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/gf4.hpp"

namespace dualmod {

/// Row vector over GF(4) stored as two bit planes (coefficients of 1 and w).
class VectorF4 {
public:
    VectorF4() = default;
    explicit VectorF4(std::size_t dim) : dim_(dim), lo_(words_for(dim), 0), hi_(words_for(dim), 0) {}

    static VectorF4 unit(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept { return dim_; }

    GF4 get(std::size_t i) const {
        return GF4(static_cast<bool>((lo_[i / kWordBits] >> (i % kWordBits)) & 1u),
                   static_cast<bool>((hi_[i / kWordBits] >> (i % kWordBits)) & 1u));
    }
    void set(std::size_t i, GF4 v);

    bool is_zero() const;
    /// Index of the first nonzero coordinate, or dim() if zero.
    std::size_t leading() const;

    /// this += c * other
    void add_scaled(const VectorF4& other, GF4 c);
    void scale(GF4 c);

    std::span<std::uint64_t> lo() { return lo_; }
    std::span<std::uint64_t> hi() { return hi_; }
    std::span<const std::uint64_t> lo() const { return lo_; }
    std::span<const std::uint64_t> hi() const { return hi_; }

    friend bool operator==(const VectorF4&, const VectorF4&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> lo_;
    std::vector<std::uint64_t> hi_;
};

/// dst += c * src on bit-sliced word spans.
void axpy_planes(std::span<std::uint64_t> dst_lo, std::span<std::uint64_t> dst_hi,
                 std::span<const std::uint64_t> src_lo, std::span<const std::uint64_t> src_hi,
                 GF4 c);

/// Dense matrix over GF(4), held as two GF(2) planes: M = lo + w * hi.
class MatrixF4 {
public:
    MatrixF4() = default;
    MatrixF4(std::size_t rows, std::size_t cols) : lo_(rows, cols), hi_(rows, cols) {}
    MatrixF4(BitMatrixF2 lo, BitMatrixF2 hi);

    static MatrixF4 identity(std::size_t n);
    static MatrixF4 from_f2(const BitMatrixF2& m);
    static MatrixF4 from_values(const std::vector<std::vector<GF4>>& rows);
    static MatrixF4 from_rows(std::span<const VectorF4> rows, std::size_t cols);

    std::size_t rows() const noexcept { return lo_.rows(); }
    std::size_t cols() const noexcept { return lo_.cols(); }
    bool is_square() const noexcept { return rows() == cols(); }

    GF4 get(std::size_t r, std::size_t c) const { return GF4(lo_.get(r, c), hi_.get(r, c)); }
    void set(std::size_t r, std::size_t c, GF4 v) {
        lo_.set(r, c, v.lo());
        hi_.set(r, c, v.hi());
    }

    const BitMatrixF2& lo() const noexcept { return lo_; }
    const BitMatrixF2& hi() const noexcept { return hi_; }

    /// True when every entry lies in the prime field.
    bool is_f2() const { return hi_.is_zero(); }
    bool is_zero() const { return lo_.is_zero() && hi_.is_zero(); }
    /// c * I for some c (including zero).
    bool is_scalar() const;

    VectorF4 row_vector(std::size_t r) const;
    void set_row(std::size_t r, const VectorF4& v);
    void add_scaled_row(std::size_t dst, std::size_t src, GF4 c);
    void scale_row(std::size_t r, GF4 c);
    void swap_rows(std::size_t a, std::size_t b);

    MatrixF4 transpose() const;
    MatrixF4 select_rows(std::span<const std::size_t> rows) const;

    /// Bit-sliced product: three GF(2) products (Karatsuba on the planes).
    friend MatrixF4 operator*(const MatrixF4& a, const MatrixF4& b);
    friend MatrixF4 operator+(const MatrixF4& a, const MatrixF4& b);
    friend MatrixF4 operator*(GF4 c, const MatrixF4& m);
    MatrixF4& operator+=(const MatrixF4& other);

    /// Entry-wise Frobenius x -> x^2.
    MatrixF4 frobenius() const;

    friend bool operator==(const MatrixF4&, const MatrixF4&) = default;

    std::string to_string() const;

private:
    BitMatrixF2 lo_;
    BitMatrixF2 hi_;
};

/// Row vector times matrix.
VectorF4 operator*(const VectorF4& v, const MatrixF4& m);

}  // namespace dualmod
