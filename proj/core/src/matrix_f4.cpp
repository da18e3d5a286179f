#include "dualmod/matrix_f4.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace dualmod {

GF4 GF4::inverse() const {
    switch (bits_) {
        case 1: return GF4(1);
        case 2: return GF4(3);
        case 3: return GF4(2);
        default: throw std::domain_error("GF4: zero has no inverse");
    }
}

std::string GF4::to_string() const {
    switch (bits_) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "w";
        default: return "w2";
    }
}

std::ostream& operator<<(std::ostream& os, GF4 x) { return os << x.to_string(); }

void axpy_planes(std::span<std::uint64_t> dst_lo, std::span<std::uint64_t> dst_hi,
                 std::span<const std::uint64_t> src_lo, std::span<const std::uint64_t> src_hi,
                 GF4 c) {
    const std::size_t n = dst_lo.size();
    switch (c.bits()) {
        case 0: return;
        case 1:
            for (std::size_t w = 0; w < n; ++w) {
                dst_lo[w] ^= src_lo[w];
                dst_hi[w] ^= src_hi[w];
            }
            return;
        case 2:  // w(a + bw) = b + (a + b)w
            for (std::size_t w = 0; w < n; ++w) {
                dst_lo[w] ^= src_hi[w];
                dst_hi[w] ^= src_lo[w] ^ src_hi[w];
            }
            return;
        default:  // w^2(a + bw) = (a + b) + aw
            for (std::size_t w = 0; w < n; ++w) {
                dst_lo[w] ^= src_lo[w] ^ src_hi[w];
                dst_hi[w] ^= src_lo[w];
            }
            return;
    }
}

namespace {

void scale_planes(std::span<std::uint64_t> lo, std::span<std::uint64_t> hi, GF4 c) {
    switch (c.bits()) {
        case 0:
            std::fill(lo.begin(), lo.end(), 0);
            std::fill(hi.begin(), hi.end(), 0);
            return;
        case 1: return;
        case 2:
            for (std::size_t w = 0; w < lo.size(); ++w) {
                const std::uint64_t a = lo[w], b = hi[w];
                lo[w] = b;
                hi[w] = a ^ b;
            }
            return;
        default:
            for (std::size_t w = 0; w < lo.size(); ++w) {
                const std::uint64_t a = lo[w], b = hi[w];
                lo[w] = a ^ b;
                hi[w] = a;
            }
            return;
    }
}

}  // namespace

VectorF4 VectorF4::unit(std::size_t dim, std::size_t i) {
    VectorF4 v(dim);
    v.set(i, GF4::one());
    return v;
}

void VectorF4::set(std::size_t i, GF4 v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    auto& l = lo_[i / kWordBits];
    auto& h = hi_[i / kWordBits];
    l = v.lo() ? (l | mask) : (l & ~mask);
    h = v.hi() ? (h | mask) : (h & ~mask);
}

bool VectorF4::is_zero() const {
    for (std::size_t w = 0; w < lo_.size(); ++w)
        if (lo_[w] | hi_[w]) return false;
    return true;
}

std::size_t VectorF4::leading() const {
    for (std::size_t w = 0; w < lo_.size(); ++w) {
        if (const std::uint64_t word = lo_[w] | hi_[w])
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    }
    return dim_;
}

void VectorF4::add_scaled(const VectorF4& other, GF4 c) {
    if (other.dim_ != dim_) throw std::invalid_argument("VectorF4: dimension mismatch");
    axpy_planes(lo_, hi_, other.lo_, other.hi_, c);
}

void VectorF4::scale(GF4 c) { scale_planes(lo_, hi_, c); }

MatrixF4::MatrixF4(BitMatrixF2 lo, BitMatrixF2 hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.rows() != hi_.rows() || lo_.cols() != hi_.cols())
        throw std::invalid_argument("MatrixF4: plane shapes differ");
}

MatrixF4 MatrixF4::identity(std::size_t n) { return MatrixF4(BitMatrixF2::identity(n), BitMatrixF2(n, n)); }

MatrixF4 MatrixF4::from_f2(const BitMatrixF2& m) { return MatrixF4(m, BitMatrixF2(m.rows(), m.cols())); }

MatrixF4 MatrixF4::from_values(const std::vector<std::vector<GF4>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    MatrixF4 m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_values: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

MatrixF4 MatrixF4::from_rows(std::span<const VectorF4> rows, std::size_t cols) {
    MatrixF4 m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

bool MatrixF4::is_scalar() const {
    if (!is_square()) return false;
    if (rows() == 0) return true;
    return *this == get(0, 0) * identity(rows());
}

VectorF4 MatrixF4::row_vector(std::size_t r) const {
    VectorF4 v(cols());
    std::copy(lo_.row(r).begin(), lo_.row(r).end(), v.lo().begin());
    std::copy(hi_.row(r).begin(), hi_.row(r).end(), v.hi().begin());
    return v;
}

void MatrixF4::set_row(std::size_t r, const VectorF4& v) {
    if (v.dim() != cols()) throw std::invalid_argument("set_row: dimension mismatch");
    std::copy(v.lo().begin(), v.lo().end(), lo_.row(r).begin());
    std::copy(v.hi().begin(), v.hi().end(), hi_.row(r).begin());
}

void MatrixF4::add_scaled_row(std::size_t dst, std::size_t src, GF4 c) {
    axpy_planes(lo_.row(dst), hi_.row(dst), lo_.row(src), hi_.row(src), c);
}

void MatrixF4::scale_row(std::size_t r, GF4 c) { scale_planes(lo_.row(r), hi_.row(r), c); }

void MatrixF4::swap_rows(std::size_t a, std::size_t b) {
    lo_.swap_rows(a, b);
    hi_.swap_rows(a, b);
}

MatrixF4 MatrixF4::transpose() const { return MatrixF4(lo_.transpose(), hi_.transpose()); }

MatrixF4 MatrixF4::select_rows(std::span<const std::size_t> rows) const {
    MatrixF4 out(rows.size(), cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, row_vector(rows[i]));
    return out;
}

MatrixF4 operator*(const MatrixF4& a, const MatrixF4& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("MatrixF4 multiply: shape mismatch");
    // (A0 + wA1)(B0 + wB1) = (A0B0 + A1B1) + w(A0B1 + A1B0 + A1B1)
    const bool a_f2 = a.hi_.is_zero();
    const bool b_f2 = b.hi_.is_zero();
    if (a_f2 && b_f2) return MatrixF4::from_f2(a.lo_ * b.lo_);
    if (a_f2) return MatrixF4(a.lo_ * b.lo_, a.lo_ * b.hi_);
    if (b_f2) return MatrixF4(a.lo_ * b.lo_, a.hi_ * b.lo_);
    BitMatrixF2 p0 = a.lo_ * b.lo_;
    BitMatrixF2 p1 = a.hi_ * b.hi_;
    BitMatrixF2 p2 = (a.lo_ + a.hi_) * (b.lo_ + b.hi_);
    BitMatrixF2 lo = p0 + p1;
    p2 += p0;
    return MatrixF4(std::move(lo), std::move(p2));
}

MatrixF4 operator+(const MatrixF4& a, const MatrixF4& b) {
    MatrixF4 out = a;
    out += b;
    return out;
}

MatrixF4& MatrixF4::operator+=(const MatrixF4& other) {
    lo_ += other.lo_;
    hi_ += other.hi_;
    return *this;
}

MatrixF4 operator*(GF4 c, const MatrixF4& m) {
    MatrixF4 out = m;
    for (std::size_t r = 0; r < out.rows(); ++r) out.scale_row(r, c);
    return out;
}

MatrixF4 MatrixF4::frobenius() const {
    // (a + bw)^2 = a + b w^2 = (a + b) + b w
    return MatrixF4(lo_ + hi_, hi_);
}

std::string MatrixF4::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) out << (c ? " " : "") << get(r, c);
        out << '\n';
    }
    return out.str();
}

VectorF4 operator*(const VectorF4& v, const MatrixF4& m) {
    if (v.dim() != m.rows()) throw std::invalid_argument("vector-matrix: shape mismatch");
    VectorF4 out(m.cols());
    const auto vlo = v.lo();
    const auto vhi = v.hi();
    for (std::size_t w = 0; w < vlo.size(); ++w) {
        std::uint64_t nz = vlo[w] | vhi[w];
        while (nz) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(nz));
            const std::size_t k = w * kWordBits + bit;
            const GF4 c(static_cast<bool>((vlo[w] >> bit) & 1u), static_cast<bool>((vhi[w] >> bit) & 1u));
            axpy_planes(out.lo(), out.hi(), m.lo().row(k), m.hi().row(k), c);
            nz &= nz - 1;
        }
    }
    return out;
}

}  // namespace dualmod
