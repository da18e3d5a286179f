#include "dualmod/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dualmod {

BitMatrixF2::BitMatrixF2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrixF2 BitMatrixF2::identity(std::size_t n) {
    BitMatrixF2 m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrixF2 BitMatrixF2::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrixF2 m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] & 1);
    }
    return m;
}

void BitMatrixF2::xor_row_into(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * stride_;
    const std::uint64_t* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrixF2::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_,
                     data_.begin() + b * stride_);
}

bool BitMatrixF2::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrixF2::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

BitMatrixF2 BitMatrixF2::transpose() const {
    BitMatrixF2 t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto src = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = src[w];
            while (word) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                t.set(c, r, true);
                word &= word - 1;
            }
        }
    }
    return t;
}

BitMatrixF2 BitMatrixF2::select(std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols) const {
    BitMatrixF2 out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (get(rows[i], cols[j])) out.set(i, j, true);
    return out;
}

BitMatrixF2 operator*(const BitMatrixF2& a, const BitMatrixF2& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrixF2 multiply: shape mismatch");
    BitMatrixF2 out(a.rows(), b.cols());
    const std::size_t stride = b.stride();
    if (stride == 0 || a.rows() == 0) return out;
    std::vector<std::uint64_t> table(256 * stride);
    for (std::size_t k0 = 0; k0 < a.cols(); k0 += 8) {
        const std::size_t span = std::min<std::size_t>(8, a.cols() - k0);
        std::fill(table.begin(), table.begin() + stride, 0);
        for (std::size_t x = 1; x < (std::size_t{1} << span); ++x) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(x));
            const std::size_t prev = x & (x - 1);
            const auto src = b.row(k0 + low);
            std::uint64_t* dst = table.data() + x * stride;
            const std::uint64_t* base = table.data() + prev * stride;
            for (std::size_t w = 0; w < stride; ++w) dst[w] = base[w] ^ src[w];
        }
        const std::size_t word = k0 / kWordBits;
        const std::size_t shift = k0 % kWordBits;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::size_t key = (a.row(i)[word] >> shift) & 0xffu;
            if (key == 0) continue;
            const std::uint64_t* src = table.data() + key * stride;
            auto dst = out.row(i);
            for (std::size_t w = 0; w < stride; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitMatrixF2 operator+(const BitMatrixF2& a, const BitMatrixF2& b) {
    BitMatrixF2 out = a;
    out += b;
    return out;
}

BitMatrixF2& BitMatrixF2::operator+=(const BitMatrixF2& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("BitMatrixF2 add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
    return *this;
}

std::string BitMatrixF2::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out << (get(r, c) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

namespace {

// Row echelon form in place; returns the number of pivots and records the
// row permutation applied.
std::size_t eliminate(BitMatrixF2& m, std::vector<std::size_t>* perm) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t word = c / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = r;
        while (pivot < m.rows() && !(m.row(pivot)[word] & mask)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        if (perm) std::swap((*perm)[r], (*perm)[pivot]);
        const auto prow = m.row(r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            auto row = m.row(i);
            if (row[word] & mask)
                for (std::size_t w = word; w < m.stride(); ++w) row[w] ^= prow[w];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(BitMatrixF2 m) { return eliminate(m, nullptr); }

std::vector<std::size_t> pivot_rows(const BitMatrixF2& m) {
    BitMatrixF2 work = m;
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const std::size_t r = eliminate(work, &perm);
    perm.resize(r);
    std::sort(perm.begin(), perm.end());
    return perm;
}

BitMatrixF2 inverse(const BitMatrixF2& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    BitMatrixF2 aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        aug.set(r, n + r, true);
    }
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t word = c / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        std::size_t pivot = c;
        while (pivot < n && !(aug.row(pivot)[word] & mask)) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: matrix is singular");
        aug.swap_rows(c, pivot);
        const auto prow = aug.row(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            auto row = aug.row(i);
            if (row[word] & mask)
                for (std::size_t w = word; w < aug.stride(); ++w) row[w] ^= prow[w];
        }
    }
    BitMatrixF2 out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (aug.get(r, n + c)) out.set(r, c, true);
    return out;
}

}  // namespace dualmod
