#pragma once

// Unpacked GF(4) linear algebra, one byte per entry. Slow and obvious.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dualmod/matrix_f4.hpp"

namespace oracle {

// Elements 0, 1, w, w^2 coded as 0, 1, 2, 3 (a + b w with bits a, b).
inline std::uint8_t add4(std::uint8_t x, std::uint8_t y) { return x ^ y; }

inline std::uint8_t mul4(std::uint8_t x, std::uint8_t y) {
    if (x == 0 || y == 0) return 0;
    static const int log_of[4] = {-1, 0, 1, 2};
    static const std::uint8_t exp_of[3] = {1, 2, 3};
    return exp_of[(log_of[x] + log_of[y]) % 3];
}

inline std::uint8_t inv4(std::uint8_t x) {
    static const std::uint8_t table[4] = {0, 1, 3, 2};
    if (x == 0) throw std::domain_error("inv4(0)");
    return table[x];
}

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: shape");
    Mat out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const std::uint8_t c = x.at(i, k);
            if (!c) continue;
            for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) = add4(out.at(i, j), mul4(c, y.at(k, j)));
        }
    return out;
}

inline Mat add(const Mat& x, const Mat& y) {
    Mat out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = add4(out.a[i], y.a[i]);
    return out;
}

inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        const std::uint8_t inv = inv4(m.at(r, c));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = mul4(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const std::uint8_t f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = add4(m.at(i, j), mul4(f, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

// dim {X : a_t X = X b_t for all t}, as d1*d2 unknowns.
inline std::size_t hom_dim(const std::vector<Mat>& gens1, const std::vector<Mat>& gens2) {
    const std::size_t d1 = gens1.front().rows, d2 = gens2.front().rows;
    const std::size_t unknowns = d1 * d2;
    Mat system(gens1.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (std::size_t t = 0; t < gens1.size(); ++t)
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d2; ++j, ++row) {
                for (std::size_t k = 0; k < d1; ++k) {
                    auto& e = system.at(row, k * d2 + j);
                    e = add4(e, gens1[t].at(i, k));
                }
                for (std::size_t k = 0; k < d2; ++k) {
                    auto& e = system.at(row, i * d2 + k);
                    e = add4(e, gens2[t].at(k, j));
                }
            }
    return unknowns - rank(system);
}

inline Mat from_packed(const dualmod::MatrixF4& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.get(i, j).bits();
    return out;
}

inline dualmod::MatrixF4 to_packed(const Mat& m) {
    dualmod::MatrixF4 out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.set(i, j, dualmod::GF4(m.at(i, j)));
    return out;
}

inline Mat random_mat(std::size_t r, std::size_t c, std::mt19937_64& rng, bool f2_only = false) {
    Mat m(r, c);
    for (auto& x : m.a) x = static_cast<std::uint8_t>(rng() % (f2_only ? 2 : 4));
    return m;
}

inline Mat random_invertible(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = random_mat(n, n, rng);
        if (rank(m) == n) return m;
    }
}

// Inverse by Gauss-Jordan on [m | I].
inline Mat inverse(const Mat& m) {
    const std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug.at(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular");
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(c, j), aug.at(p, j));
        const std::uint8_t inv = inv4(aug.at(c, c));
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(c, j) = mul4(aug.at(c, j), inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug.at(i, c) == 0) continue;
            const std::uint8_t f = aug.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) = add4(aug.at(i, j), mul4(f, aug.at(c, j)));
        }
    }
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

inline Mat block_diag(const std::vector<Mat>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows;
    Mat out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

}  // namespace oracle
