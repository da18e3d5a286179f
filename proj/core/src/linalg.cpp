#include "dualmod/linalg.hpp"

#include <algorithm>
#include <cstring>
#include <random>
#include <stdexcept>

namespace dualmod {

// ---------------------------------------------------------------- echelon

bool EchelonF4::reduce(VectorF4& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("EchelonF4: dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const GF4 c = v.get(pivots_[k]);
        if (!c.is_zero()) v.add_scaled(rows_[k], c);
    }
    return !v.is_zero();
}

bool EchelonF4::contains(const VectorF4& v) const {
    VectorF4 w = v;
    return !reduce(w);
}

bool EchelonF4::insert(VectorF4 v) {
    if (!reduce(v)) return false;
    const std::size_t p = v.leading();
    v.scale(v.get(p).inverse());
    for (auto& row : rows_) {
        const GF4 c = row.get(p);
        if (!c.is_zero()) row.add_scaled(v, c);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

std::vector<VectorF4> EchelonF4::kernel() const {
    std::vector<bool> is_pivot(dim_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<VectorF4> out;
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot[f]) continue;
        VectorF4 x(dim_);
        x.set(f, GF4::one());
        for (std::size_t k = 0; k < rows_.size(); ++k) x.set(pivots_[k], rows_[k].get(f));
        out.push_back(std::move(x));
    }
    return out;
}

// ------------------------------------------------------------ elimination

namespace {

// Row echelon (or reduced row echelon) form in place, mirroring every row
// operation onto `track` when given. Pivots are chosen left to right, first
// nonzero row.
std::size_t eliminate(MatrixF4& m, bool reduced, std::vector<std::size_t>* pivot_cols,
                      MatrixF4* track) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.get(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        if (track) track->swap_rows(r, pivot);
        const GF4 inv = m.get(r, c).inverse();
        m.scale_row(r, inv);
        if (track) track->scale_row(r, inv);
        for (std::size_t i = reduced ? 0 : r + 1; i < m.rows(); ++i) {
            if (i == r) continue;
            const GF4 e = m.get(i, c);
            if (e.is_zero()) continue;
            m.add_scaled_row(i, r, e);
            if (track) track->add_scaled_row(i, r, e);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

void check_square_family(std::span<const MatrixF4> gens, std::size_t& dim, const char* op) {
    if (gens.empty()) return;
    dim = gens.front().rows();
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != dim)
            throw std::invalid_argument(std::string(op) + ": generators must be square of equal dimension");
    }
}

}  // namespace

std::size_t rank(const MatrixF4& m) {
    MatrixF4 work = m;
    return eliminate(work, false, nullptr, nullptr);
}

MatrixF4 right_kernel(const MatrixF4& m) {
    MatrixF4 work = m;
    std::vector<std::size_t> pivots;
    const std::size_t r = eliminate(work, true, &pivots, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    MatrixF4 out(m.cols() - r, m.cols());
    std::size_t row = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out.set(row, f, GF4::one());
        for (std::size_t k = 0; k < r; ++k) out.set(row, pivots[k], work.get(k, f));
        ++row;
    }
    return out;
}

MatrixF4 left_kernel(const MatrixF4& m) { return right_kernel(m.transpose()); }

MatrixF4 row_space(const MatrixF4& m) {
    MatrixF4 work = m;
    const std::size_t r = eliminate(work, true, nullptr, nullptr);
    std::vector<std::size_t> top(r);
    for (std::size_t i = 0; i < r; ++i) top[i] = i;
    return work.select_rows(top);
}

MatrixF4 inverse(const MatrixF4& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    MatrixF4 work = m;
    MatrixF4 track = MatrixF4::identity(m.rows());
    if (eliminate(work, true, nullptr, &track) != m.rows())
        throw std::domain_error("inverse: matrix is singular");
    return track;
}

bool is_invertible(const MatrixF4& m) { return m.is_square() && rank(m) == m.rows(); }

// ------------------------------------------------------------ subspaces

SubspaceCoordinates::SubspaceCoordinates(const MatrixF4& basis)
    : ambient_(basis.cols()), reduced_(basis), transform_(MatrixF4::identity(basis.rows())) {
    basis_rank_ = eliminate(reduced_, true, &pivots_, &transform_);
    if (basis_rank_ != basis.rows())
        throw std::invalid_argument("SubspaceCoordinates: basis rows are dependent");
}

std::optional<VectorF4> SubspaceCoordinates::coords(const VectorF4& v) const {
    if (v.dim() != ambient_) throw std::invalid_argument("coords: dimension mismatch");
    VectorF4 in_reduced(basis_rank_);
    VectorF4 residual = v;
    for (std::size_t k = 0; k < basis_rank_; ++k) {
        const GF4 c = v.get(pivots_[k]);
        in_reduced.set(k, c);
        if (!c.is_zero()) residual.add_scaled(reduced_.row_vector(k), c);
    }
    if (!residual.is_zero()) return std::nullopt;
    return in_reduced * transform_;
}

MatrixF4 SubspaceCoordinates::coords(const MatrixF4& m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("coords: dimension mismatch");
    MatrixF4 in_reduced(m.rows(), basis_rank_);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < basis_rank_; ++k) in_reduced.set(r, k, m.get(r, pivots_[k]));
    if (!(in_reduced * reduced_ == m))
        throw std::invalid_argument("coords: a row lies outside the subspace");
    return in_reduced * transform_;
}

MatrixF4 action_on_subspace(const MatrixF4& basis, const MatrixF4& g) {
    return SubspaceCoordinates(basis).coords(basis * g);
}

// ------------------------------------------------------------ intertwiners

namespace {

void check_pair(std::span<const MatrixF4> gens1, std::span<const MatrixF4> gens2, std::size_t& d1,
                std::size_t& d2) {
    if (gens1.size() != gens2.size())
        throw std::invalid_argument("hom_basis: generator lists differ in length");
    check_square_family(gens1, d1, "hom_basis");
    check_square_family(gens2, d2, "hom_basis");
}

std::vector<MatrixF4> all_matrices(std::size_t d1, std::size_t d2) {
    std::vector<MatrixF4> out;
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            MatrixF4 e(d1, d2);
            e.set(i, j, GF4::one());
            out.push_back(std::move(e));
        }
    return out;
}

constexpr std::size_t kMaxSeedNullity = 6;

GF4 random_nonzero(std::mt19937_64& rng) { return GF4(static_cast<std::uint8_t>(1 + rng() % 3)); }

}  // namespace

std::vector<MatrixF4> hom_basis_stacked(std::span<const MatrixF4> gens1,
                                        std::span<const MatrixF4> gens2) {
    std::size_t d1 = 0, d2 = 0;
    check_pair(gens1, gens2, d1, d2);
    if (gens1.empty()) throw std::invalid_argument("hom_basis: no generators");
    if (d1 == 0 || d2 == 0) return {};
    const std::size_t unknowns = d1 * d2;
    EchelonF4 system(unknowns);
    for (std::size_t t = 0; t < gens1.size() && !system.full(); ++t) {
        const MatrixF4& a = gens1[t];
        const MatrixF4& b = gens2[t];
        // (a X + X b)[i][j] = sum_k a[i][k] X[k][j] + sum_k X[i][k] b[k][j]
        for (std::size_t i = 0; i < d1; ++i) {
            for (std::size_t j = 0; j < d2; ++j) {
                VectorF4 eq(unknowns);
                for (std::size_t k = 0; k < d1; ++k) {
                    const GF4 c = a.get(i, k);
                    if (!c.is_zero()) eq.set(k * d2 + j, eq.get(k * d2 + j) + c);
                }
                for (std::size_t k = 0; k < d2; ++k) {
                    const GF4 c = b.get(k, j);
                    if (!c.is_zero()) eq.set(i * d2 + k, eq.get(i * d2 + k) + c);
                }
                system.insert(std::move(eq));
            }
        }
    }
    std::vector<MatrixF4> out;
    for (const auto& x : system.kernel()) {
        MatrixF4 m(d1, d2);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d2; ++j) m.set(i, j, x.get(i * d2 + j));
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

MatrixF4 vstack(const MatrixF4& a, const MatrixF4& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    BitMatrixF2 lo(a.rows() + b.rows(), a.cols()), hi(a.rows() + b.rows(), a.cols());
    auto copy = [](BitMatrixF2& dst, const BitMatrixF2& top, const BitMatrixF2& bottom) {
        auto& w = dst.words();
        std::copy(top.words().begin(), top.words().end(), w.begin());
        std::copy(bottom.words().begin(), bottom.words().end(), w.begin() + static_cast<std::ptrdiff_t>(top.words().size()));
    };
    copy(lo, a.lo(), b.lo());
    copy(hi, a.hi(), b.hi());
    return MatrixF4(std::move(lo), std::move(hi));
}

MatrixF4 row_range(const MatrixF4& m, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(end - begin);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = begin + i;
    return m.select_rows(idx);
}

MatrixF4 gather_columns(const MatrixF4& m, const std::vector<std::size_t>& cols) {
    MatrixF4 out(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const GF4 v = m.get(i, cols[j]);
            if (!v.is_zero()) out.set(i, j, v);
        }
    return out;
}

/// Rows of V1 (the key part) carried together with their images under an
/// unknown intertwiner, written as one V2 block per free parameter.
struct Wide {
    MatrixF4 key;
    std::vector<MatrixF4> aug;

    std::size_t rows() const { return key.rows(); }

    void add_scaled_row(std::size_t dst, std::size_t src, GF4 c) {
        key.add_scaled_row(dst, src, c);
        for (auto& a : aug) a.add_scaled_row(dst, src, c);
    }
    void scale_row(std::size_t r, GF4 c) {
        key.scale_row(r, c);
        for (auto& a : aug) a.scale_row(r, c);
    }
    void swap_rows(std::size_t x, std::size_t y) {
        key.swap_rows(x, y);
        for (auto& a : aug) a.swap_rows(x, y);
    }
    Wide range(std::size_t begin, std::size_t end) const {
        Wide out{row_range(key, begin, end), {}};
        for (const auto& a : aug) out.aug.push_back(row_range(a, begin, end));
        return out;
    }
    /// this += c * other, c having one column per row of other.
    void add_product(const MatrixF4& c, const Wide& other) {
        if (c.cols() == 0) return;
        key += c * other.key;
        for (std::size_t i = 0; i < aug.size(); ++i) aug[i] += c * other.aug[i];
    }
};

/// Incremental spin of V1 with images in V2. The basis is kept in reduced
/// echelon form on the key columns; remainders with zero key become linear
/// constraints on the parameters.
class HomSpinner {
public:
    HomSpinner(std::span<const MatrixF4> gens1, std::span<const MatrixF4> gens2)
        : gens1_(gens1), gens2_(gens2), d1_(gens1.front().rows()), d2_(gens2.front().rows()) {
        basis_.key = MatrixF4(0, d1_);
    }

    std::size_t rank() const { return basis_.rows(); }
    bool full() const { return rank() == d1_; }

    bool contains(const VectorF4& v) const {
        MatrixF4 m(1, d1_);
        m.set_row(0, v);
        m += gather_columns(m, pivots_) * basis_.key;
        return m.is_zero();
    }

    /// Adds seed v with image ranging over the span of the rows of `images`.
    void add_seed(const VectorF4& v, const MatrixF4& images) {
        if (contains(v)) return;
        const std::size_t first = params();
        for (std::size_t i = 0; i < images.rows(); ++i) {
            basis_.aug.emplace_back(basis_.rows(), d2_);
            for (auto& c : constraints_) c = widen(c, params());
        }
        Wide seed{MatrixF4(1, d1_), {}};
        seed.key.set_row(0, v);
        for (std::size_t i = 0; i < params(); ++i) {
            MatrixF4 block(1, d2_);
            if (i >= first) block.set_row(0, images.row_vector(i - first));
            seed.aug.push_back(std::move(block));
        }
        spin(absorb(std::move(seed)));
    }

    std::vector<MatrixF4> solutions() const {
        if (!full()) throw std::logic_error("hom_basis_spin: spin basis incomplete");
        EchelonF4 system(params());
        for (const auto& c : constraints_) system.insert(c);
        std::vector<MatrixF4> out;
        for (const auto& x : system.kernel()) {
            MatrixF4 y(d1_, d2_);
            for (std::size_t i = 0; i < params(); ++i) {
                const GF4 ci = x.get(i);
                if (!ci.is_zero()) y += ci * basis_.aug[i];
            }
            // The key part is a row permutation of the identity.
            MatrixF4 sol(d1_, d2_);
            for (std::size_t j = 0; j < d1_; ++j) sol.set_row(pivots_[j], y.row_vector(j));
            out.push_back(std::move(sol));
        }
        return out;
    }

private:
    static constexpr std::size_t kChunk = 512;

    std::size_t params() const { return basis_.aug.size(); }

    static VectorF4 widen(const VectorF4& v, std::size_t dim) {
        VectorF4 out(dim);
        for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, v.get(i));
        return out;
    }

    void spin(Wide pending) {
        while (pending.rows() > 0 && !(full() && constraints_full())) {
            Wide next{MatrixF4(0, d1_), std::vector<MatrixF4>(params(), MatrixF4(0, d2_))};
            for (std::size_t begin = 0; begin < pending.rows(); begin += kChunk) {
                const Wide chunk = pending.range(begin, std::min(pending.rows(), begin + kChunk));
                for (std::size_t t = 0; t < gens1_.size(); ++t) {
                    Wide image{chunk.key * gens1_[t], {}};
                    for (const auto& a : chunk.aug) image.aug.push_back(a * gens2_[t]);
                    Wide fresh = absorb(std::move(image));
                    next.key = vstack(next.key, fresh.key);
                    for (std::size_t i = 0; i < params(); ++i) next.aug[i] = vstack(next.aug[i], fresh.aug[i]);
                }
            }
            pending = std::move(next);
        }
    }

    bool constraints_full() const { return params() == 0 || constraint_rank_ == params(); }

    /// Reduces `block` against the basis, echelonizes what is left, records
    /// constraints and merges the new rows. Returns the new rows.
    Wide absorb(Wide block) {
        block.add_product(gather_columns(block.key, pivots_), basis_);
        std::vector<std::size_t> fresh_pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < d1_ && r < block.rows(); ++c) {
            std::size_t p = r;
            while (p < block.rows() && block.key.get(p, c).is_zero()) ++p;
            if (p == block.rows()) continue;
            block.swap_rows(r, p);
            block.scale_row(r, block.key.get(r, c).inverse());
            for (std::size_t i = 0; i < block.rows(); ++i) {
                if (i == r) continue;
                const GF4 e = block.key.get(i, c);
                if (!e.is_zero()) block.add_scaled_row(i, r, e);
            }
            fresh_pivots.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < block.rows(); ++i) record_constraints(block, i);
        Wide fresh = block.range(0, r);
        if (r > 0) {
            basis_.add_product(gather_columns(basis_.key, fresh_pivots), fresh);
            basis_.key = vstack(basis_.key, fresh.key);
            for (std::size_t i = 0; i < params(); ++i) basis_.aug[i] = vstack(basis_.aug[i], fresh.aug[i]);
            pivots_.insert(pivots_.end(), fresh_pivots.begin(), fresh_pivots.end());
        }
        return fresh;
    }

    void record_constraints(const Wide& block, std::size_t row) {
        if (constraints_full()) return;
        EchelonF4 system(params());
        for (const auto& c : constraints_) system.insert(c);
        for (std::size_t col = 0; col < d2_ && !system.full(); ++col) {
            VectorF4 c(params());
            for (std::size_t i = 0; i < params(); ++i) c.set(i, block.aug[i].get(row, col));
            if (!c.is_zero() && system.insert(c)) constraints_.push_back(std::move(c));
        }
        constraint_rank_ = system.rank();
    }

    std::span<const MatrixF4> gens1_;
    std::span<const MatrixF4> gens2_;
    std::size_t d1_;
    std::size_t d2_;
    Wide basis_;
    std::vector<std::size_t> pivots_;
    std::vector<VectorF4> constraints_;
    std::size_t constraint_rank_ = 0;
};

}  // namespace

std::vector<MatrixF4> hom_basis_spin(std::span<const MatrixF4> gens1,
                                     std::span<const MatrixF4> gens2) {
    std::size_t d1 = 0, d2 = 0;
    check_pair(gens1, gens2, d1, d2);
    if (gens1.empty()) throw std::invalid_argument("hom_basis: no generators");
    if (d1 == 0 || d2 == 0) return {};
    const std::size_t ngens = gens1.size();
    HomSpinner spinner(gens1, gens2);

    // A seed v with v a = 0 can only map into the null space of a on V2.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<MatrixF4> pool1(gens1.begin(), gens1.end());
    std::vector<MatrixF4> pool2(gens2.begin(), gens2.end());
    for (int attempt = 0; attempt < 48 && !spinner.full(); ++attempt) {
        if (pool1.size() < ngens + 4) {
            const std::size_t a = rng() % pool1.size();
            const std::size_t b = rng() % pool1.size();
            pool1.push_back(pool1[a] * pool1[b]);
            pool2.push_back(pool2[a] * pool2[b]);
        }
        const GF4 shift(static_cast<std::uint8_t>(rng() % 4));
        MatrixF4 a1 = shift * MatrixF4::identity(d1);
        MatrixF4 a2 = shift * MatrixF4::identity(d2);
        const std::size_t terms = 2 + rng() % 3;
        std::vector<std::pair<std::size_t, GF4>> picks;
        for (std::size_t k = 0; k < terms; ++k) picks.emplace_back(rng() % pool1.size(), random_nonzero(rng));
        for (const auto& [pick, c] : picks) a1 += c * pool1[pick];
        const MatrixF4 k1 = left_kernel(a1);
        // Every seed costs one parameter per row of k2; large null spaces are
        // not worth it.
        if (k1.rows() == 0 || k1.rows() > kMaxSeedNullity) continue;
        for (const auto& [pick, c] : picks) a2 += c * pool2[pick];
        const MatrixF4 k2 = left_kernel(a2);
        for (std::size_t tries = 0; tries < k1.rows() && !spinner.full(); ++tries) {
            VectorF4 v(d1);
            while (v.is_zero())
                for (std::size_t r = 0; r < k1.rows(); ++r)
                    v.add_scaled(k1.row_vector(r), GF4(static_cast<std::uint8_t>(rng() % 4)));
            spinner.add_seed(v, k2);
        }
    }
    for (std::size_t i = 0; i < d1 && !spinner.full(); ++i)
        spinner.add_seed(VectorF4::unit(d1, i), MatrixF4::identity(d2));
    return spinner.solutions();
}

std::vector<MatrixF4> hom_basis(std::span<const MatrixF4> gens1, std::span<const MatrixF4> gens2) {
    std::size_t d1 = 0, d2 = 0;
    check_pair(gens1, gens2, d1, d2);
    if (gens1.empty()) return all_matrices(d1, d2);
    if (d1 * d2 <= 400) return hom_basis_stacked(gens1, gens2);
    return hom_basis_spin(gens1, gens2);
}

std::vector<MatrixF4> solve_commutant(std::span<const MatrixF4> gens) { return hom_basis(gens, gens); }

std::vector<MatrixF4> invariant_bilinear_forms(std::span<const MatrixF4> gens) {
    // g B g^T = B  <=>  g B = B g^{-T}: B intertwines V with its dual.
    std::vector<MatrixF4> dual;
    dual.reserve(gens.size());
    for (const auto& g : gens) dual.push_back(inverse(g).transpose());
    return hom_basis(gens, dual);
}

MatrixF4 spin(const VectorF4& seed, std::span<const MatrixF4> gens) {
    if (seed.is_zero()) throw std::invalid_argument("spin: seed must be nonzero");
    std::size_t dim = seed.dim();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != dim) throw std::invalid_argument("spin: dimension mismatch");
    EchelonF4 span(dim);
    std::vector<VectorF4> basis{seed};
    span.insert(seed);
    for (std::size_t q = 0; q < basis.size() && !span.full(); ++q) {
        for (const auto& g : gens) {
            VectorF4 v = basis[q] * g;
            if (span.insert(v)) basis.push_back(std::move(v));
        }
    }
    return MatrixF4::from_rows(basis, dim);
}

}  // namespace dualmod
