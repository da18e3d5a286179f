#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/matrix_f4.hpp"

namespace dualmod {

/// Incrementally built reduced row echelon basis over GF(4). Every stored row
/// has a 1 at its pivot and zeros at all other pivots.
class EchelonF4 {
public:
    explicit EchelonF4(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

    /// Reduces v in place against the basis; returns true if a nonzero
    /// remainder is left.
    bool reduce(VectorF4& v) const;
    bool contains(const VectorF4& v) const;
    /// Adds v to the span; returns false if it was already there.
    bool insert(VectorF4 v);

    const std::vector<VectorF4>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Basis of {x : r . x = 0 for every stored row r}.
    std::vector<VectorF4> kernel() const;

private:
    std::size_t dim_;
    std::vector<VectorF4> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const MatrixF4& m);

/// Rows x with m * x^T = 0, as the rows of the result.
MatrixF4 right_kernel(const MatrixF4& m);
/// Rows v with v * m = 0.
MatrixF4 left_kernel(const MatrixF4& m);

/// Reduced row echelon basis of the row space.
MatrixF4 row_space(const MatrixF4& m);

/// Throws std::domain_error if singular.
MatrixF4 inverse(const MatrixF4& m);
bool is_invertible(const MatrixF4& m);

/// Coordinates with respect to a fixed full-row-rank basis W (rows).
class SubspaceCoordinates {
public:
    explicit SubspaceCoordinates(const MatrixF4& basis);

    std::size_t dim() const noexcept { return basis_rank_; }
    /// Coefficients c with c * W = v; nullopt if v is outside the row space.
    std::optional<VectorF4> coords(const VectorF4& v) const;
    /// Row-wise coords of every row of m; throws if some row is outside.
    MatrixF4 coords(const MatrixF4& m) const;

private:
    std::size_t basis_rank_ = 0;
    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
    MatrixF4 reduced_;    // R = T W, reduced row echelon
    MatrixF4 transform_;  // T
};

/// Matrix of g on an invariant subspace with basis rows W: W g = C W.
MatrixF4 action_on_subspace(const MatrixF4& basis, const MatrixF4& g);

/// Intertwiners {X : g1[t] X = X g2[t] for all t} with row-vector actions.
/// Dispatches to the stacked solver for small d1*d2, otherwise the spin
/// solver.
std::vector<MatrixF4> hom_basis(std::span<const MatrixF4> gens1, std::span<const MatrixF4> gens2);
/// Solves the d1*d2-unknown linear system generator by generator.
std::vector<MatrixF4> hom_basis_stacked(std::span<const MatrixF4> gens1,
                                        std::span<const MatrixF4> gens2);
/// Spins V1 from seeds chosen in null spaces of group algebra elements and
/// solves for the seed images; exact for every input.
std::vector<MatrixF4> hom_basis_spin(std::span<const MatrixF4> gens1,
                                     std::span<const MatrixF4> gens2);

/// Basis of {X : X g = g X for all g}.
std::vector<MatrixF4> solve_commutant(std::span<const MatrixF4> gens);

/// Basis of {B : g B g^T = B for all g}.
std::vector<MatrixF4> invariant_bilinear_forms(std::span<const MatrixF4> gens);

/// Smallest subspace containing `seed` and closed under every generator,
/// as rows in spin order. Throws std::invalid_argument on a zero seed.
MatrixF4 spin(const VectorF4& seed, std::span<const MatrixF4> gens);

}  // namespace dualmod
