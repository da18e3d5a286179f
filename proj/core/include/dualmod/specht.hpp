#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/partition.hpp"
#include "dualmod/representation.hpp"
#include "dualmod/tabloid.hpp"

namespace dualmod::specht {

inline constexpr std::uint64_t kDefaultMaxTabloids = std::uint64_t{1} << 24;

struct Options {
    /// Refuse shapes with more tabloids than this.
    std::uint64_t max_tabloids = kDefaultMaxTabloids;
};

/// Thrown when a shape exceeds Options::max_tabloids.
class MemoryGuardError : public std::runtime_error {
public:
    MemoryGuardError(const Partition& lambda, std::uint64_t tabloids, std::uint64_t limit);
    std::uint64_t tabloids() const noexcept { return tabloids_; }

private:
    std::uint64_t tabloids_;
};

std::uint64_t tabloid_count(const Partition& lambda);

/// Standard tableaux, generated by placing 1..n in turn into the topmost
/// admissible row first.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// n! / prod of hook lengths; independent of standard_tableaux().
std::uint64_t hook_length_count(const Partition& lambda);

/// Sorted tabloid ranks {sigma x} over the column stabilizer of x. Column
/// permutations give pairwise distinct tabloids, so this is the support of
/// the polytabloid e_x over GF(2).
std::vector<std::uint32_t> polytabloid_support(const Tableau& x, const TabloidIndexer& indexer);

PolytabloidVector polytabloid(const Tableau& x);

/// <e_{x_i}, e_{x_j}> mod 2 over the standard tableaux x_i.
BitMatrixF2 gram_matrix(const Partition& lambda, const Options& options = {});

/// dim D^lambda = rank of the Gram matrix over GF(2). Requires strict lambda.
std::size_t dim_d(const Partition& lambda, const Options& options = {});

/// D^lambda with its coordinate data.
struct DModule {
    Partition lambda;
    std::uint64_t tabloids = 0;
    std::size_t standard_count = 0;
    /// Standard tableaux whose polytabloids form the basis of D^lambda.
    std::vector<Tableau> basis_tableaux;
    /// <e_i, e_j> on the basis: the invariant symmetric form, nondegenerate.
    BitMatrixF2 form;
    /// Coxeter generators s_1..s_{n-1} over F2.
    Representation rep;
};

/// Requires strict lambda with n >= 2.
DModule build_d_module(const Partition& lambda, const Options& options = {});
Representation rep_d_lambda(const Partition& lambda, const Options& options = {});

/// <tau e_x, e_x> mod 2 where tau reverses every row of x. Requires strict
/// lambda.
int tau_pairing(const Partition& lambda, const Tableau& x);

}  // namespace dualmod::specht
