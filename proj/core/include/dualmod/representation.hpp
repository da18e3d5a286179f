#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualmod/matrix_f4.hpp"
#include "dualmod/partition.hpp"
#include "dualmod/permutation.hpp"

namespace dualmod {

enum class GroupKind { Symmetric, Alternating };
enum class FieldKind { F2, F4 };

std::string_view group_name(GroupKind g);
std::string_view field_name(FieldKind f);

/// A generator of the acting group: its permutation and its matrix.
struct Generator {
    std::string label;
    Permutation element;
    MatrixF4 matrix;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// A matrix representation given by generator images. Row vectors, right
/// action: the matrix of g*h (h first) is M(h) M(g).
///
/// Symmetric representations use the Coxeter generators s_1..s_{n-1};
/// alternating ones use s_1 s_i for i = 2..n-1. Either set lets evaluate()
/// produce the matrix of any group element.
class Representation {
public:
    Representation() = default;
    /// Throws std::invalid_argument if a matrix is not dim x dim or (for F2)
    /// has entries outside the prime field. Invertibility is checked
    /// separately by generators_invertible().
    Representation(GroupKind group, FieldKind field, int n, std::size_t dim,
                   std::vector<Generator> gens, std::optional<Partition> lambda = std::nullopt);

    GroupKind group() const noexcept { return group_; }
    FieldKind field() const noexcept { return field_; }
    int degree() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    const std::optional<Partition>& lambda() const noexcept { return lambda_; }

    std::vector<MatrixF4> matrices() const;
    bool generators_invertible() const;
    std::vector<std::string> labels() const;

    /// Matrix of an arbitrary element of the group (even permutations only
    /// for Alternating). Throws std::invalid_argument otherwise.
    MatrixF4 evaluate(const Permutation& g) const;

    /// Same generators with new matrices (restriction, duals, summands).
    Representation with_matrices(std::vector<MatrixF4> matrices, FieldKind field) const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    GroupKind group_ = GroupKind::Symmetric;
    FieldKind field_ = FieldKind::F2;
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<Generator> gens_;
    std::optional<Partition> lambda_;
};

}  // namespace dualmod
