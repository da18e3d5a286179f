#pragma once

#include <cstdint>
#include <vector>

#include "dualmod/partition.hpp"

namespace dualmod::census {

/// A 2-regular conjugacy class C_mu of S_n viewed inside A_n.
struct ClassRecord {
    Partition mu;
    /// C_mu is a union of two A_n-classes; happens iff mu has distinct parts.
    bool splits = false;
    /// Closed under inversion in A_n.
    bool real = false;

    /// (n - l(mu)) / 2, the number of transpositions in an inverting involution.
    int inverting_transpositions() const;
};

std::vector<ClassRecord> two_regular_classes(int n);

/// Number of real 2-regular classes of A_n, i.e. the number of self-dual
/// irreducible kA_n-modules.
std::uint64_t self_dual_count(int n);

/// 2|S(n)| + |D(n) \ S(n)|.
std::uint64_t irreducible_count(int n);

/// 2-regular classes of A_n, counting each split class twice.
std::uint64_t class_count_with_splitting(int n);

/// 2|S(n)^+| + |D(n) \ S(n)|.
std::uint64_t predicted_self_dual_count(int n);

/// Both counting identities. Meaningful for n >= 3; smaller n is reported but
/// the formulas overcount there.
bool census_consistent(int n);

}  // namespace dualmod::census
