#pragma once

#include <cstddef>
#include <vector>

#include "dualmod/partition.hpp"

namespace dualmod::bressoud {

/// Greedy split of a strict odd partition into blocks of one part, or of two
/// parts differing by exactly 2.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;

    std::size_t s() const noexcept { return blocks.size(); }
    /// Block sums sigma_1..sigma_s, in block order.
    std::vector<int> sums() const;
    /// The parts of mu, in order.
    Partition flatten() const;
};

/// zeta_j = sigma_j + 4(j-1), together with the stable descending sort order.
struct ShiftedComposition {
    std::vector<int> zeta;
    /// order[j] is the block index placed at sorted position j.
    std::vector<std::size_t> order;

    int weight() const;
};

/// Every intermediate stage of mu -> gamma -> lambda.
struct Chain {
    Partition mu;
    BlockDecomposition blocks;
    std::vector<int> sigma;
    ShiftedComposition shifted;
    Partition gamma;
    Partition lambda;
};

BlockDecomposition blocks(const Partition& mu);
ShiftedComposition shift(const std::vector<int>& sigma);

Partition forward(const Partition& mu);
Partition gamma_to_lambda(const Partition& gamma);
Partition inverse(const Partition& lambda);

Chain forward_chain(const Partition& mu);
/// Reconstructs the chain ending in `lambda`; throws unless lambda is in the
/// Benson set.
Chain inverse_chain(const Partition& lambda);

/// Membership in the gap-condition set: parts congruent to 0 or +-1 mod 4,
/// consecutive parts differing by at least 4 and consecutive even parts by
/// at least 8.
bool satisfies_gap_conditions(const Partition& gamma);

/// All partitions of n satisfying the gap conditions, enumerated directly.
std::vector<Partition> gap_partitions(int n);

struct SchurCounts {
    std::size_t strict_odd = 0;
    std::size_t gap_condition = 0;
    std::size_t benson = 0;

    bool agree() const noexcept { return strict_odd == gap_condition && gap_condition == benson; }
};

/// The three counts of the Schur identity special case. At n = 0 each set
/// holds exactly the empty partition.
SchurCounts verify_schur(int n);

/// (n - l(mu)) / 2 == sum of even-indexed parts of the image lambda.
bool verify_sum_lemma(const Partition& mu);

}  // namespace dualmod::bressoud
