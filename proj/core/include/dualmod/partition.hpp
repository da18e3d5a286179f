#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualmod {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Values are immutable after construction. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing with
    /// every part >= 1.
    explicit Partition(std::vector<int> parts);

    /// Parses the comma-separated literal used by the CLI, e.g. "7,5,1".
    /// The empty string and "0" both denote the empty partition.
    static Partition parse(std::string_view literal);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Strictly decreasing; for p = 2 this is the same as 2-regular.
    bool is_strict() const noexcept;
    bool is_odd() const noexcept;

    /// "(7,5,1)"; the empty partition prints as "()".
    std::string to_string() const;
    /// "7,5,1", the literal accepted by parse().
    std::string to_literal() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

enum class PartitionFilter { All, Strict, Odd, StrictOdd, Benson, BensonPlus };

PartitionFilter parse_filter(std::string_view name);
std::string_view filter_name(PartitionFilter filter);

/// All partitions of n passing `filter`, lexicographically decreasing.
///
/// The empty partition is returned for n = 0 under All and Strict only.
std::vector<Partition> enumerate(int n, PartitionFilter filter);

/// Pairs (lambda_{2j-1}, lambda_{2j}); an odd-length partition gets a
/// virtual trailing zero that is never stored in the Partition itself.
struct PairedView {
    std::vector<std::pair<int, int>> pairs;

    explicit PairedView(const Partition& lambda);
    std::size_t s() const noexcept { return pairs.size(); }
    Partition flatten() const;
};

enum class DualityVerdict { NotSplit, SelfDualPair, DualPair };

std::string_view verdict_name(DualityVerdict verdict);
DualityVerdict parse_verdict(std::string_view name);

/// Benson's criterion: D^lambda restricted to A_n is reducible iff every pair
/// has difference 1 or 2 and sum not congruent to 2 mod 4.
bool benson_reducible(const Partition& lambda);

/// Sum of the even-indexed parts, lambda_2 + lambda_4 + ...
int even_part_sum(const Partition& lambda);

DualityVerdict summand_duality(const Partition& lambda);

/// Parity of the row-reversing involution: sum of floor(lambda_i / 2) mod 2.
int tau_parity(const Partition& lambda);

/// Number of partitions of n by the Euler recurrence. Used as an oracle
/// independent of enumerate().
std::uint64_t partition_count(int n);

}  // namespace dualmod
