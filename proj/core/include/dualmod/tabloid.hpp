#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dualmod/partition.hpp"
#include "dualmod/permutation.hpp"

namespace dualmod {

/// A filling of the Young diagram of `shape` with 1..n, each used once.
class Tableau {
public:
    Tableau() = default;
    /// Throws std::invalid_argument if the row lengths do not match `shape`
    /// or the entries are not a permutation of 1..n.
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    bool is_standard() const;

    /// The tableau g(x): every entry i replaced by g(i).
    Tableau apply(const Permutation& g) const;

    /// The involution reversing the symbols in each row.
    Permutation row_reversal() const;

    std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Row-equivalence class of a tableau: row_of(i) is the row holding symbol i
/// (0-based symbol and row).
class Tabloid {
public:
    Tabloid() = default;
    explicit Tabloid(std::vector<std::uint8_t> row_of) : row_of_(std::move(row_of)) {}
    /// From row sets of 1-based symbols, e.g. {{1,2},{3}}.
    static Tabloid from_rows(const std::vector<std::vector<int>>& rows);
    static Tabloid of(const Tableau& x);

    std::size_t degree() const noexcept { return row_of_.size(); }
    std::uint8_t row_of(std::size_t symbol) const { return row_of_[symbol]; }
    const std::vector<std::uint8_t>& row_map() const noexcept { return row_of_; }

    /// Rows as sorted 1-based symbol sets.
    std::vector<std::vector<int>> rows(std::size_t num_rows) const;
    Tabloid apply(const Permutation& g) const;

    friend bool operator==(const Tabloid&, const Tabloid&) = default;

private:
    std::vector<std::uint8_t> row_of_;
};

/// Bijection between lambda-tabloids and 0..count()-1. Row sets are ranked
/// top to bottom, each in colexicographic order among the symbols not used
/// by earlier rows, combined in mixed radix.
class TabloidIndexer {
public:
    explicit TabloidIndexer(const Partition& lambda);

    const Partition& shape() const noexcept { return lambda_; }
    /// n! / prod(lambda_i!). Throws std::overflow_error past 2^63.
    std::uint64_t count() const noexcept { return suffix_count_.front(); }

    std::uint64_t rank(const Tabloid& t) const;
    std::uint64_t rank(const std::uint8_t* row_of) const;
    /// Rank of `row_of` and, in swapped[s], the rank after exchanging symbols
    /// s and s+1 (0-based), for s = 0..n-2. One pass over the symbols.
    std::uint64_t rank_with_adjacent_swaps(const std::uint8_t* row_of, std::uint64_t* swapped) const;
    /// Throws std::out_of_range if index >= count().
    Tabloid unrank(std::uint64_t index) const;

private:
    Partition lambda_;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> suffix_count_;
    std::vector<std::vector<std::uint64_t>> binom_;
};

/// A vector of M^lambda over GF(2) in the tabloid basis.
class PolytabloidVector {
public:
    PolytabloidVector() = default;
    PolytabloidVector(Partition lambda, std::uint64_t size);

    const Partition& shape() const noexcept { return lambda_; }
    std::uint64_t size() const noexcept { return size_; }
    bool get(std::uint64_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
    void flip(std::uint64_t i) { bits_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    std::size_t popcount() const;
    std::vector<std::uint64_t> support() const;

    /// <v, w> mod 2 for the form making tabloids orthonormal.
    friend int dot(const PolytabloidVector& v, const PolytabloidVector& w);

private:
    Partition lambda_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace dualmod
