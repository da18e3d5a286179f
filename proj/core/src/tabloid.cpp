#include "dualmod/tabloid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dualmod {

// ----------------------------------------------------------------- Tableau

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length()) throw std::invalid_argument("Tableau: row count mismatch");
    const int n = shape_.weight();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_[r])
            throw std::invalid_argument("Tableau: row length mismatch");
        for (int x : rows_[r]) {
            if (x < 1 || x > n || seen[x]) throw std::invalid_argument("Tableau: entries must be 1..n once");
            seen[x] = true;
        }
    }
}

bool Tableau::is_standard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
            if (r > 0 && rows_[r][c] < rows_[r - 1][c]) return false;
        }
    return true;
}

Tableau Tableau::apply(const Permutation& g) const {
    auto rows = rows_;
    for (auto& row : rows)
        for (int& x : row) x = g(static_cast<std::size_t>(x - 1)) + 1;
    return Tableau(shape_, std::move(rows));
}

Permutation Tableau::row_reversal() const {
    std::vector<int> images(static_cast<std::size_t>(shape_.weight()));
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) images[row[c] - 1] = row[row.size() - 1 - c] - 1;
    return Permutation(std::move(images));
}

std::string Tableau::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << (r ? " / " : "");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) out << (c ? " " : "") << rows_[r][c];
    }
    return out.str();
}

// ----------------------------------------------------------------- Tabloid

Tabloid Tabloid::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    std::vector<std::uint8_t> row_of(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int x : rows[r]) {
            if (x < 1 || static_cast<std::size_t>(x) > n || seen[x - 1])
                throw std::invalid_argument("Tabloid: rows must partition 1..n");
            seen[x - 1] = true;
            row_of[x - 1] = static_cast<std::uint8_t>(r);
        }
    return Tabloid(std::move(row_of));
}

Tabloid Tabloid::of(const Tableau& x) { return from_rows(x.rows()); }

std::vector<std::vector<int>> Tabloid::rows(std::size_t num_rows) const {
    std::vector<std::vector<int>> out(num_rows);
    for (std::size_t i = 0; i < row_of_.size(); ++i) out.at(row_of_[i]).push_back(static_cast<int>(i) + 1);
    return out;
}

Tabloid Tabloid::apply(const Permutation& g) const {
    std::vector<std::uint8_t> row_of(row_of_.size());
    for (std::size_t i = 0; i < row_of_.size(); ++i) row_of[g(i)] = row_of_[i];
    return Tabloid(std::move(row_of));
}

// --------------------------------------------------------- TabloidIndexer

TabloidIndexer::TabloidIndexer(const Partition& lambda)
    : lambda_(lambda), n_(static_cast<std::size_t>(lambda.weight())) {
    if (lambda.length() > 255 || n_ > 255) throw std::invalid_argument("TabloidIndexer: shape too large");
    binom_.assign(n_ + 1, std::vector<std::uint64_t>(n_ + 2, 0));
    for (std::size_t m = 0; m <= n_; ++m) {
        binom_[m][0] = 1;
        for (std::size_t k = 1; k <= m; ++k) {
            const std::uint64_t a = binom_[m - 1][k - 1];
            const std::uint64_t b = k <= m - 1 ? binom_[m - 1][k] : 0;
            binom_[m][k] = (a > std::numeric_limits<std::uint64_t>::max() - b)
                               ? std::numeric_limits<std::uint64_t>::max()
                               : a + b;
        }
    }
    const std::size_t rows = lambda.length();
    suffix_count_.assign(rows + 1, 1);
    std::size_t remaining = 0;
    for (std::size_t r = rows; r-- > 0;) {
        remaining += static_cast<std::size_t>(lambda[r]);
        const std::uint64_t choose = binom_[remaining][static_cast<std::size_t>(lambda[r])];
        if (choose != 0 && suffix_count_[r + 1] > (std::uint64_t{1} << 63) / choose)
            throw std::overflow_error("TabloidIndexer: tabloid count too large");
        suffix_count_[r] = choose * suffix_count_[r + 1];
    }
}

std::uint64_t TabloidIndexer::rank(const Tabloid& t) const {
    if (t.degree() != n_) throw std::invalid_argument("TabloidIndexer: degree mismatch");
    return rank(t.row_map().data());
}

std::uint64_t TabloidIndexer::rank(const std::uint8_t* row_of) const {
    // A symbol in row r sits at position (#earlier symbols in rows >= r)
    // among the symbols still unplaced when row r is chosen.
    std::uint8_t seen[256] = {};
    const std::size_t rows = lambda_.length();
    std::uint64_t index = 0;
    for (std::size_t s = 0; s < n_; ++s) {
        const std::size_t r = row_of[s];
        std::size_t position = 0;
        for (std::size_t q = r; q < rows; ++q) position += seen[q];
        const std::size_t k = seen[r] + 1u;
        if (k <= position) index += binom_[position][k] * suffix_count_[r + 1];
        ++seen[r];
    }
    return index;
}

std::uint64_t TabloidIndexer::rank_with_adjacent_swaps(const std::uint8_t* row_of,
                                                       std::uint64_t* swapped) const {
    // Exchanging s and s+1 in different rows only changes the terms of those
    // two symbols; every other symbol sees the same multiset of earlier rows.
    std::uint8_t seen[256] = {};
    const std::size_t rows = lambda_.length();
    auto term = [&](std::size_t position, std::size_t k, std::size_t r) -> std::uint64_t {
        return k <= position ? binom_[position][k] * suffix_count_[r + 1] : 0;
    };
    auto earlier_at_or_below = [&](std::size_t r) {
        std::size_t e = 0;
        for (std::size_t q = r; q < rows; ++q) e += seen[q];
        return e;
    };
    std::uint64_t index = 0;
    std::vector<std::int64_t> delta(n_ > 0 ? n_ - 1 : 0, 0);
    for (std::size_t s = 0; s < n_; ++s) {
        const std::size_t a = row_of[s];
        const std::size_t ea = earlier_at_or_below(a);
        const std::size_t ka = seen[a] + 1u;
        index += term(ea, ka, a);
        if (s + 1 < n_) {
            const std::size_t b = row_of[s + 1];
            if (a != b) {
                const std::size_t eb = earlier_at_or_below(b);
                const std::size_t kb = seen[b] + 1u;
                const std::uint64_t before = term(ea, ka, a) + term(eb + (a > b ? 1 : 0), kb, b);
                const std::uint64_t after = term(eb, kb, b) + term(ea + (b > a ? 1 : 0), ka, a);
                delta[s] = static_cast<std::int64_t>(after) - static_cast<std::int64_t>(before);
            }
        }
        ++seen[a];
    }
    for (std::size_t s = 0; s + 1 < n_; ++s)
        swapped[s] = static_cast<std::uint64_t>(static_cast<std::int64_t>(index) + delta[s]);
    return index;
}

Tabloid TabloidIndexer::unrank(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("TabloidIndexer: index out of range");
    const std::size_t rows = lambda_.length();
    std::vector<std::uint8_t> row_of(n_, 0);
    std::vector<std::size_t> free_symbols(n_);
    for (std::size_t i = 0; i < n_; ++i) free_symbols[i] = i;
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t sub = index / suffix_count_[r + 1];
        index %= suffix_count_[r + 1];
        const std::size_t k = static_cast<std::size_t>(lambda_[r]);
        std::vector<std::size_t> positions(k);
        std::size_t c = free_symbols.size();
        for (std::size_t i = k; i >= 1; --i) {
            // Largest c with C(c, i) <= sub.
            --c;
            while (binom_[c][i] > sub) --c;
            sub -= binom_[c][i];
            positions[i - 1] = c;
        }
        std::vector<std::size_t> next;
        next.reserve(free_symbols.size() - k);
        std::size_t p = 0;
        for (std::size_t i = 0; i < free_symbols.size(); ++i) {
            if (p < k && positions[p] == i) {
                row_of[free_symbols[i]] = static_cast<std::uint8_t>(r);
                ++p;
            } else {
                next.push_back(free_symbols[i]);
            }
        }
        free_symbols = std::move(next);
    }
    return Tabloid(std::move(row_of));
}

// ------------------------------------------------------ PolytabloidVector

PolytabloidVector::PolytabloidVector(Partition lambda, std::uint64_t size)
    : lambda_(std::move(lambda)), size_(size), bits_((size + 63) / 64, 0) {}

std::size_t PolytabloidVector::popcount() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<std::uint64_t> PolytabloidVector::support() const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

int dot(const PolytabloidVector& v, const PolytabloidVector& w) {
    if (v.size_ != w.size_) throw std::invalid_argument("dot: size mismatch");
    std::size_t total = 0;
    for (std::size_t i = 0; i < v.bits_.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(v.bits_[i] & w.bits_[i]));
    return static_cast<int>(total % 2);
}

}  // namespace dualmod
