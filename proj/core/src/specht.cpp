#include "dualmod/specht.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <string>

namespace dualmod::specht {

namespace {

void require_strict(const Partition& lambda, const char* what) {
    if (!lambda.is_strict()) throw std::invalid_argument(std::string(what) + ": partition must be strict");
}

void guard(const Partition& lambda, std::uint64_t tabloids, const Options& options) {
    if (tabloids > options.max_tabloids) throw MemoryGuardError(lambda, tabloids, options.max_tabloids);
}

/// Calls visit(row_of) once for every tabloid sigma x, sigma in the column
/// stabilizer of x. Columns are permuted by an odometer of next_permutation.
template <class Visit>
void for_each_column_image(const Tableau& x, Visit&& visit) {
    const Partition& shape = x.shape();
    const std::size_t n = static_cast<std::size_t>(shape.weight());
    const std::size_t width = shape.empty() ? 0 : static_cast<std::size_t>(shape[0]);
    std::vector<std::vector<std::uint8_t>> column_symbols(width);
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (std::size_t c = 0; c < x.rows()[r].size(); ++c)
            column_symbols[c].push_back(static_cast<std::uint8_t>(x.at(r, c) - 1));
    std::vector<std::vector<std::uint8_t>> rows_of(width);
    for (std::size_t c = 0; c < width; ++c) {
        rows_of[c].resize(column_symbols[c].size());
        std::iota(rows_of[c].begin(), rows_of[c].end(), std::uint8_t{0});
    }
    std::vector<std::uint8_t> row_of(n, 0);
    for (;;) {
        for (std::size_t c = 0; c < width; ++c)
            for (std::size_t k = 0; k < column_symbols[c].size(); ++k) row_of[column_symbols[c][k]] = rows_of[c][k];
        visit(row_of.data());
        std::size_t c = 0;
        while (c < width && !std::next_permutation(rows_of[c].begin(), rows_of[c].end())) ++c;
        if (c == width) return;
    }
}

using Supports = std::vector<std::vector<std::uint32_t>>;

Supports supports_of(const std::vector<Tableau>& tableaux, const TabloidIndexer& indexer) {
    Supports out;
    out.reserve(tableaux.size());
    for (const auto& x : tableaux) out.push_back(polytabloid_support(x, indexer));
    return out;
}

/// Inverted index tabloid -> positions in `members` whose support holds it.
struct InvertedIndex {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> entries;

    InvertedIndex(const Supports& supports, std::span<const std::size_t> members, std::uint64_t tabloids)
        : offsets(tabloids + 1, 0) {
        for (std::size_t m : members)
            for (std::uint32_t t : supports[m]) ++offsets[t + 1];
        for (std::size_t t = 0; t < tabloids; ++t) offsets[t + 1] += offsets[t];
        entries.resize(offsets.back());
        std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
        for (std::size_t p = 0; p < members.size(); ++p)
            for (std::uint32_t t : supports[members[p]]) entries[fill[t]++] = static_cast<std::uint32_t>(p);
    }

    std::span<const std::uint32_t> at(std::uint64_t t) const {
        return {entries.data() + offsets[t], entries.data() + offsets[t + 1]};
    }
};

BitMatrixF2 gram_from_supports(const Supports& supports, std::uint64_t tabloids) {
    const std::size_t f = supports.size();
    std::vector<std::size_t> all(f);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const InvertedIndex index(supports, all, tabloids);
    BitMatrixF2 g(f, f);
    for (std::size_t a = 0; a < f; ++a)
        for (std::uint32_t t : supports[a])
            for (std::uint32_t b : index.at(t)) g.flip(a, b);
    return g;
}

}  // namespace

MemoryGuardError::MemoryGuardError(const Partition& lambda, std::uint64_t tabloids, std::uint64_t limit)
    : std::runtime_error("shape " + lambda.to_string() + " has " + std::to_string(tabloids) +
                         " tabloids, above the limit " + std::to_string(limit)),
      tabloids_(tabloids) {}

std::uint64_t tabloid_count(const Partition& lambda) { return TabloidIndexer(lambda).count(); }

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    const std::size_t rows = lambda.length();
    const int n = lambda.weight();
    std::vector<std::vector<int>> filling(rows);
    std::vector<Tableau> out;
    auto place = [&](auto&& self, int symbol) -> void {
        if (symbol > n) {
            out.emplace_back(lambda, filling);
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t len = filling[r].size();
            if (static_cast<int>(len) == lambda[r]) continue;
            if (r > 0 && filling[r - 1].size() <= len) continue;
            filling[r].push_back(symbol);
            self(self, symbol + 1);
            filling[r].pop_back();
        }
    };
    place(place, 1);
    return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
    const int n = lambda.weight();
    std::vector<std::uint64_t> numerator;
    for (int i = 2; i <= n; ++i) numerator.push_back(static_cast<std::uint64_t>(i));
    std::vector<int> column_length(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) ++column_length[static_cast<std::size_t>(c)];
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            const int below = column_length[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            std::uint64_t hook = static_cast<std::uint64_t>(lambda[r] - c + below);
            for (auto& f : numerator) {
                if (hook == 1) break;
                const std::uint64_t g = std::gcd(f, hook);
                f /= g;
                hook /= g;
            }
        }
    std::uint64_t value = 1;
    for (std::uint64_t f : numerator) {
        if (f != 0 && value > std::numeric_limits<std::uint64_t>::max() / f)
            throw std::overflow_error("hook_length_count: result exceeds 64 bits");
        value *= f;
    }
    return value;
}

std::vector<std::uint32_t> polytabloid_support(const Tableau& x, const TabloidIndexer& indexer) {
    if (!(x.shape() == indexer.shape())) throw std::invalid_argument("polytabloid_support: shape mismatch");
    if (indexer.count() > std::uint64_t{0xffffffffu})
        throw std::overflow_error("polytabloid_support: too many tabloids");
    std::vector<std::uint32_t> out;
    for_each_column_image(x, [&](const std::uint8_t* row_of) {
        out.push_back(static_cast<std::uint32_t>(indexer.rank(row_of)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

PolytabloidVector polytabloid(const Tableau& x) {
    const TabloidIndexer indexer(x.shape());
    PolytabloidVector v(x.shape(), indexer.count());
    for (std::uint32_t t : polytabloid_support(x, indexer)) v.flip(t);
    return v;
}

BitMatrixF2 gram_matrix(const Partition& lambda, const Options& options) {
    const TabloidIndexer indexer(lambda);
    guard(lambda, indexer.count(), options);
    return gram_from_supports(supports_of(standard_tableaux(lambda), indexer), indexer.count());
}

std::size_t dim_d(const Partition& lambda, const Options& options) {
    require_strict(lambda, "dim_d");
    return rank(gram_matrix(lambda, options));
}

DModule build_d_module(const Partition& lambda, const Options& options) {
    require_strict(lambda, "build_d_module");
    const int n = lambda.weight();
    if (n < 2) throw std::invalid_argument("build_d_module: need n >= 2");
    const TabloidIndexer indexer(lambda);
    const std::uint64_t tabloids = indexer.count();
    guard(lambda, tabloids, options);

    auto tableaux = standard_tableaux(lambda);
    const Supports supports = supports_of(tableaux, indexer);
    const BitMatrixF2 gram = gram_from_supports(supports, tabloids);
    const std::vector<std::size_t> basis = pivot_rows(gram);
    const std::size_t d = basis.size();
    BitMatrixF2 form = gram.select(basis, basis);
    const BitMatrixF2 form_inverse = inverse(form);

    // H_i[p][q] = <s_i e_p, e_q> on the chosen basis; s_i e_p = sum_r A_i[p][r] e_r
    // modulo the radical, so A_i = H_i G^{-1}.
    const InvertedIndex index(supports, basis, tabloids);
    const std::size_t gens = static_cast<std::size_t>(n - 1);
    std::vector<BitMatrixF2> h(gens, BitMatrixF2(d, d));
    std::vector<std::uint64_t> swapped(gens);
    for (std::size_t p = 0; p < d; ++p)
        for_each_column_image(tableaux[basis[p]], [&](const std::uint8_t* row_of) {
            indexer.rank_with_adjacent_swaps(row_of, swapped.data());
            for (std::size_t i = 0; i < gens; ++i)
                for (std::uint32_t q : index.at(swapped[i])) h[i].flip(p, q);
        });

    std::vector<Generator> generators;
    generators.reserve(gens);
    for (std::size_t i = 0; i < gens; ++i)
        generators.push_back({"s" + std::to_string(i + 1), Permutation::coxeter(static_cast<std::size_t>(n), i + 1),
                              MatrixF4::from_f2(h[i] * form_inverse)});

    DModule out;
    out.lambda = lambda;
    out.tabloids = tabloids;
    out.standard_count = tableaux.size();
    out.basis_tableaux.reserve(d);
    for (std::size_t b : basis) out.basis_tableaux.push_back(std::move(tableaux[b]));
    out.form = std::move(form);
    out.rep = Representation(GroupKind::Symmetric, FieldKind::F2, n, d, std::move(generators), lambda);
    return out;
}

Representation rep_d_lambda(const Partition& lambda, const Options& options) {
    return build_d_module(lambda, options).rep;
}

int tau_pairing(const Partition& lambda, const Tableau& x) {
    require_strict(lambda, "tau_pairing");
    if (!(x.shape() == lambda)) throw std::invalid_argument("tau_pairing: shape mismatch");
    const TabloidIndexer indexer(lambda);
    const auto a = polytabloid_support(x, indexer);
    const auto b = polytabloid_support(x.apply(x.row_reversal()), indexer);
    std::vector<std::uint32_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return static_cast<int>(common.size() % 2);
}

}  // namespace dualmod::specht
