#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "brute_tabloids.hpp"
#include "dualmod/linalg.hpp"
#include "dualmod/specht.hpp"

using namespace dualmod;
using namespace dualmod::specht;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::set<oracle::RowSets> support_as_rows(const Tableau& x) {
    const TabloidIndexer idx(x.shape());
    std::set<oracle::RowSets> out;
    for (auto t : polytabloid(x).support()) out.insert(idx.unrank(t).rows(x.shape().length()));
    return out;
}

std::vector<Partition> strict_upto(int n_max, int n_min = 2) {
    std::vector<Partition> out;
    for (int n = n_min; n <= n_max; ++n)
        for (auto& p : enumerate(n, PartitionFilter::Strict)) out.push_back(p);
    return out;
}

}  // namespace

TEST(Tableau, BasicsAndRowReversal) {
    const Tableau x(P({3, 2}), {{1, 2, 3}, {4, 5}});
    EXPECT_TRUE(x.is_standard());
    EXPECT_FALSE(Tableau(P({2, 1}), {{2, 1}, {3}}).is_standard());
    const Permutation tau = x.row_reversal();
    EXPECT_TRUE(tau.is_involution());
    EXPECT_EQ(x.apply(tau), Tableau(P({3, 2}), {{3, 2, 1}, {5, 4}}));
    EXPECT_THROW(Tableau(P({2, 1}), {{1, 1}, {3}}), std::invalid_argument);
    EXPECT_THROW(Tableau(P({2, 1}), {{1, 2, 3}}), std::invalid_argument);
}

TEST(Tabloid, RankExamples) {
    const TabloidIndexer idx(P({2, 1}));
    EXPECT_EQ(idx.count(), 3u);
    EXPECT_EQ(idx.rank(Tabloid::from_rows({{1, 2}, {3}})), 0u);
    EXPECT_EQ(idx.unrank(0), Tabloid::from_rows({{1, 2}, {3}}));
    std::set<std::vector<std::uint8_t>> seen;
    for (std::uint64_t i = 0; i < 3; ++i) seen.insert(idx.unrank(i).row_map());
    EXPECT_EQ(seen.size(), 3u);
    const TabloidIndexer single(P({6}));
    EXPECT_EQ(single.count(), 1u);
    EXPECT_EQ(single.rank(Tabloid::from_rows({{1, 2, 3, 4, 5, 6}})), 0u);
    EXPECT_THROW(idx.unrank(3), std::out_of_range);
}

TEST(Tabloid, RankUnrankBijectionMatchesBruteForce) {
    for (const auto& shape : {P({3, 2}), P({2, 2, 1}), P({4, 2, 1}), P({3, 3, 1}), P({3, 2, 1})}) {
        const TabloidIndexer idx(shape);
        const auto brute = oracle::all_tabloids(shape.parts());
        ASSERT_EQ(idx.count(), brute.size());
        std::set<oracle::RowSets> seen;
        for (std::uint64_t i = 0; i < idx.count(); ++i) {
            const Tabloid t = idx.unrank(i);
            EXPECT_EQ(idx.rank(t), i);
            seen.insert(t.rows(shape.length()));
        }
        EXPECT_EQ(seen, brute);
    }
}

TEST(Tabloid, AdjacentSwapRanks) {
    for (const auto& shape : {P({3, 2}), P({4, 2, 1}), P({3, 2, 2, 1})}) {
        const TabloidIndexer idx(shape);
        const std::size_t n = static_cast<std::size_t>(shape.weight());
        std::vector<std::uint64_t> swapped(n - 1);
        for (std::uint64_t i = 0; i < idx.count(); ++i) {
            const Tabloid t = idx.unrank(i);
            EXPECT_EQ(idx.rank_with_adjacent_swaps(t.row_map().data(), swapped.data()), i);
            for (std::size_t s = 0; s + 1 < n; ++s)
                EXPECT_EQ(swapped[s], idx.rank(t.apply(Permutation::coxeter(n, s + 1))));
        }
    }
}

TEST(Polytabloid, Examples) {
    const Tableau x(P({2, 1}), {{1, 2}, {3}});
    EXPECT_EQ(support_as_rows(x), (std::set<oracle::RowSets>{{{1, 2}, {3}}, {{2, 3}, {1}}}));
    const Tableau y(P({2, 1}), {{1, 3}, {2}});
    EXPECT_EQ(support_as_rows(y), (std::set<oracle::RowSets>{{{1, 3}, {2}}, {{2, 3}, {1}}}));
    const Tableau row(P({4}), {{1, 2, 3, 4}});
    EXPECT_EQ(polytabloid(row).popcount(), 1u);
}

TEST(Polytabloid, MatchesBruteForceOverSn) {
    for (const auto& shape : {P({3, 2}), P({3, 2, 1}), P({2, 2, 1}), P({4, 3})})
        for (const auto& x : standard_tableaux(shape)) {
            EXPECT_EQ(support_as_rows(x), oracle::polytabloid(x.rows())) << x.to_string();
            std::uint64_t stabilizer = 1;
            std::vector<int> cols(static_cast<std::size_t>(shape[0]), 0);
            for (int part : shape.parts())
                for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
            for (int c : cols)
                for (int k = 2; k <= c; ++k) stabilizer *= static_cast<std::uint64_t>(k);
            EXPECT_LE(polytabloid(x).popcount(), stabilizer);
        }
}

TEST(StandardTableaux, Examples) {
    EXPECT_EQ(standard_tableaux(P({2, 1})).size(), 2u);
    EXPECT_EQ(standard_tableaux(P({5})).size(), 1u);
    EXPECT_EQ(standard_tableaux(P({3, 2})).size(), 5u);
    EXPECT_EQ(hook_length_count(P({3, 2})), 5u);
    EXPECT_EQ(hook_length_count(P({2, 1})), 2u);
}

TEST(StandardTableaux, MatchBruteForceAndHookLength) {
    for (const auto& shape : {P({3, 2}), P({3, 2, 1}), P({4, 2, 1}), P({2, 2, 2}), P({5, 3})}) {
        const auto tabs = standard_tableaux(shape);
        std::set<oracle::RowSets> got;
        for (const auto& t : tabs) {
            EXPECT_TRUE(t.is_standard());
            got.insert(t.rows());
        }
        const auto brute = oracle::standard_fillings(shape.parts());
        EXPECT_EQ(got, std::set<oracle::RowSets>(brute.begin(), brute.end()));
        EXPECT_EQ(tabs.size(), hook_length_count(shape));
    }
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : enumerate(n, PartitionFilter::All)) EXPECT_EQ(standard_tableaux(p).size(), hook_length_count(p)) << p.to_string();
}

TEST(Gram, Examples) {
    EXPECT_EQ(gram_matrix(P({2, 1})), BitMatrixF2::from_rows({{0, 1}, {1, 0}}));
    EXPECT_EQ(gram_matrix(P({4})), BitMatrixF2::from_rows({{1}}));
    const BitMatrixF2 g = gram_matrix(P({3, 2}));
    EXPECT_EQ(g.rows(), 5u);
    EXPECT_TRUE(g.is_symmetric());
    EXPECT_EQ(rank(g), 4u);
}

TEST(Gram, MatchesBrutePairingAndIsSymmetric) {
    for (const auto& shape : {P({3, 2}), P({3, 2, 1}), P({4, 2}), P({2, 2, 1})}) {
        const auto tabs = standard_tableaux(shape);
        const BitMatrixF2 g = gram_matrix(shape);
        std::vector<std::set<oracle::RowSets>> polys;
        for (const auto& t : tabs) polys.push_back(oracle::polytabloid(t.rows()));
        for (std::size_t i = 0; i < tabs.size(); ++i)
            for (std::size_t j = 0; j < tabs.size(); ++j)
                EXPECT_EQ(g.get(i, j), oracle::pairing(polys[i], polys[j]) == 1);
    }
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : enumerate(n, PartitionFilter::All)) EXPECT_TRUE(gram_matrix(p).is_symmetric());
}

TEST(DimD, Examples) {
    EXPECT_EQ(dim_d(P({6})), 1u);
    EXPECT_EQ(dim_d(P({2, 1})), 2u);
    EXPECT_EQ(dim_d(P({3, 2})), 4u);
    EXPECT_EQ(dim_d(P({4, 1})), 4u);
    EXPECT_EQ(dim_d(P({7, 6})), 64u);
    EXPECT_THROW(dim_d(P({2, 2})), std::invalid_argument);
    for (const auto& p : strict_upto(10, 1)) EXPECT_GT(dim_d(p), 0u);
}

TEST(MemoryGuard, RefusesLargeShapes) {
    Options small;
    small.max_tabloids = 9;
    EXPECT_THROW(build_d_module(P({3, 2}), small), MemoryGuardError);
    try {
        gram_matrix(P({3, 2}), small);
        FAIL();
    } catch (const MemoryGuardError& e) {
        EXPECT_EQ(e.tabloids(), 10u);
    }
    small.max_tabloids = 10;
    EXPECT_EQ(dim_d(P({3, 2}), small), 4u);
    EXPECT_EQ(tabloid_count(P({5, 4, 3, 1})), 360360u);
    EXPECT_LE(tabloid_count(P({5, 4, 3, 1})), kDefaultMaxTabloids);
}

TEST(DModule, Examples) {
    const auto trivial = rep_d_lambda(P({4}));
    EXPECT_EQ(trivial.dim(), 1u);
    for (const auto& g : trivial.generators()) EXPECT_EQ(g.matrix, MatrixF4::identity(1));
    const auto two_one = rep_d_lambda(P({2, 1}));
    EXPECT_EQ(two_one.dim(), 2u);
    // The image of S3: closing {s1, s2} under products gives 6 matrices.
    std::vector<MatrixF4> group{MatrixF4::identity(2)};
    for (std::size_t k = 0; k < group.size(); ++k)
        for (const auto& g : two_one.generators()) {
            const MatrixF4 m = group[k] * g.matrix;
            if (std::find(group.begin(), group.end(), m) == group.end()) group.push_back(m);
        }
    EXPECT_EQ(group.size(), 6u);
    EXPECT_THROW(rep_d_lambda(P({1, 1})), std::invalid_argument);
    EXPECT_THROW(rep_d_lambda(P({1})), std::invalid_argument);
}

TEST(DModule, CoxeterRelationsAndFormInvariance) {
    for (const auto& lambda : strict_upto(10)) {
        const DModule d = build_d_module(lambda);
        const auto& gens = d.rep.generators();
        const std::size_t dim = d.rep.dim();
        const MatrixF4 id = MatrixF4::identity(dim);
        const MatrixF4 form = MatrixF4::from_f2(d.form);
        EXPECT_TRUE(d.form.is_symmetric());
        EXPECT_EQ(rank(d.form), dim);
        EXPECT_EQ(d.basis_tableaux.size(), dim);
        EXPECT_EQ(d.standard_count, hook_length_count(lambda));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const MatrixF4& s = gens[i].matrix;
            EXPECT_TRUE(s.is_f2());
            EXPECT_EQ(s * s, id) << lambda.to_string();
            EXPECT_EQ(s * form * s.transpose(), form) << lambda.to_string();
            if (i + 1 < gens.size()) {
                const MatrixF4& t = gens[i + 1].matrix;
                EXPECT_EQ(s * t * s, t * s * t) << lambda.to_string();
            }
            for (std::size_t j = i + 2; j < gens.size(); ++j) EXPECT_EQ(s * gens[j].matrix, gens[j].matrix * s);
        }
    }
}

TEST(DModule, EveryBasisVectorSpinsToWholeSpace) {
    for (const auto& lambda : strict_upto(8)) {
        const auto rep = rep_d_lambda(lambda);
        const auto mats = rep.matrices();
        for (std::size_t i = 0; i < rep.dim(); ++i)
            EXPECT_EQ(spin(VectorF4::unit(rep.dim(), i), mats).rows(), rep.dim()) << lambda.to_string();
    }
}

TEST(DModule, IndependentOfGramPivotChoice) {
    // dim agrees with the Gram rank computed from brute-force pairings.
    for (const auto& shape : {P({3, 2}), P({3, 2, 1}), P({4, 2, 1})}) {
        std::vector<std::set<oracle::RowSets>> polys;
        for (const auto& t : standard_tableaux(shape)) polys.push_back(oracle::polytabloid(t.rows()));
        BitMatrixF2 g(polys.size(), polys.size());
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < polys.size(); ++j) g.set(i, j, oracle::pairing(polys[i], polys[j]));
        EXPECT_EQ(rep_d_lambda(shape).dim(), rank(g));
    }
}

TEST(TauPairing, Examples) {
    EXPECT_EQ(tau_pairing(P({2, 1}), Tableau(P({2, 1}), {{1, 2}, {3}})), 1);
    EXPECT_EQ(tau_pairing(P({5}), Tableau(P({5}), {{1, 2, 3, 4, 5}})), 1);
    for (const auto& x : standard_tableaux(P({3, 2}))) EXPECT_EQ(tau_pairing(P({3, 2}), x), 1);
    EXPECT_THROW(tau_pairing(P({2, 2}), Tableau(P({2, 2}), {{1, 2}, {3, 4}})), std::invalid_argument);
    EXPECT_THROW(tau_pairing(P({3, 1}), Tableau(P({2, 1}), {{1, 2}, {3}})), std::invalid_argument);
}

TEST(TauPairing, IsOneAndSignMatchesUpTo10) {
    for (const auto& lambda : strict_upto(10, 1)) {
        for (const auto& x : standard_tableaux(lambda)) {
            EXPECT_EQ(tau_pairing(lambda, x), 1) << x.to_string();
            EXPECT_EQ(x.row_reversal().parity(), tau_parity(lambda)) << x.to_string();
        }
        // Non-standard fillings pair to 1 as well.
        if (lambda.weight() < 2) continue;
        const Permutation twist = Permutation::coxeter(static_cast<std::size_t>(lambda.weight()), 1);
        EXPECT_EQ(tau_pairing(lambda, standard_tableaux(lambda).front().apply(twist)), 1);
    }
}

TEST(TauPairing, BruteForceAgreesForSmallShapes) {
    for (const auto& lambda : {P({3, 2}), P({3, 2, 1}), P({4, 3})})
        for (const auto& x : standard_tableaux(lambda)) {
            const auto a = oracle::polytabloid(x.rows());
            const auto b = oracle::polytabloid(x.apply(x.row_reversal()).rows());
            EXPECT_EQ(oracle::pairing(a, b), tau_pairing(lambda, x));
        }
}

TEST(FormInvariance, TabloidActionPreservesPairing) {
    const Partition shape({3, 2, 1});
    const auto tabs = standard_tableaux(shape);
    const TabloidIndexer idx(shape);
    auto act = [&](const PolytabloidVector& v, const Permutation& g) {
        PolytabloidVector out(shape, idx.count());
        for (auto t : v.support()) out.flip(idx.rank(idx.unrank(t).apply(g)));
        return out;
    };
    for (std::size_t i = 0; i < tabs.size(); i += 3)
        for (std::size_t j = 0; j < tabs.size(); j += 5)
            for (std::size_t s = 1; s < 6; ++s) {
                const Permutation g = Permutation::coxeter(6, s) * Permutation::coxeter(6, 6 - s);
                const auto v = polytabloid(tabs[i]), w = polytabloid(tabs[j]);
                EXPECT_EQ(dot(act(v, g), act(w, g)), dot(v, w));
            }
}
