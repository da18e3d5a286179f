#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dualmod/class_census.hpp"
#include "dualmod/linalg.hpp"
#include "dualmod/module_splitter.hpp"

using namespace dualmod;
using namespace dualmod::splitter;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Restriction restricted(const Partition& lambda) {
    return restrict_d_module(cache::d_module_record(lambda, {}, nullptr));
}

Representation c3_character(GF4 value) {
    const Representation base = restrict_to_alternating(specht::rep_d_lambda(P({3})));
    return base.with_matrices({MatrixF4::from_values({{value}})}, FieldKind::F4);
}

GF4 form_value(const VectorF4& x, const MatrixF4& b, const VectorF4& y) {
    const VectorF4 xb = x * b;
    GF4 s;
    for (std::size_t i = 0; i < y.dim(); ++i) s += xb.get(i) * y.get(i);
    return s;
}

std::size_t order(const MatrixF4& m) {
    const MatrixF4 id = MatrixF4::identity(m.rows());
    MatrixF4 p = m;
    for (std::size_t k = 1; k <= 720; ++k, p = p * m)
        if (p == id) return k;
    return 0;
}

}  // namespace

TEST(Restrict, Examples) {
    const auto trivial = restrict_to_alternating(specht::rep_d_lambda(P({3})));
    EXPECT_EQ(trivial.group(), GroupKind::Alternating);
    EXPECT_EQ(trivial.field(), FieldKind::F4);
    EXPECT_EQ(trivial.dim(), 1u);
    ASSERT_EQ(trivial.generators().size(), 1u);
    EXPECT_EQ(trivial.generators()[0].matrix, MatrixF4::identity(1));

    const auto c3 = restrict_to_alternating(specht::rep_d_lambda(P({2, 1})));
    EXPECT_EQ(c3.dim(), 2u);
    ASSERT_EQ(c3.generators().size(), 1u);
    EXPECT_EQ(order(c3.generators()[0].matrix), 3u);

    const auto a5 = restrict_to_alternating(specht::rep_d_lambda(P({3, 2})));
    EXPECT_EQ(a5.dim(), 4u);
    EXPECT_EQ(a5.generators().size(), 3u);
    EXPECT_THROW(restrict_to_alternating(specht::rep_d_lambda(P({2}))), std::invalid_argument);
    EXPECT_THROW(restrict_to_alternating(a5), std::invalid_argument);
}

TEST(Restrict, GeneratorsAreProductsOfCoxeterMatrices) {
    const auto full = specht::rep_d_lambda(P({4, 2, 1}));
    const auto alt = restrict_to_alternating(full);
    const auto& s = full.generators();
    ASSERT_EQ(alt.generators().size(), s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const Permutation g = s[0].element * s[i].element;
        EXPECT_EQ(alt.generators()[i - 1].element, g);
        EXPECT_EQ(alt.generators()[i - 1].matrix, full.evaluate(g));
        EXPECT_EQ(g.parity(), 0);
    }
}

TEST(Representation, EvaluateFollowsRightAction) {
    const auto rep = specht::rep_d_lambda(P({3, 2, 1}));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        std::vector<int> img(6);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        const Permutation g(img);
        // Multiply out a Coxeter word independently: matrix of a*b is M(b) M(a).
        MatrixF4 expected = MatrixF4::identity(rep.dim());
        for (std::size_t i : g.coxeter_word()) expected = rep.generators()[i - 1].matrix * expected;
        EXPECT_EQ(rep.evaluate(g), expected);
        std::vector<int> img2(6);
        std::iota(img2.begin(), img2.end(), 0);
        std::shuffle(img2.begin(), img2.end(), rng);
        const Permutation h(img2);
        EXPECT_EQ(rep.evaluate(g * h), rep.evaluate(h) * rep.evaluate(g));
    }
    const auto alt = restrict_to_alternating(rep);
    EXPECT_THROW(alt.evaluate(Permutation::coxeter(6, 1)), std::invalid_argument);
}

TEST(Representation, WithMatricesChecksShapes) {
    const auto rep = specht::rep_d_lambda(P({2, 1}));
    EXPECT_THROW(rep.with_matrices({MatrixF4::identity(2)}, FieldKind::F2), std::invalid_argument);
    const auto same = rep.with_matrices(rep.matrices(), FieldKind::F2);
    EXPECT_EQ(same, rep);
    std::vector<MatrixF4> w{MatrixF4::identity(2), GF4::omega() * MatrixF4::identity(2)};
    EXPECT_THROW(rep.with_matrices(w, FieldKind::F2), std::invalid_argument);
    EXPECT_NO_THROW(rep.with_matrices(w, FieldKind::F4));
}

TEST(GeneratingSet, GeneratesTheSameAlgebra) {
    for (const auto& lambda : {P({3, 2}), P({4, 2}), P({4, 3}), P({3, 2, 1})}) {
        const auto alt = restrict_to_alternating(specht::rep_d_lambda(lambda));
        const auto two = generating_set(alt);
        EXPECT_EQ(two.size(), 2u);
        const auto all = alt.matrices();
        EXPECT_EQ(solve_commutant(two).size(), solve_commutant(all).size()) << lambda.to_string();
    }
    EXPECT_EQ(generating_set(restrict_to_alternating(specht::rep_d_lambda(P({2, 1})))).size(), 1u);
}

TEST(EndoDim, Examples) {
    EXPECT_EQ(endo_dim(restrict_to_alternating(specht::rep_d_lambda(P({4, 1})))), 1u);
    EXPECT_EQ(endo_dim(restrict_to_alternating(specht::rep_d_lambda(P({3, 2})))), 2u);
    EXPECT_EQ(endo_dim(restrict_to_alternating(specht::rep_d_lambda(P({2, 1})))), 2u);
}

TEST(Split, TwoOneGivesOmegaCharacters) {
    const auto [a, b] = split(restrict_to_alternating(specht::rep_d_lambda(P({2, 1}))));
    ASSERT_EQ(a.dim(), 1u);
    ASSERT_EQ(b.dim(), 1u);
    const GF4 x = a.generators()[0].matrix.get(0, 0), y = b.generators()[0].matrix.get(0, 0);
    EXPECT_TRUE((x == GF4::omega() && y == GF4::omega2()) || (x == GF4::omega2() && y == GF4::omega()));
    EXPECT_FALSE(isomorphic(a, b));
    EXPECT_TRUE(isomorphic(a, dual(b)));
}

TEST(Split, ThreeTwoGivesTwoNonIsomorphicPlanes) {
    const auto [a, b] = split(restrict_to_alternating(specht::rep_d_lambda(P({3, 2}))));
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(b.dim(), 2u);
    EXPECT_EQ(endo_dim(a), 1u);
    EXPECT_EQ(endo_dim(b), 1u);
    EXPECT_FALSE(isomorphic(a, b));
    EXPECT_TRUE(isomorphic(a, dual(a)));
    EXPECT_TRUE(isomorphic(b, dual(b)));
    // A faithful image of A_5: matrix orders equal permutation orders.
    for (const auto& g : a.generators()) {
        Permutation p = g.element;
        std::size_t k = 1;
        for (; !p.is_identity(); ++k) p = p * g.element;
        EXPECT_EQ(order(g.matrix), k) << g.label;
    }
}

TEST(Split, RejectsIrreducible) {
    EXPECT_THROW(split(restrict_to_alternating(specht::rep_d_lambda(P({4, 1})))), std::invalid_argument);
}

TEST(Dual, Examples) {
    const auto trivial = restrict_to_alternating(specht::rep_d_lambda(P({3})));
    EXPECT_EQ(dual(trivial), trivial);
    const auto w = c3_character(GF4::omega());
    EXPECT_EQ(dual(w).generators()[0].matrix.get(0, 0), GF4::omega2());
    EXPECT_THROW(dual(w.with_matrices({MatrixF4(1, 1)}, FieldKind::F4)), std::domain_error);
}

TEST(Dual, InvolutiveAndDModulesSelfDual) {
    for (int n = 2; n <= 9; ++n)
        for (const auto& lambda : enumerate(n, PartitionFilter::Strict)) {
            const auto rep = specht::rep_d_lambda(lambda);
            EXPECT_EQ(dual(dual(rep)), rep);
            if (rep.dim() <= 48) EXPECT_TRUE(isomorphic(rep, dual(rep))) << lambda.to_string();
        }
}

TEST(Isomorphic, Examples) {
    const auto w = c3_character(GF4::omega());
    const auto w2 = c3_character(GF4::omega2());
    EXPECT_TRUE(isomorphic(w, w));
    EXPECT_FALSE(isomorphic(w, w2));
    const auto [s1, s2] = split(restrict_to_alternating(specht::rep_d_lambda(P({2, 1}))));
    EXPECT_TRUE(isomorphic(s1, dual(s2)));
    EXPECT_FALSE(isomorphic(w, restrict_to_alternating(specht::rep_d_lambda(P({2, 1})))));
    const auto a5 = restrict_to_alternating(specht::rep_d_lambda(P({3, 2})));
    EXPECT_THROW(isomorphic(w, a5.with_matrices(a5.matrices(), FieldKind::F4)), std::invalid_argument);
}

TEST(Isomorphic, InvariantUnderChangeOfBasis) {
    const auto [a, b] = split(restrict_to_alternating(specht::rep_d_lambda(P({4, 3}))));
    std::mt19937_64 rng(5);
    MatrixF4 p;
    do {
        p = MatrixF4(a.dim(), a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) p.set(i, j, GF4(static_cast<std::uint8_t>(rng() & 3u)));
    } while (rank(p) != a.dim());
    const MatrixF4 pi = inverse(p);
    std::vector<MatrixF4> conj;
    for (const auto& m : a.matrices()) conj.push_back(pi * m * p);
    const auto a2 = a.with_matrices(conj, FieldKind::F4);
    EXPECT_TRUE(isomorphic(a, a2));
    EXPECT_EQ(isomorphic(a2, b), isomorphic(a, b));
}

TEST(Profile, Examples) {
    const auto r751 = self_duality_profile(P({4, 1}));
    EXPECT_EQ(r751.endo_dim, 1u);
    EXPECT_FALSE(r751.observed_split);
    EXPECT_EQ(r751.observed_duality, DualityVerdict::NotSplit);
    EXPECT_EQ(r751.status, ReportStatus::Ok);
    EXPECT_TRUE(isomorphic(restricted(P({4, 1})).full, dual(restricted(P({4, 1})).full)));

    const auto r32 = self_duality_profile(P({3, 2}));
    EXPECT_TRUE(r32.observed_split);
    EXPECT_EQ(r32.observed_duality, DualityVerdict::SelfDualPair);
    EXPECT_EQ(r32.summand_dims, (std::vector<std::size_t>{2, 2}));

    const auto r21 = self_duality_profile(P({2, 1}));
    EXPECT_EQ(r21.observed_duality, DualityVerdict::DualPair);
    EXPECT_TRUE(r21.matches());

    EXPECT_THROW(self_duality_profile(P({2, 2})), std::invalid_argument);
    specht::Options tiny;
    tiny.max_tabloids = 5;
    EXPECT_THROW(self_duality_profile(P({3, 2}), {tiny, nullptr}), specht::MemoryGuardError);
}

TEST(VerifyTheorem, Examples) {
    const auto three = verify_theorem(3);
    ASSERT_EQ(three.size(), 2u);
    EXPECT_EQ(three[0].lambda, P({3}));
    EXPECT_EQ(three[0].observed_duality, DualityVerdict::NotSplit);
    EXPECT_EQ(three[1].lambda, P({2, 1}));
    EXPECT_EQ(three[1].observed_duality, DualityVerdict::DualPair);
    const auto five = verify_theorem(5);
    ASSERT_EQ(five.size(), 3u);
    EXPECT_EQ(five[0].observed_duality, DualityVerdict::NotSplit);
    EXPECT_EQ(five[1].observed_duality, DualityVerdict::NotSplit);
    EXPECT_EQ(five[2].observed_duality, DualityVerdict::SelfDualPair);
    for (const auto& r : five) EXPECT_TRUE(r.matches());
}

TEST(VerifyTheorem, ReportInvariantsUpTo8) {
    for (int n = 3; n <= 8; ++n)
        for (const auto& r : verify_theorem(n)) {
            EXPECT_EQ(r.status, ReportStatus::Ok) << r.lambda.to_string() << " " << r.detail;
            EXPECT_TRUE(r.matches()) << r.lambda.to_string();
            EXPECT_EQ(r.predicted_split, benson_reducible(r.lambda));
            EXPECT_EQ(r.observed_split, r.endo_dim == 2);
            EXPECT_EQ(r.dim, specht::dim_d(r.lambda));
            if (r.observed_split) {
                ASSERT_EQ(r.summand_dims.size(), 2u);
                EXPECT_EQ(r.summand_dims[0], r.summand_dims[1]);
                EXPECT_EQ(r.summand_dims[0] + r.summand_dims[1], r.dim);
            }
        }
}

TEST(VerifyTheorem, SkipsShapesOverTheGuard) {
    specht::Options tiny;
    tiny.max_tabloids = 7;
    const auto reports = verify_theorem(5, {tiny, nullptr});
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].status, ReportStatus::Ok);
    EXPECT_EQ(reports[1].status, ReportStatus::Ok);
    EXPECT_EQ(reports[2].status, ReportStatus::Skipped);
}

TEST(Witness, Examples) {
    const auto c3 = restricted(P({2, 1}));
    const auto form3 = MatrixF4::from_f2(*cache::d_module_record(P({2, 1}), {}, nullptr).form);
    EXPECT_EQ(lemma13_witness(c3.full, form3, Permutation::transposition(3, 0, 1)).outcome,
              WitnessOutcome::NoInvolution);

    const auto trivial = restrict_to_alternating(specht::rep_d_lambda(P({4})));
    const Permutation t({1, 0, 3, 2});
    const auto w = lemma13_witness(trivial, MatrixF4::identity(1), t);
    EXPECT_EQ(w.outcome, WitnessOutcome::WitnessFound);
    EXPECT_EQ(w.tried, 1u);
    EXPECT_EQ(lemma13_witness(trivial, MatrixF4::identity(1), Permutation(4)).outcome, WitnessOutcome::NoInvolution);
}

TEST(Witness, RejectsBadForms) {
    const auto r = restricted(P({3, 2}));
    const Permutation t({1, 0, 3, 2, 4});
    EXPECT_THROW(lemma13_witness(r.full, MatrixF4::identity(3), t), std::invalid_argument);
    MatrixF4 skew(4, 4);
    skew.set(0, 1, GF4::one());
    EXPECT_THROW(lemma13_witness(r.full, skew, t), std::invalid_argument);
}

TEST(Witness, TauWitnessOnBensonPlusUpTo8) {
    std::size_t checked = 0;
    for (int n = 3; n <= 8; ++n)
        for (const auto& lambda : enumerate(n, PartitionFilter::BensonPlus)) {
            const auto c = tau_witness_check(lambda);
            ASSERT_EQ(c.witness.outcome, WitnessOutcome::WitnessFound) << lambda.to_string();
            EXPECT_TRUE(c.consistent) << lambda.to_string();
            EXPECT_EQ(c.report.observed_duality, DualityVerdict::SelfDualPair);
            // Recompute B(tau m, m) by hand.
            const auto record = cache::d_module_record(lambda, {}, nullptr);
            const auto full = restrict_d_module(record).full;
            const Permutation tau = row_reading_tableau(lambda).row_reversal();
            EXPECT_EQ(tau.parity(), 0);
            const VectorF4& m = *c.witness.witness;
            EXPECT_FALSE(form_value(m * full.evaluate(tau), MatrixF4::from_f2(*record.form), m).is_zero());
            ++checked;
        }
    EXPECT_GT(checked, 0u);
}

TEST(Closure, DistinctIrreduciblesMatchCensusUpTo8) {
    for (int n = 3; n <= 8; ++n) {
        std::vector<Representation> irr;
        for (const auto& lambda : enumerate(n, PartitionFilter::Strict)) {
            const auto r = restricted(lambda);
            if (r.summands) {
                irr.push_back(r.summands->first);
                irr.push_back(r.summands->second);
            } else {
                irr.push_back(r.full);
            }
        }
        std::vector<Representation> distinct;
        for (const auto& s : irr) {
            bool seen = false;
            for (const auto& t : distinct)
                if (t.dim() == s.dim() && isomorphic(s, t)) seen = true;
            if (!seen) distinct.push_back(s);
        }
        std::size_t self_dual = 0;
        for (const auto& s : distinct) self_dual += isomorphic(s, dual(s)) ? 1 : 0;
        EXPECT_EQ(distinct.size(), irr.size()) << n;
        EXPECT_EQ(distinct.size(), census::irreducible_count(n)) << n;
        EXPECT_EQ(self_dual, census::self_dual_count(n)) << n;
    }
}

TEST(Names, RoundTrip) {
    for (auto s : {ReportStatus::Ok, ReportStatus::Mismatch, ReportStatus::Skipped, ReportStatus::Error})
        EXPECT_EQ(parse_status(status_name(s)), s);
    EXPECT_THROW(parse_status("fine"), std::invalid_argument);
    EXPECT_EQ(witness_name(WitnessOutcome::NoInvolution), "no-involution");
}
