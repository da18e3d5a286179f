#include "dualmod/module_splitter.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "dualmod/linalg.hpp"

namespace dualmod::splitter {

namespace {

const MatrixF4& coxeter_matrix(const Representation& rep, std::size_t i) {
    const Permutation s = Permutation::coxeter(static_cast<std::size_t>(rep.degree()), i);
    for (const auto& g : rep.generators())
        if (g.element == s) return g.matrix;
    throw std::invalid_argument("restrict_to_alternating: missing generator s" + std::to_string(i));
}

Representation summand_on(const Representation& rep, const MatrixF4& basis) {
    std::vector<MatrixF4> mats;
    mats.reserve(rep.generators().size());
    for (const auto& g : rep.generators()) mats.push_back(action_on_subspace(basis, g.matrix));
    return rep.with_matrices(std::move(mats), rep.field());
}

GF4 bilinear(const VectorF4& x, const MatrixF4& form, const VectorF4& y) {
    const VectorF4 xb = x * form;
    GF4 acc = GF4::zero();
    for (std::size_t i = 0; i < y.dim(); ++i) acc += xb.get(i) * y.get(i);
    return acc;
}

bool any_invertible_combination(const std::vector<MatrixF4>& basis) {
    for (const auto& x : basis)
        if (is_invertible(x)) return true;
    const std::size_t k = basis.size();
    if (k <= 1) return false;
    if (k > 6) throw std::domain_error("isomorphic: intertwiner space too large for exhaustive search");
    // Combinations up to scaling: the first nonzero coefficient is 1.
    std::vector<std::uint8_t> coeff(k, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 4;
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= 4) coeff[i] = static_cast<std::uint8_t>(c % 4);
        const auto first = std::find_if(coeff.begin(), coeff.end(), [](std::uint8_t v) { return v != 0; });
        if (*first != 1) continue;
        if (std::count_if(coeff.begin(), coeff.end(), [](std::uint8_t v) { return v != 0; }) < 2) continue;
        MatrixF4 x(basis[0].rows(), basis[0].cols());
        for (std::size_t i = 0; i < k; ++i)
            if (coeff[i]) x += GF4(coeff[i]) * basis[i];
        if (is_invertible(x)) return true;
    }
    return false;
}

bool self_dual(const Representation& rep) { return isomorphic(rep, dual(rep)); }

SplitReport profile_from_record(const Partition& lambda, const cache::CacheRecord& record,
                                Restriction* keep = nullptr) {
    SplitReport report;
    report.lambda = lambda;
    report.predicted_split = benson_reducible(lambda);
    report.predicted_duality = summand_duality(lambda);
    report.dim = record.rep.dim();

    Restriction r = restrict_d_module(record);
    report.endo_dim = r.summands ? 2 : 1;
    report.observed_split = r.summands.has_value();
    if (r.summands) {
        const auto& [s1, s2] = *r.summands;
        report.summand_dims = {s1.dim(), s2.dim()};
        const Representation d2 = dual(s2);
        const bool sd1 = self_dual(s1);
        const bool sd2 = isomorphic(s2, d2);
        const bool mutual = isomorphic(s1, d2);
        if (isomorphic(s1, s2)) {
            report.status = ReportStatus::Error;
            report.detail = "summands are isomorphic";
        } else if (sd1 && sd2 && !mutual) {
            report.observed_duality = DualityVerdict::SelfDualPair;
        } else if (!sd1 && !sd2 && mutual) {
            report.observed_duality = DualityVerdict::DualPair;
        } else {
            report.status = ReportStatus::Error;
            report.detail = "summands are neither both self-dual nor mutually dual";
        }
    } else {
        report.summand_dims = {report.dim};
        report.observed_duality = DualityVerdict::NotSplit;
    }
    if (report.status == ReportStatus::Ok && !report.matches()) report.status = ReportStatus::Mismatch;
    if (keep) *keep = std::move(r);
    return report;
}

}  // namespace

Representation restrict_to_alternating(const Representation& rep) {
    if (rep.group() != GroupKind::Symmetric)
        throw std::invalid_argument("restrict_to_alternating: expected a symmetric group representation");
    const int n = rep.degree();
    if (n < 3) throw std::invalid_argument("restrict_to_alternating: need n >= 3");
    const MatrixF4& s1 = coxeter_matrix(rep, 1);
    std::vector<Generator> gens;
    for (std::size_t i = 2; i < static_cast<std::size_t>(n); ++i) {
        const Permutation element =
            Permutation::coxeter(static_cast<std::size_t>(n), 1) * Permutation::coxeter(static_cast<std::size_t>(n), i);
        gens.push_back({"s1s" + std::to_string(i), element, coxeter_matrix(rep, i) * s1});
    }
    return Representation(GroupKind::Alternating, FieldKind::F4, n, rep.dim(), std::move(gens), rep.lambda());
}

std::vector<MatrixF4> generating_set(const Representation& rep) {
    const std::size_t n = static_cast<std::size_t>(rep.degree());
    if (n < 2) throw std::invalid_argument("generating_set: need n >= 2");
    std::vector<int> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>(i);
    if (rep.group() == GroupKind::Symmetric) {
        std::vector<MatrixF4> out{rep.evaluate(Permutation::coxeter(n, 1))};
        if (n == 2) return out;
        for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>((i + 1) % n);
        out.push_back(rep.evaluate(Permutation(cycle)));
        return out;
    }
    if (n < 3) throw std::invalid_argument("generating_set: alternating group needs n >= 3");
    std::vector<MatrixF4> out{rep.evaluate(Permutation::coxeter(n, 1) * Permutation::coxeter(n, 2))};
    if (n == 3) return out;
    const std::size_t start = n % 2 == 1 ? 0 : 1;
    for (std::size_t i = start; i < n; ++i) cycle[i] = static_cast<int>(i + 1 < n ? i + 1 : start);
    out.push_back(rep.evaluate(Permutation(cycle)));
    return out;
}

std::size_t endo_dim(const Representation& rep) { return solve_commutant(generating_set(rep)).size(); }

namespace {

std::pair<Representation, Representation> split_with(const Representation& rep,
                                                     const std::vector<MatrixF4>& commutant) {
    if (commutant.size() != 2)
        throw std::invalid_argument("split: commutant has dimension " + std::to_string(commutant.size()) + ", not 2");
    const MatrixF4& x = commutant[0].is_scalar() ? commutant[1] : commutant[0];
    const std::size_t d = rep.dim();
    const MatrixF4 id = MatrixF4::identity(d);
    for (std::uint8_t a = 0; a < 4; ++a)
        for (std::uint8_t b = 1; b < 4; ++b) {
            const MatrixF4 e = GF4(a) * id + GF4(b) * x;
            if (e.is_zero() || e == id || !(e * e == e)) continue;
            const MatrixF4 complement = id + e;
            return {summand_on(rep, row_space(e)), summand_on(rep, row_space(complement))};
        }
    throw std::logic_error("split: no nontrivial idempotent in a 2-dimensional commutant");
}

}  // namespace

std::pair<Representation, Representation> split(const Representation& rep) {
    return split_with(rep, solve_commutant(generating_set(rep)));
}

Representation dual(const Representation& rep) {
    std::vector<MatrixF4> mats;
    mats.reserve(rep.generators().size());
    for (const auto& g : rep.generators()) mats.push_back(inverse(g.matrix).transpose());
    return rep.with_matrices(std::move(mats), rep.field());
}

bool isomorphic(const Representation& a, const Representation& b) {
    if (a.labels() != b.labels()) throw std::invalid_argument("isomorphic: generator labels differ");
    if (a.dim() != b.dim()) return false;
    if (a.dim() == 0) return true;
    if (a.group() != b.group() || a.degree() != b.degree())
        throw std::invalid_argument("isomorphic: representations of different groups");
    return any_invertible_combination(hom_basis(generating_set(a), generating_set(b)));
}

std::string_view status_name(ReportStatus s) {
    switch (s) {
        case ReportStatus::Ok: return "OK";
        case ReportStatus::Mismatch: return "MISMATCH";
        case ReportStatus::Skipped: return "SKIPPED";
        case ReportStatus::Error: return "ERROR";
    }
    return "ERROR";
}

ReportStatus parse_status(std::string_view name) {
    for (auto s : {ReportStatus::Ok, ReportStatus::Mismatch, ReportStatus::Skipped, ReportStatus::Error})
        if (status_name(s) == name) return s;
    throw std::invalid_argument("unknown status: " + std::string(name));
}

Restriction restrict_d_module(const cache::CacheRecord& record) {
    Restriction out;
    out.full = restrict_to_alternating(record.rep);
    const auto commutant = solve_commutant(generating_set(out.full));
    const std::size_t e = commutant.size();
    if (e == 0 || e > 2)
        throw std::logic_error("endo_dim of a restricted D^lambda is " + std::to_string(e) + ", outside {1, 2}");
    if (e == 2) out.summands = split_with(out.full, commutant);
    return out;
}

SplitReport self_duality_profile(const Partition& lambda, const ProfileOptions& options) {
    if (!lambda.is_strict()) throw std::invalid_argument("self_duality_profile: partition must be strict");
    if (lambda.weight() < 3) throw std::invalid_argument("self_duality_profile: need n >= 3");
    const auto record = cache::d_module_record(lambda, options.specht, options.cache);
    return profile_from_record(lambda, record);
}

std::string_view witness_name(WitnessOutcome w) {
    switch (w) {
        case WitnessOutcome::WitnessFound: return "witness-found";
        case WitnessOutcome::NoWitness: return "no-witness";
        case WitnessOutcome::NoInvolution: return "no-involution";
    }
    return "no-witness";
}

WitnessResult lemma13_witness(const Representation& rep, const MatrixF4& form, const Permutation& t) {
    const std::size_t d = rep.dim();
    if (form.rows() != d || form.cols() != d) throw std::invalid_argument("lemma13_witness: form has wrong shape");
    for (const auto& g : rep.generators())
        if (!(g.matrix * form * g.matrix.transpose() == form))
            throw std::invalid_argument("lemma13_witness: form is not invariant under " + g.label);
    WitnessResult result;
    if (static_cast<int>(t.degree()) != rep.degree() || !t.is_involution() ||
        (rep.group() == GroupKind::Alternating && t.parity() != 0)) {
        result.outcome = WitnessOutcome::NoInvolution;
        return result;
    }
    const MatrixF4 tm = rep.evaluate(t);
    auto test = [&](const VectorF4& m) {
        ++result.tried;
        if (bilinear(m * tm, form, m).is_zero()) return false;
        result.outcome = WitnessOutcome::WitnessFound;
        result.witness = m;
        return true;
    };
    for (std::size_t i = 0; i < d; ++i)
        if (test(VectorF4::unit(d, i))) return result;
    std::mt19937_64 rng(kWitnessSeed);
    for (std::size_t k = 0; k < kWitnessRandomTrials; ++k) {
        VectorF4 m(d);
        for (std::size_t i = 0; i < d; ++i) m.set(i, GF4(static_cast<std::uint8_t>(rng() & 3u)));
        if (test(m)) return result;
    }
    result.outcome = WitnessOutcome::NoWitness;
    return result;
}

Tableau row_reading_tableau(const Partition& lambda) {
    std::vector<std::vector<int>> rows(lambda.length());
    int next = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) rows[r].push_back(next++);
    return Tableau(lambda, std::move(rows));
}

TauWitnessCheck tau_witness_check(const Partition& lambda, const ProfileOptions& options) {
    if (!lambda.is_strict()) throw std::invalid_argument("tau_witness_check: partition must be strict");
    if (lambda.weight() < 3) throw std::invalid_argument("tau_witness_check: need n >= 3");
    const auto record = cache::d_module_record(lambda, options.specht, options.cache);
    if (!record.form) throw std::logic_error("tau_witness_check: record carries no invariant form");
    TauWitnessCheck out;
    Restriction r;
    out.report = profile_from_record(lambda, record, &r);
    const Permutation tau = row_reading_tableau(lambda).row_reversal();
    out.witness = lemma13_witness(r.full, MatrixF4::from_f2(*record.form), tau);
    bool some_self_dual = false;
    if (r.summands)
        some_self_dual = self_dual(r.summands->first) || self_dual(r.summands->second);
    else
        some_self_dual = self_dual(r.full);
    out.consistent = out.witness.outcome == WitnessOutcome::WitnessFound && some_self_dual;
    return out;
}

std::vector<SplitReport> verify_theorem(int n, const ProfileOptions& options, unsigned threads) {
    if (n < 3) throw std::invalid_argument("verify_theorem: need n >= 3");
    const auto shapes = enumerate(n, PartitionFilter::Strict);
    std::vector<SplitReport> reports(shapes.size());
    auto run = [&](std::size_t i) {
        const Partition& lambda = shapes[i];
        try {
            reports[i] = self_duality_profile(lambda, options);
        } catch (const std::exception& e) {
            SplitReport r;
            r.lambda = lambda;
            r.predicted_split = benson_reducible(lambda);
            r.predicted_duality = summand_duality(lambda);
            r.status = dynamic_cast<const specht::MemoryGuardError*>(&e) ? ReportStatus::Skipped : ReportStatus::Error;
            r.detail = e.what();
            reports[i] = std::move(r);
        }
    };
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, shapes.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < shapes.size(); ++i) run(i);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < shapes.size(); i = next++) run(i);
        });
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace dualmod::splitter
