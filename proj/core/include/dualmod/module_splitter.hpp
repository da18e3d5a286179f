#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/partition.hpp"
#include "dualmod/rep_cache.hpp"
#include "dualmod/representation.hpp"
#include "dualmod/specht.hpp"

namespace dualmod::splitter {

/// Restriction to A_n over F4 with generators s_1 s_i, i = 2..n-1.
/// Throws std::invalid_argument unless rep is a symmetric group
/// representation with n >= 3.
Representation restrict_to_alternating(const Representation& rep);

/// Matrices of a two-element generating set of the acting group:
/// S_n = <(1 2), (1 2 ... n)>; A_n = <(1 2 3), c> with c = (1 2 ... n) for odd
/// n and (2 3 ... n) for even n. A_3 and S_2 need one generator.
std::vector<MatrixF4> generating_set(const Representation& rep);

/// Dimension of the commutant.
std::size_t endo_dim(const Representation& rep);

/// Summands on image(E) and image(1 - E) for a nontrivial idempotent E of
/// the commutant. Throws std::invalid_argument unless endo_dim(rep) == 2.
std::pair<Representation, Representation> split(const Representation& rep);

/// Generators g -> (g^{-1})^T. Throws std::domain_error if a generator is
/// singular.
Representation dual(const Representation& rep);

/// True iff some intertwiner, solved on generating_set(), is invertible. A
/// dimension mismatch gives false; a label mismatch throws
/// std::invalid_argument. Intertwiner spaces of dimension above 6 are not
/// searched exhaustively and throw std::domain_error.
bool isomorphic(const Representation& a, const Representation& b);

enum class ReportStatus { Ok, Mismatch, Skipped, Error };
std::string_view status_name(ReportStatus s);
ReportStatus parse_status(std::string_view name);

struct SplitReport {
    Partition lambda;
    std::size_t dim = 0;
    std::size_t endo_dim = 0;
    bool predicted_split = false;
    bool observed_split = false;
    DualityVerdict predicted_duality = DualityVerdict::NotSplit;
    DualityVerdict observed_duality = DualityVerdict::NotSplit;
    std::vector<std::size_t> summand_dims;
    ReportStatus status = ReportStatus::Ok;
    std::string detail;

    bool matches() const {
        return predicted_split == observed_split && predicted_duality == observed_duality;
    }
    friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

struct ProfileOptions {
    specht::Options specht;
    const cache::RepresentationCache* cache = nullptr;
};

/// Full pipeline for one strict lambda with n >= 3. Memory-guard refusals
/// propagate as specht::MemoryGuardError.
SplitReport self_duality_profile(const Partition& lambda, const ProfileOptions& options = {});

/// The summands of D^lambda restricted to A_n, with the F4 restriction.
struct Restriction {
    Representation full;
    std::optional<std::pair<Representation, Representation>> summands;
};
Restriction restrict_d_module(const cache::CacheRecord& record);

enum class WitnessOutcome { WitnessFound, NoWitness, NoInvolution };
std::string_view witness_name(WitnessOutcome w);

struct WitnessResult {
    WitnessOutcome outcome = WitnessOutcome::NoWitness;
    /// The vector m with B(t m, m) != 0, when found.
    std::optional<VectorF4> witness;
    /// Vectors tried before success or giving up.
    std::size_t tried = 0;
};

inline constexpr std::size_t kWitnessRandomTrials = 256;
inline constexpr std::uint64_t kWitnessSeed = 0x5eed'1e33'a13c'0001ull;

/// Searches m for B(t m, m) != 0: standard basis vectors, then
/// kWitnessRandomTrials pseudorandom vectors. Returns NoInvolution when t is
/// not an involution of the acting group. Throws std::invalid_argument if B
/// is not invariant (g B g^T = B for every generator) or has the wrong shape.
WitnessResult lemma13_witness(const Representation& rep, const MatrixF4& form, const Permutation& t);

/// The tableau filled row by row with 1..n.
Tableau row_reading_tableau(const Partition& lambda);

struct TauWitnessCheck {
    WitnessResult witness;
    SplitReport report;
    /// A witness was found and some summand is self-dual.
    bool consistent = false;
};

/// lemma13_witness for D^lambda restricted to A_n with t = row reversal of
/// the row reading tableau, cross-checked against self_duality_profile.
TauWitnessCheck tau_witness_check(const Partition& lambda, const ProfileOptions& options = {});

/// One report per strict partition of n, in enumeration order. Shapes over
/// the memory guard are marked Skipped. Per-shape work runs on up to
/// `threads` workers (0 = hardware concurrency).
std::vector<SplitReport> verify_theorem(int n, const ProfileOptions& options = {}, unsigned threads = 0);

}  // namespace dualmod::splitter
