#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "starcfg/tangent_ideal.hpp"

namespace starcfg {

/// The argument governing a classification cell. The strings are stable
/// public output: degree-bound, dimension-count, luroth, trivial-small-l,
/// certified-rank, group-law.
enum class Reason {
    DegreeBound,
    DimensionCount,
    Luroth,
    TrivialSmallL,
    CertifiedRank,
    GroupLaw,
};

std::string reason_string(Reason r);

struct Verdict {
    int d = 0;
    int l = 0;
    bool contains = false;  ///< does the generic degree-d curve contain an X(l)?
    Reason reason = Reason::DegreeBound;
};

/// True iff the pair is ruled out purely by degree: d < l-1, where the ideal
/// of the points has no forms at all.
bool degree_bound(int d, int l);

/// The fiber-dimension count. The incidence of (curve, configuration) pairs
/// has dimension at most 2l + C(d+2,2) - C(l,2) - 1, while the curves form a
/// space of dimension C(d+2,2) - 1; the projection can dominate only when
/// the margin 2l - C(l,2) = l(5-l)/2 is nonnegative. Requires d >= l-1.
struct DimensionCount {
    long sigma_bound = 0;         ///< upper bound for the incidence dimension
    long target = 0;              ///< dimension of the space of curves
    bool dominant_possible = false;

    long margin() const { return sigma_bound - target; }
};

DimensionCount dimension_count(int d, int l);

/// The full classification: contains iff (l=2, d>=1), (l=3, d>=2),
/// (l=4, d>=3) or (l=5, d>=5), with the governing reason per cell.
Verdict answer(int d, int l);

/// Self-contained small-coefficient systems known to certify (4,4) and
/// (5,5); empty for every other pair.
std::optional<Witness> known_witness(int d, int l);

struct CrossValidation {
    Verdict verdict;
    std::optional<DominanceVerdict> dominance;  ///< present when d >= l-1
    bool group_law_checked = false;             ///< (3,4) construction ran
};

/// Ties the table to the computational machinery: YES cells must certify via
/// dominance_check (known witnesses are tried first), (3,4) additionally
/// validates the group-law construction, and NO cells with d >= l-1 record
/// the best observed dimension as corroboration. Throws CheckFailure if a
/// YES cell fails to certify within `trials` or a NO cell certifies.
CrossValidation cross_validate(int d, int l, int trials, std::uint64_t seed, long bound = 100);

}  // namespace starcfg
