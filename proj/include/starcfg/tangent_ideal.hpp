#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "starcfg/form.hpp"
#include "starcfg/star_config.hpp"

namespace starcfg {

/// The data behind the tangent-space criterion for a pair (d, l): linear
/// forms L_i, multipliers M_i of degree d-l+1, the products Lhat_i (omit i)
/// and Lhat_{i,j} (omit both), and the derived forms
///
///   Q_i = sum_{j != i} M_j * Lhat_{i,j},   deg Q_i = d-1.
///
/// Construction asserts the exact identity L_i*Q_i + M_i*Lhat_i = sum_j M_j*Lhat_j
/// for every i.
struct TangentSystem {
    int d = 0;
    std::vector<Form> lines;        ///< L_i as given (not rescaled)
    std::vector<Form> mults;        ///< M_i
    std::vector<Form> lhat;         ///< products omitting one index
    std::map<std::pair<int, int>, Form> lhat_pair;  ///< key (i,j), i<j
    std::vector<Form> q;
    StarConfig star;                ///< validated arrangement of the L_i

    int line_count() const { return static_cast<int>(lines.size()); }
    const Form& lhat2(int i, int j) const;

    /// sum_j M_j * Lhat_j, the curve the system was linearized at.
    Form combined_curve() const;
};

/// Builds and validates a TangentSystem. Throws DegreeError on degree
/// mismatches and the arrangement errors of StarConfig::build.
TangentSystem build_system(const std::vector<Form>& lines, const std::vector<Form>& mults, int d);

/// dim I_d for I = (Lhat_1..Lhat_l, Q_1..Q_l): the span of all degree-(d-l+1)
/// monomial multiples of the Lhat_i together with x,y,z times each Q_i.
int tangent_dimension(const TangentSystem& sys);

/// dim S_d - tangent_dimension(sys), always >= 0.
int deficiency(const TangentSystem& sys);

struct Witness {
    std::vector<Form> lines;
    std::vector<Form> mults;
};

/// Outcome of the semicontinuity protocol. A single trial reaching
/// dim I_d = dim S_d certifies the generic answer; anything less is evidence
/// only, never a proof of impossibility.
struct DominanceVerdict {
    int d = 0;
    int l = 0;
    bool certified = false;  ///< true: some trial reached full dimension
    int dim = 0;             ///< best dim I_d observed
    int dim_sd = 0;          ///< dim S_d = C(d+2,2)
    int trials_run = 0;
    std::optional<Witness> witness;  ///< the certifying forms, when certified
};

/// Runs `trials` independent trials (any `explicit_trials` first, then random
/// systems derived from `seed`), stopping at the first certificate.
/// Requires d >= l-1, l >= 2, trials >= 1.
DominanceVerdict dominance_check(int d, int l, int trials, std::uint64_t seed, long bound = 100,
                                 const std::vector<Witness>& explicit_trials = {});

}  // namespace starcfg
