#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starcfg/matrix.hpp"
#include "starcfg/star_config.hpp"
#include "starcfg/tangent_ideal.hpp"

namespace starcfg {

/// Values of a list of forms at the points of a configuration: row per point
/// pair, column per form. Linear independence of residues in the coordinate
/// ring of the points is exactly linear independence of these columns.
struct EvalMatrix {
    std::vector<std::pair<int, int>> row_labels;  ///< 0-based point pairs
    std::vector<std::string> col_labels;
    Matrix entries;

    EvalMatrix() : entries(0, 0) {}

    /// Star-pattern table with rows p_{i,j} (printed 1-based), '*' nonzero.
    std::string pattern_table() const;
};

/// Entry (r, c) = forms[c] evaluated at point r. Forms may have any degrees.
EvalMatrix evaluation_matrix(const StarConfig& x, const std::vector<Form>& forms,
                             std::vector<std::string> col_labels = {});

/// A random degree-d form vanishing at every point of `zeros` and at no point
/// of `nonzeros`. Throws InfeasibleError when only the zero form satisfies
/// the vanishing conditions, RetryCapError when `cap` samples from the
/// solution space all hit a forbidden zero.
Form interpolate(int d, const std::vector<ProjPoint>& zeros,
                 const std::vector<ProjPoint>& nonzeros, std::uint64_t seed, long bound = 100,
                 int cap = 100);

struct PatternCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Everything one replication run establishes. Returned only when every
/// check passed; a failed check throws CheckFailure instead.
struct ReplicationReport {
    int d = 0;
    int l = 0;
    std::uint64_t seed = 0;
    TangentSystem system;
    EvalMatrix q_matrix;      ///< the Q_i at the configuration points
    EvalMatrix final_matrix;  ///< the full independent family
    int q_rank = 0;
    int final_rank = 0;
    std::vector<PatternCheck> checks;
    std::string note;
};

/// l = 4, d >= 5: multipliers vanish at p_{2,3}, p_{3,4}, p_{2,4} (one each
/// for M_2, M_3, M_4) and nowhere else on the configuration; checks the
/// resulting star pattern of the Q_i, extends by N_i*Q_i, L_1*Q_3, L_1*Q_2
/// with the N_i nonvanishing on the points, and requires evaluation rank 6.
ReplicationReport replicate_l4(int d, std::uint64_t seed, long bound = 100);

/// l = 5, d >= 6: prescribed vanishing M_1(p_{1,5}) = M_4(p_{3,4}) =
/// M_5(p_{4,5}) = M_2(p_{1,2}) = M_2(p_{2,5}) = M_3(p_{1,3}) = M_3(p_{2,3}) = 0,
/// with the evaluations the final pattern relies on forced nonzero; checks
/// the ten products L_j*Q_i and requires evaluation rank 10.
ReplicationReport replicate_l5(int d, std::uint64_t seed, long bound = 100);

}  // namespace starcfg
