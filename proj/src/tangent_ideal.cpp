#include "starcfg/tangent_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcfg/errors.hpp"
#include "starcfg/matrix.hpp"
#include "starcfg/rng.hpp"

namespace starcfg {

const Form& TangentSystem::lhat2(int i, int j) const {
    if (i == j) throw std::invalid_argument("need two distinct indices");
    return lhat_pair.at(std::minmax(i, j));
}

Form TangentSystem::combined_curve() const {
    Form total(d);
    for (std::size_t j = 0; j < mults.size(); ++j) total += mults[j] * lhat[j];
    return total;
}

TangentSystem build_system(const std::vector<Form>& lines, const std::vector<Form>& mults,
                           int d) {
    const int l = static_cast<int>(lines.size());
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
    if (static_cast<int>(mults.size()) != l)
        throw std::invalid_argument("need one multiplier per line");
    if (d < l - 1)
        throw DegreeError("degree " + std::to_string(d) + " is below the minimum " +
                          std::to_string(l - 1) + " for " + std::to_string(l) + " lines");
    const int mult_degree = d - l + 1;
    for (int i = 0; i < l; ++i) {
        if (lines[i].degree() != 1)
            throw DegreeError("line " + std::to_string(i + 1) + " has degree " +
                              std::to_string(lines[i].degree()));
        if (mults[i].degree() != mult_degree)
            throw DegreeError("multiplier " + std::to_string(i + 1) + " has degree " +
                              std::to_string(mults[i].degree()) + ", expected " +
                              std::to_string(mult_degree));
    }

    TangentSystem sys;
    sys.d = d;
    sys.lines = lines;
    sys.mults = mults;
    std::vector<Line> validated;
    validated.reserve(lines.size());
    for (const Form& f : lines) validated.emplace_back(f);
    sys.star = StarConfig::build(std::move(validated));

    for (int i = 0; i < l; ++i) sys.lhat.push_back(product_excluding(lines, {i}));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            sys.lhat_pair.emplace(std::make_pair(i, j), product_excluding(lines, {i, j}));

    for (int i = 0; i < l; ++i) {
        Form qi(d - 1);
        for (int j = 0; j < l; ++j)
            if (j != i) qi += mults[j] * sys.lhat2(i, j);
        sys.q.push_back(std::move(qi));
    }

    // L_i divides every term of sum_j M_j*Lhat_j except M_i*Lhat_i, and
    // factoring it out leaves Q_i. Verify that exactly.
    const Form combined = sys.combined_curve();
    for (int i = 0; i < l; ++i)
        if (lines[i] * sys.q[i] + mults[i] * sys.lhat[i] != combined)
            throw CheckFailure("tangent system identity failed at line " + std::to_string(i + 1));
    return sys;
}

int tangent_dimension(const TangentSystem& sys) {
    const int l = sys.line_count();
    std::vector<Form> spanning;
    for (const Form& gen : sys.lhat)
        for (const Monomial& m : monomial_basis(sys.d - l + 1))
            spanning.push_back(gen.times_monomial(m));
    for (const Form& qi : sys.q)
        for (const Monomial& m : monomial_basis(1)) spanning.push_back(qi.times_monomial(m));
    return span_dimension(spanning, sys.d);
}

int deficiency(const TangentSystem& sys) {
    return monomial_count(sys.d) - tangent_dimension(sys);
}

DominanceVerdict dominance_check(int d, int l, int trials, std::uint64_t seed, long bound,
                                 const std::vector<Witness>& explicit_trials) {
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
    if (d < l - 1)
        throw DegreeError("degree " + std::to_string(d) + " is below the minimum " +
                          std::to_string(l - 1) + " for " + std::to_string(l) + " lines");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    DominanceVerdict verdict;
    verdict.d = d;
    verdict.l = l;
    verdict.dim_sd = monomial_count(d);

    const auto run = [&](const std::vector<Form>& lines, const std::vector<Form>& mults) {
        const TangentSystem sys = build_system(lines, mults, d);
        const int dim = tangent_dimension(sys);
        ++verdict.trials_run;
        verdict.dim = std::max(verdict.dim, dim);
        if (dim == verdict.dim_sd) {
            verdict.certified = true;
            verdict.witness = Witness{lines, mults};
        }
        return verdict.certified;
    };

    for (const Witness& w : explicit_trials) {
        if (verdict.trials_run == trials) return verdict;
        if (run(w.lines, w.mults)) return verdict;
    }
    for (std::uint64_t t = 0; verdict.trials_run < trials; ++t) {
        const StarConfig star = random_star(l, derive_seed(seed, 2 * t), bound);
        std::vector<Form> mults;
        const std::uint64_t mult_seed = derive_seed(seed, 2 * t + 1);
        for (int i = 0; i < l; ++i)
            mults.push_back(random_nonzero_form(d - l + 1, derive_seed(mult_seed, i), bound));
        if (run(star.line_forms(), mults)) return verdict;
    }
    return verdict;
}

}  // namespace starcfg
