#include "starcfg/classifier.hpp"

#include <stdexcept>

#include "starcfg/cubic_group.hpp"
#include "starcfg/errors.hpp"
#include "starcfg/rng.hpp"

namespace starcfg {

std::string reason_string(Reason r) {
    switch (r) {
        case Reason::DegreeBound: return "degree-bound";
        case Reason::DimensionCount: return "dimension-count";
        case Reason::Luroth: return "luroth";
        case Reason::TrivialSmallL: return "trivial-small-l";
        case Reason::CertifiedRank: return "certified-rank";
        case Reason::GroupLaw: return "group-law";
    }
    throw std::invalid_argument("unknown reason");
}

namespace {

void validate_cell(int d, int l) {
    if (d < 1) throw std::invalid_argument("need degree >= 1");
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
}

}  // namespace

bool degree_bound(int d, int l) {
    validate_cell(d, l);
    return d < l - 1;
}

DimensionCount dimension_count(int d, int l) {
    validate_cell(d, l);
    if (d < l - 1)
        throw DegreeError("the count needs d >= l-1; below that no curve works at all");
    DimensionCount out;
    out.sigma_bound = 2L * l + monomial_count(d) - choose2(l) - 1;
    out.target = monomial_count(d) - 1;
    out.dominant_possible = out.margin() >= 0;
    return out;
}

Verdict answer(int d, int l) {
    validate_cell(d, l);
    if (d < l - 1) return {d, l, false, Reason::DegreeBound};
    if (l <= 3) return {d, l, true, Reason::TrivialSmallL};
    if (l > 5) return {d, l, false, Reason::DimensionCount};
    if (l == 4) {
        if (d == 3) return {d, l, true, Reason::GroupLaw};
        return {d, l, true, Reason::CertifiedRank};
    }
    if (d == 4) return {d, l, false, Reason::Luroth};
    return {d, l, true, Reason::CertifiedRank};
}

std::optional<Witness> known_witness(int d, int l) {
    const auto forms = [](const std::vector<std::string>& texts) {
        std::vector<Form> out;
        for (const auto& text : texts) out.push_back(parse_form(text));
        return out;
    };
    if (d == 4 && l == 4)
        return Witness{forms({"x", "y", "z", "x+y+z"}),
                       forms({"x+y-z", "-x+2y+2z", "2x-y-z", "x+y+2z"})};
    if (d == 5 && l == 5)
        return Witness{forms({"x", "y", "z", "x+y+z", "2x-3y+5z"}),
                       forms({"x+y-z", "-x+2y+2z", "2x-y-z", "3x+y-z", "4x-4y+3z"})};
    return std::nullopt;
}

namespace {

/// y^2 z - x^3 - a x z^2 - b z^3 as a ternary cubic.
Form weierstrass_form(const WeierstrassCurve& c) {
    Form f(3);
    f.set_coeff({0, 2, 1}, 1);
    f.set_coeff({3, 0, 0}, -1);
    f.set_coeff({1, 0, 2}, -c.a);
    f.set_coeff({0, 0, 3}, -c.b);
    return f;
}

}  // namespace

CrossValidation cross_validate(int d, int l, int trials, std::uint64_t seed, long bound) {
    CrossValidation cv;
    cv.verdict = answer(d, l);
    if (d >= l - 1) {
        std::vector<Witness> explicit_trials;
        if (auto w = known_witness(d, l)) explicit_trials.push_back(std::move(*w));
        cv.dominance = dominance_check(d, l, trials, seed, bound, explicit_trials);
        const std::string cell = "(d=" + std::to_string(d) + ", l=" + std::to_string(l) + ")";
        if (cv.verdict.contains && !cv.dominance->certified)
            throw CheckFailure(cell + " should certify, but " + std::to_string(trials) +
                               " trials peaked at dimension " + std::to_string(cv.dominance->dim) +
                               " of " + std::to_string(cv.dominance->dim_sd));
        if (!cv.verdict.contains && cv.dominance->certified)
            throw CheckFailure(cell + " is classified empty yet a trial certified it");
    }
    if (d == 3 && l == 4) {
        const WeierstrassCurve curve = demo_curve();
        const X4OnCubic x4 = construct_x4(curve, demo_p1(), demo_p2());
        if (!contains_star(weierstrass_form(curve), x4.star))
            throw CheckFailure("the cubic misses a point of the configuration it generated");
        const Form through = random_curve_through(x4.star, 3, derive_seed(seed, 777), bound);
        if (!contains_star(through, x4.star))
            throw CheckFailure("a generated cubic misses a point it was built to contain");
        cv.group_law_checked = true;
    }
    return cv;
}

}  // namespace starcfg
