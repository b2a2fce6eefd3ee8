#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starcfg/form.hpp"
#include "starcfg/rational.hpp"

namespace starcfg {

/// Point of the projective plane, stored with its first nonzero coordinate
/// scaled to 1, so equality of points is equality of the stored triples.
class ProjPoint {
public:
    ProjPoint(const Rational& x, const Rational& y, const Rational& z);
    explicit ProjPoint(const Point3& coords);

    const Point3& coords() const { return coords_; }
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

    std::string str() const;  ///< "[x : y : z]"

private:
    Point3 coords_;
};

/// Value of f at the normalized representative of p.
Rational evaluate(const Form& f, const ProjPoint& p);

/// A projective line; the stored linear form has its first nonzero
/// coefficient scaled to 1, so equal lines compare equal.
class Line {
public:
    explicit Line(const Form& f);  ///< requires a nonzero degree-1 form
    static Line parse(const std::string& text);

    const Form& form() const { return form_; }
    friend bool operator==(const Line&, const Line&) = default;

private:
    Form form_;
};

/// The unique point on both lines (cross product of coefficient triples).
ProjPoint intersect_lines(const Line& a, const Line& b);

/// The unique line through two distinct points.
Line line_through(const ProjPoint& p, const ProjPoint& q);

/// l >= 2 pairwise distinct lines, no three through one point, together with
/// the C(l,2) pairwise intersection points. Immutable once built.
class StarConfig {
public:
    /// Empty placeholder (no lines); every real instance comes from build.
    StarConfig() = default;

    /// Validates the arrangement; throws DuplicateLineError or
    /// ConcurrentLinesError (each naming the offending lines).
    static StarConfig build(std::vector<Line> lines);

    int line_count() const { return static_cast<int>(lines_.size()); }
    const std::vector<Line>& lines() const { return lines_; }
    std::vector<Form> line_forms() const;

    /// Intersection point of lines i and j, 0-based, i < j.
    const ProjPoint& point(int i, int j) const;
    /// All points with their index pairs, in lexicographic pair order.
    const std::vector<std::pair<std::pair<int, int>, ProjPoint>>& points() const {
        return points_;
    }

private:
    std::vector<Line> lines_;
    std::vector<std::pair<std::pair<int, int>, ProjPoint>> points_;
};

/// Rejection-samples random lines (coefficients in [-bound, bound]) until the
/// arrangement validates; deterministic in (l, seed, bound). Throws
/// RetryCapError after 100 attempts.
StarConfig random_star(int l, std::uint64_t seed, long bound = 100);

/// The l products omitting one line each; all of degree l-1. These generate
/// the ideal of the configuration's points.
std::vector<Form> ideal_generators(const StarConfig& x);

/// min(C(t+2,2), C(l,2)); star points behave like generic points.
long hilbert_function_formula(int l, int t);

/// C(t+2,2) minus the span dimension of the degree-t multiples of the ideal
/// generators; computed independently of hilbert_function_formula.
long hilbert_function_computed(const StarConfig& x, int t);

/// Dimension of {f of degree t : f vanishes at every point of x}, computed
/// from the point-evaluation matrix on the monomial basis. Cross-checks the
/// generator route: C(t+2,2) - hilbert_function_computed.
long vanishing_forms_dimension(const StarConfig& x, int t);

/// True iff F vanishes at every point of x. Requires deg F >= 1.
bool contains_star(const Form& f, const StarConfig& x);

/// Random curve of degree d through every point of x, built as a combination
/// of the ideal generators with random degree-(d-l+1) multipliers. Throws
/// DegreeError when d < l-1 (no such curve exists).
Form random_curve_through(const StarConfig& x, int d, std::uint64_t seed, long bound = 100);

}  // namespace starcfg
