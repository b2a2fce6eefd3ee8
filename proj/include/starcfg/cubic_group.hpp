#pragma once

#include <array>
#include <vector>

#include "starcfg/rational.hpp"
#include "starcfg/star_config.hpp"

namespace starcfg {

/// y^2 z = x^3 + a x z^2 + b z^3, required smooth: 4a^3 + 27b^2 != 0.
struct WeierstrassCurve {
    Rational a, b;
    WeierstrassCurve(const Rational& a, const Rational& b);
};

/// A projective point of a Weierstrass cubic: the inflection [0:1:0]
/// (the group identity) or an affine point (x, y).
class CurvePoint {
public:
    static CurvePoint infinity();
    static CurvePoint affine(const Rational& x, const Rational& y);

    bool is_infinity() const { return infinity_; }
    const Rational& x() const;
    const Rational& y() const;
    ProjPoint projective() const;
    std::string str() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    CurvePoint() = default;
    bool infinity_ = true;
    Rational x_, y_;
};

/// Exact satisfaction of the curve equation.
bool on_curve(const WeierstrassCurve& c, const CurvePoint& p);

CurvePoint negate(const CurvePoint& p);

/// Third intersection of the line through p and q with the curve, tangent
/// when p == q. Vertical chords and tangents at 2-torsion give the point at
/// infinity. Requires p, q on c.
CurvePoint chord_third(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);

/// Chord-tangent group sum: the third intersection reflected through the
/// identity.
CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);

/// All rational points of order dividing 2: infinity plus (e, 0) for each
/// rational root e of x^3 + ax + b.
std::vector<CurvePoint> two_torsion(const WeierstrassCurve& c);

/// A star configuration of four lines whose six intersection points all lie
/// on the cubic, produced by the group law from a nontorsion point p1 and an
/// affine 2-torsion point p2:
///
///   line1 = (p1 p2), containing p3 = the third intersection;
///   line2 = (p3 oo), containing p1+p2;
///   line3 = (p1+p2 p2), containing p4;
///   line4 = (p4 oo), containing p1.
struct X4OnCubic {
    WeierstrassCurve curve;
    StarConfig star;  ///< lines in construction order line1..line4
    CurvePoint p0, p1, p2, p1_plus_p2, p3, p4;

    /// Which named point sits at star point (i, j) (0-based), in pair order.
    std::vector<std::pair<std::pair<int, int>, std::string>> assignment() const;
};

/// Runs the construction above and validates everything: the arrangement, the
/// six points on the curve, and the identification of the star's points with
/// the named ones. Throws DegeneracyError when p1 is too special, and
/// std::invalid_argument on precondition violations (p2 must be affine
/// 2-torsion, p1 on the curve and not 2-torsion).
X4OnCubic construct_x4(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2);

/// The worked demonstration data: y^2 = x^3 - 25x with p1 = (-4, 6),
/// p2 = (0, 0).
WeierstrassCurve demo_curve();
CurvePoint demo_p1();
CurvePoint demo_p2();

}  // namespace starcfg
