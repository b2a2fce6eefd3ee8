#include "starcfg/cubic_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "starcfg/errors.hpp"

namespace starcfg {

WeierstrassCurve::WeierstrassCurve(const Rational& a_, const Rational& b_) : a(a_), b(b_) {
    if (4 * a * a * a + 27 * b * b == 0)
        throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

CurvePoint CurvePoint::infinity() { return CurvePoint(); }

CurvePoint CurvePoint::affine(const Rational& x, const Rational& y) {
    CurvePoint p;
    p.infinity_ = false;
    p.x_ = x;
    p.y_ = y;
    return p;
}

const Rational& CurvePoint::x() const {
    if (infinity_) throw std::invalid_argument("the point at infinity has no affine x");
    return x_;
}

const Rational& CurvePoint::y() const {
    if (infinity_) throw std::invalid_argument("the point at infinity has no affine y");
    return y_;
}

ProjPoint CurvePoint::projective() const {
    return infinity_ ? ProjPoint(0, 1, 0) : ProjPoint(x_, y_, 1);
}

std::string CurvePoint::str() const {
    return infinity_ ? "oo" : "(" + to_string(x_) + ", " + to_string(y_) + ")";
}

bool on_curve(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == p.x() * p.x() * p.x() + c.a * p.x() + c.b;
}

CurvePoint negate(const CurvePoint& p) {
    return p.is_infinity() ? p : CurvePoint::affine(p.x(), -p.y());
}

CurvePoint chord_third(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (!on_curve(c, p) || !on_curve(c, q))
        throw std::invalid_argument("chord endpoints must lie on the curve");
    if (p.is_infinity() && q.is_infinity()) return p;  // inflection tangent
    if (p.is_infinity() || q.is_infinity()) {
        // Vertical line; its third point is the reflection (itself when y = 0).
        const CurvePoint& affine = p.is_infinity() ? q : p;
        return negate(affine);
    }
    Rational slope;
    if (p == q) {
        if (p.y() == 0) return CurvePoint::infinity();  // vertical tangent
        slope = (3 * p.x() * p.x() + c.a) / (2 * p.y());
    } else if (p.x() == q.x()) {
        return CurvePoint::infinity();  // vertical chord
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    const Rational x3 = slope * slope - p.x() - q.x();
    return CurvePoint::affine(x3, slope * (x3 - p.x()) + p.y());
}

CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    return chord_third(c, chord_third(c, p, q), CurvePoint::infinity());
}

namespace {

/// Integer roots of y^3 + A*y + B by bisection on intervals where the cubic
/// is provably monotone, bounded by 1 + max(|A|, |B|).
std::set<Int> integer_cubic_roots(const Int& A, const Int& B) {
    const auto value = [&](const Int& y) -> Int { return y * y * y + A * y + B; };
    std::set<Int> roots;
    const auto try_root = [&](const Int& y) {
        if (value(y) == 0) roots.insert(y);
    };

    Int bound = 1 + std::max(abs(A), abs(B));
    // Search [lo, hi] assuming the value is nondecreasing there.
    const auto search = [&](Int lo, Int hi) {
        if (lo > hi || value(lo) > 0 || value(hi) < 0) return;
        while (lo < hi) {
            const Int mid = lo + (hi - lo) / 2;
            if (value(mid) < 0) lo = mid + 1;
            else hi = mid;
        }
        try_root(lo);
    };

    if (A >= 0) {
        // Strictly increasing everywhere.
        search(-bound, bound);
        return roots;
    }
    // Stationary points at +-sqrt(-A/3); s is the integer floor of that.
    Int s;
    mpz_sqrt(s.get_mpz_t(), Int((-A) / 3).get_mpz_t());
    // Increasing for y <= -(s+1), decreasing on [-s, s], increasing for
    // y >= s+1; the cells around +-s are checked directly.
    search(-bound, -(s + 1));
    try_root(-s);
    try_root(s);
    {
        // Decreasing part: bisect the negated values.
        Int lo = -s, hi = s;
        if (lo <= hi && value(lo) >= 0 && value(hi) <= 0) {
            while (lo < hi) {
                const Int mid = lo + (hi - lo) / 2;
                if (value(mid) > 0) lo = mid + 1;
                else hi = mid;
            }
            try_root(lo);
        }
    }
    search(s + 1, bound);
    return roots;
}

}  // namespace

std::vector<CurvePoint> two_torsion(const WeierstrassCurve& c) {
    // Clear denominators: x = y/k turns x^3 + ax + b into (y^3 + Ay + B)/k^3
    // with A = a k^2, B = b k^3 integers, so rational roots are y/k with y an
    // integer root of the monic integer cubic.
    Int k;
    mpz_lcm(k.get_mpz_t(), c.a.get_den_mpz_t(), c.b.get_den_mpz_t());
    const Rational A = c.a * k * k;
    const Rational B = c.b * k * k * k;
    std::vector<CurvePoint> points{CurvePoint::infinity()};
    for (const Int& root : integer_cubic_roots(A.get_num(), B.get_num())) {
        Rational x(root, k);
        x.canonicalize();
        points.push_back(CurvePoint::affine(x, 0));
    }
    std::sort(points.begin() + 1, points.end(),
              [](const CurvePoint& p, const CurvePoint& q) { return p.x() < q.x(); });
    return points;
}

std::vector<std::pair<std::pair<int, int>, std::string>> X4OnCubic::assignment() const {
    return {{{0, 1}, "p3"}, {{0, 2}, "p2"},      {{0, 3}, "p1"},
            {{1, 2}, "p1+p2"}, {{1, 3}, "p0"}, {{2, 3}, "p4"}};
}

X4OnCubic construct_x4(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2) {
    if (p1.is_infinity() || !on_curve(c, p1))
        throw std::invalid_argument("p1 must be an affine point of the curve");
    if (p2.is_infinity() || p2.y() != 0 || !on_curve(c, p2))
        throw std::invalid_argument("p2 must be an affine point of order 2");
    if (p1.y() == 0) throw std::invalid_argument("p1 must not have order 2");
    if (p1.x() == p2.x())
        throw DegeneracyError("the chord through p1 and p2 is vertical; its third point "
                              "escapes to infinity");

    const CurvePoint p0 = CurvePoint::infinity();
    const CurvePoint p3 = chord_third(c, p1, p2);
    const CurvePoint sum = negate(p3);  // p1 + p2
    const CurvePoint p4 = chord_third(c, sum, p2);
    for (const CurvePoint* p : {&p3, &sum, &p4})
        if (p->is_infinity())
            throw DegeneracyError("a constructed point escaped to infinity");

    StarConfig star = [&] {
        try {
            return StarConfig::build({line_through(p1.projective(), p2.projective()),
                                      line_through(p3.projective(), p0.projective()),
                                      line_through(sum.projective(), p2.projective()),
                                      line_through(p4.projective(), p0.projective())});
        } catch (const std::invalid_argument& bad) {
            throw DegeneracyError(std::string("the four lines degenerate: ") + bad.what());
        }
    }();

    X4OnCubic x{c, std::move(star), p0, p1, p2, sum, p3, p4};
    const std::vector<std::pair<std::pair<int, int>, const CurvePoint*>> expected = {
        {{0, 1}, &x.p3},         {{0, 2}, &x.p2}, {{0, 3}, &x.p1},
        {{1, 2}, &x.p1_plus_p2}, {{1, 3}, &x.p0}, {{2, 3}, &x.p4}};
    for (const auto& [pair, point] : expected) {
        if (x.star.point(pair.first, pair.second) != point->projective())
            throw CheckFailure("intersection of lines " + std::to_string(pair.first + 1) +
                               " and " + std::to_string(pair.second + 1) +
                               " is not the constructed point " + point->str());
        if (!on_curve(c, *point))
            throw CheckFailure("constructed point " + point->str() + " left the curve");
    }
    return x;
}

WeierstrassCurve demo_curve() { return WeierstrassCurve(-25, 0); }
CurvePoint demo_p1() { return CurvePoint::affine(-4, 6); }
CurvePoint demo_p2() { return CurvePoint::affine(0, 0); }

}  // namespace starcfg
