#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "starcfg/cubic_group.hpp"
#include "starcfg/errors.hpp"
#include "starcfg/rng.hpp"

using namespace starcfg;

namespace {

CurvePoint pt(long x_num, long x_den, long y_num, long y_den) {
    return CurvePoint::affine(make_rational(x_num, x_den), make_rational(y_num, y_den));
}

}  // namespace

TEST_CASE("curves must be smooth and points must satisfy the equation") {
    CHECK_THROWS_AS(WeierstrassCurve(-3, 2), std::invalid_argument);  // 4a^3+27b^2 = 0
    CHECK_THROWS_AS(WeierstrassCurve(0, 0), std::invalid_argument);
    const WeierstrassCurve c = demo_curve();  // y^2 = x^3 - 25x
    CHECK(c.a == -25);
    CHECK(c.b == 0);
    CHECK(on_curve(c, CurvePoint::infinity()));
    CHECK(on_curve(c, demo_p1()));
    CHECK(on_curve(c, CurvePoint::affine(5, 0)));
    CHECK_FALSE(on_curve(c, CurvePoint::affine(1, 1)));
    CHECK(CurvePoint::infinity().projective() == ProjPoint(0, 1, 0));
    CHECK(demo_p1().projective() == ProjPoint(-4, 6, 1));
    CHECK(demo_p1().str() == "(-4, 6)");
    CHECK(CurvePoint::infinity().str() == "oo");
    CHECK_THROWS_AS(CurvePoint::infinity().x(), std::invalid_argument);
}

TEST_CASE("chords and tangents produce the worked third intersections") {
    const WeierstrassCurve c = demo_curve();
    const CurvePoint p1 = demo_p1(), p2 = demo_p2();

    const CurvePoint p3 = chord_third(c, p1, p2);
    CHECK(p3 == pt(25, 4, -75, 8));
    CHECK(on_curve(c, p3));

    const CurvePoint sum = add(c, p1, p2);
    CHECK(sum == pt(25, 4, 75, 8));
    CHECK(sum == negate(p3));

    const CurvePoint p4 = chord_third(c, sum, p2);
    CHECK(p4 == pt(-4, 1, -6, 1));
    CHECK(p4 == negate(p1));

    CHECK_THROWS_AS(chord_third(c, CurvePoint::affine(1, 1), p2), std::invalid_argument);
}

TEST_CASE("chord edge cases: identity, inverses, tangents, 2-torsion") {
    const WeierstrassCurve c = demo_curve();
    const CurvePoint o = CurvePoint::infinity();
    const CurvePoint p1 = demo_p1();

    CHECK(chord_third(c, o, o) == o);
    CHECK(chord_third(c, p1, o) == negate(p1));           // vertical through p1
    CHECK(chord_third(c, p1, negate(p1)) == o);           // vertical chord
    CHECK(chord_third(c, demo_p2(), demo_p2()) == o);     // tangent at 2-torsion
    CHECK(add(c, p1, o) == p1);
    CHECK(add(c, o, p1) == p1);
    CHECK(add(c, p1, negate(p1)) == o);

    // Tangent doubling of (-4, 6): slope = (3*16 - 25)/12 = 23/12.
    const CurvePoint dbl = add(c, p1, p1);
    CHECK(dbl == pt(1681, 144, -62279, 1728));
    CHECK(on_curve(c, dbl));
}

TEST_CASE("group axioms hold on sampled points") {
    const WeierstrassCurve c = demo_curve();
    // Generate a pool by repeated addition from the demo points.
    std::vector<CurvePoint> pool = {CurvePoint::infinity(), demo_p2(),
                                    CurvePoint::affine(5, 0), CurvePoint::affine(-5, 0)};
    CurvePoint acc = demo_p1();
    for (int i = 0; i < 4; ++i) {
        pool.push_back(acc);
        pool.push_back(add(c, acc, demo_p2()));
        acc = add(c, acc, demo_p1());
    }
    for (const CurvePoint& p : pool) REQUIRE(on_curve(c, p));

    SeededRng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const CurvePoint& p = pool[static_cast<std::size_t>(rng.uniform(0, 11))];
        const CurvePoint& q = pool[static_cast<std::size_t>(rng.uniform(0, 11))];
        const CurvePoint& r = pool[static_cast<std::size_t>(rng.uniform(0, 11))];
        CHECK(add(c, p, q) == add(c, q, p));
        CHECK(add(c, add(c, p, q), r) == add(c, p, add(c, q, r)));
        CHECK(add(c, p, negate(p)) == CurvePoint::infinity());
    }
}

TEST_CASE("2-torsion enumerates the rational roots exactly") {
    SUBCASE("three affine involutions: x^3 - 25x = x(x-5)(x+5)") {
        const auto tors = two_torsion(demo_curve());
        REQUIRE(tors.size() == 4);
        CHECK(tors[0] == CurvePoint::infinity());
        CHECK(tors[1] == CurvePoint::affine(-5, 0));
        CHECK(tors[2] == CurvePoint::affine(0, 0));
        CHECK(tors[3] == CurvePoint::affine(5, 0));
    }
    SUBCASE("no rational roots: x^3 - 2") {
        const auto tors = two_torsion(WeierstrassCurve(0, -2));
        REQUIRE(tors.size() == 1);
        CHECK(tors[0] == CurvePoint::infinity());
    }
    SUBCASE("rational (non-integer) roots via denominator scaling") {
        // x^3 - x/4 = x(x-1/2)(x+1/2).
        const auto tors = two_torsion(WeierstrassCurve(make_rational(-1, 4), 0));
        REQUIRE(tors.size() == 4);
        CHECK(tors[1] == CurvePoint::affine(make_rational(-1, 2), 0));
        CHECK(tors[2] == CurvePoint::affine(0, 0));
        CHECK(tors[3] == CurvePoint::affine(make_rational(1, 2), 0));
    }
    SUBCASE("single affine involution: x^3 + x = x(x^2+1)") {
        const auto tors = two_torsion(WeierstrassCurve(1, 0));
        REQUIRE(tors.size() == 2);
        CHECK(tors[1] == CurvePoint::affine(0, 0));
    }
}

TEST_CASE("the four-line construction reproduces the worked arrangement") {
    const X4OnCubic x4 = construct_x4(demo_curve(), demo_p1(), demo_p2());

    CHECK(x4.p3 == pt(25, 4, -75, 8));
    CHECK(x4.p1_plus_p2 == pt(25, 4, 75, 8));
    CHECK(x4.p4 == pt(-4, 1, -6, 1));
    CHECK(x4.p0 == CurvePoint::infinity());

    REQUIRE(x4.star.line_count() == 4);
    CHECK(x4.star.lines()[0] == Line::parse("x + 2/3 y"));
    CHECK(x4.star.lines()[1] == Line::parse("x - 25/4 z"));
    CHECK(x4.star.lines()[2] == Line::parse("x - 2/3 y"));
    CHECK(x4.star.lines()[3] == Line::parse("x + 4z"));

    // Every intersection point sits on the cubic.
    for (const auto& [pair, p] : x4.star.points()) {
        const Form f = parse_form("y^2 z - x^3 + 25 x z^2");
        CHECK(evaluate(f, p) == 0);
    }

    const auto names = x4.assignment();
    REQUIRE(names.size() == 6);
    CHECK(names[0].second == "p3");       // line1 ^ line2
    CHECK(names[1].second == "p2");       // line1 ^ line3
    CHECK(names[2].second == "p1");       // line1 ^ line4
    CHECK(names[3].second == "p1+p2");    // line2 ^ line3
    CHECK(names[4].second == "p0");       // line2 ^ line4
    CHECK(names[5].second == "p4");       // line3 ^ line4
    for (std::size_t k = 0; k < names.size(); ++k)
        CHECK(names[k].first == x4.star.points()[k].first);
}

TEST_CASE("construction rejects bad starting data") {
    const WeierstrassCurve c = demo_curve();
    // p2 must be affine 2-torsion.
    CHECK_THROWS_AS(construct_x4(c, demo_p1(), CurvePoint::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_x4(c, demo_p1(), demo_p1()), std::invalid_argument);
    // p1 must be on the curve and not 2-torsion itself.
    CHECK_THROWS_AS(construct_x4(c, CurvePoint::affine(1, 1), demo_p2()),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_x4(c, CurvePoint::affine(5, 0), demo_p2()),
                    std::invalid_argument);
}

TEST_CASE("degenerate choices of p1 are detected, not silently accepted") {
    // On y^2 = x^3 - 2x + 1, starting from p1 = (0, 1), p2 = (1, 0) the
    // chord construction revisits p1 and two lines coincide.
    const WeierstrassCurve c(-2, 1);
    const CurvePoint p1 = CurvePoint::affine(0, 1);
    const CurvePoint p2 = CurvePoint::affine(1, 0);
    REQUIRE(on_curve(c, p1));
    REQUIRE(on_curve(c, p2));
    CHECK_THROWS_AS(construct_x4(c, p1, p2), DegeneracyError);
    // The failure is about the starting point, not the machinery: the mirror
    // start on the demo curve still succeeds.
    const X4OnCubic x4 = construct_x4(demo_curve(), negate(demo_p1()), demo_p2());
    CHECK(x4.star.line_count() == 4);
}
