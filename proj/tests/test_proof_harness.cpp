#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "starcfg/errors.hpp"
#include "starcfg/proof_harness.hpp"
#include "starcfg/rng.hpp"

using namespace starcfg;

TEST_CASE("evaluation matrices carry labels and exact values") {
    const StarConfig x = StarConfig::build({Line::parse("x"), Line::parse("y"),
                                            Line::parse("z")});
    // Points: p12=[0:0:1], p13=[0:1:0], p23=[1:0:0].
    const EvalMatrix m = evaluation_matrix(x, {parse_form("x+y+z"), parse_form("z^2")},
                                           {"s", "t"});
    REQUIRE(m.entries.rows() == 3);
    REQUIRE(m.entries.cols() == 2);
    CHECK(m.row_labels[0] == std::make_pair(0, 1));
    CHECK(m.entries.at(0, 0) == 1);
    CHECK(m.entries.at(0, 1) == 1);
    CHECK(m.entries.at(1, 1) == 0);
    CHECK(m.entries.at(2, 1) == 0);
    CHECK(m.col_labels == std::vector<std::string>{"s", "t"});
    CHECK_THROWS_AS(evaluation_matrix(x, {parse_form("x")}, {"a", "b"}),
                    std::invalid_argument);

    const std::string table = m.pattern_table();
    CHECK(table.find("p{1,2}") != std::string::npos);
    CHECK(table.find('*') != std::string::npos);
    CHECK(table.find('0') != std::string::npos);
}

TEST_CASE("interpolation hits prescribed zeros and avoids forbidden ones") {
    const StarConfig x = random_star(5, 99);
    std::vector<ProjPoint> zeros = {x.point(0, 1), x.point(2, 3)};
    std::vector<ProjPoint> nonzeros;
    for (const auto& [pair, p] : x.points())
        if (pair != std::make_pair(0, 1) && pair != std::make_pair(2, 3))
            nonzeros.push_back(p);

    for (int d : {1, 2, 3}) {
        const Form f = interpolate(d, zeros, nonzeros, 5);
        CHECK(f.degree() == d);
        for (const auto& p : zeros) CHECK(evaluate(f, p) == 0);
        for (const auto& p : nonzeros) CHECK(evaluate(f, p) != 0);
        CHECK(f == interpolate(d, zeros, nonzeros, 5));  // deterministic
    }
}

TEST_CASE("interpolation reports infeasible and exhausted problems") {
    // Three non-collinear zeros leave no line at all.
    const std::vector<ProjPoint> tri = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0),
                                        ProjPoint(0, 0, 1)};
    CHECK_THROWS_AS(interpolate(1, tri, {}, 0), InfeasibleError);
    // Demanding a zero and a nonzero at one point rejects every sample.
    const ProjPoint p(1, 2, 3);
    CHECK_THROWS_AS(interpolate(2, {p}, {p}, 0), RetryCapError);
}

TEST_CASE("the l=4 independence pattern replicates for d = 5, 6, 7") {
    for (int d : {5, 6, 7}) {
        const ReplicationReport r = replicate_l4(d, 0);
        CHECK(r.d == d);
        CHECK(r.l == 4);
        CHECK(r.q_rank == 4);
        CHECK(r.final_rank == 6);
        CHECK(r.final_matrix.entries.rows() == 6);
        CHECK(r.final_matrix.entries.cols() == 6);
        for (const auto& c : r.checks) CHECK(c.pass);
        CHECK(r.note.find("checks passed") != std::string::npos);
        // Multiplier degrees follow the requested curve degree.
        for (const Form& m : r.system.mults) CHECK(m.degree() == d - 3);
    }
}

TEST_CASE("the l=5 independence pattern replicates for d = 6, 7, 8") {
    for (int d : {6, 7, 8}) {
        const ReplicationReport r = replicate_l5(d, 0);
        CHECK(r.q_rank == 5);
        CHECK(r.final_rank == 10);
        CHECK(r.final_matrix.entries.rows() == 10);
        CHECK(r.final_matrix.entries.cols() == 10);
        for (const auto& c : r.checks) CHECK(c.pass);
        for (const Form& m : r.system.mults) CHECK(m.degree() == d - 4);
    }
}

TEST_CASE("replication reports are reproducible and seed-sensitive") {
    const ReplicationReport a = replicate_l4(5, 42);
    const ReplicationReport b = replicate_l4(5, 42);
    const ReplicationReport c = replicate_l4(5, 43);
    CHECK(a.system.lines == b.system.lines);
    CHECK(a.system.mults == b.system.mults);
    CHECK(a.final_matrix.entries == b.final_matrix.entries);
    CHECK(a.system.lines != c.system.lines);
}

TEST_CASE("replication explains why low degrees are out of range") {
    try {
        replicate_l4(4, 0);
        FAIL("expected a degree refusal");
    } catch (const DegreeError& e) {
        CHECK(std::string(e.what()).find("explicit") != std::string::npos);
    }
    try {
        replicate_l5(5, 0);
        FAIL("expected a degree refusal");
    } catch (const DegreeError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
