#include "starcfg/proof_harness.hpp"

#include <algorithm>
#include <sstream>

#include "starcfg/errors.hpp"
#include "starcfg/rng.hpp"

namespace starcfg {

namespace {

std::string pair_label(const std::pair<int, int>& p) {
    return "p{" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + "}";
}

}  // namespace

std::string EvalMatrix::pattern_table() const {
    std::size_t width = 0;
    for (const auto& label : col_labels) width = std::max(width, label.size());
    width = std::max<std::size_t>(width, 1) + 2;
    std::ostringstream out;
    out << std::string(8, ' ');
    for (const auto& label : col_labels)
        out << std::string(width - label.size(), ' ') << label;
    out << '\n';
    for (int r = 0; r < entries.rows(); ++r) {
        std::string row = pair_label(row_labels[r]);
        row.resize(8, ' ');
        out << row;
        for (int c = 0; c < entries.cols(); ++c)
            out << std::string(width - 1, ' ') << (entries.at(r, c) != 0 ? '*' : '0');
        out << '\n';
    }
    return out.str();
}

EvalMatrix evaluation_matrix(const StarConfig& x, const std::vector<Form>& forms,
                             std::vector<std::string> col_labels) {
    EvalMatrix m;
    if (col_labels.empty())
        for (std::size_t c = 0; c < forms.size(); ++c)
            col_labels.push_back("f" + std::to_string(c + 1));
    if (col_labels.size() != forms.size())
        throw std::invalid_argument("need one column label per form");
    m.col_labels = std::move(col_labels);
    const auto& pts = x.points();
    m.entries = Matrix(static_cast<int>(pts.size()), static_cast<int>(forms.size()));
    for (std::size_t r = 0; r < pts.size(); ++r) {
        m.row_labels.push_back(pts[r].first);
        for (std::size_t c = 0; c < forms.size(); ++c)
            m.entries.at(static_cast<int>(r), static_cast<int>(c)) =
                evaluate(forms[c], pts[r].second);
    }
    return m;
}

Form interpolate(int d, const std::vector<ProjPoint>& zeros,
                 const std::vector<ProjPoint>& nonzeros, std::uint64_t seed, long bound,
                 int cap) {
    if (d < 0) throw std::invalid_argument("negative degree");
    const auto basis = monomial_basis(d);
    Matrix constraints(static_cast<int>(zeros.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < zeros.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            constraints.at(static_cast<int>(r), static_cast<int>(c)) =
                Form::term(basis[c], 1).evaluate(zeros[r].coords());
    const auto kernel = kernel_basis(constraints);
    if (kernel.empty())
        throw InfeasibleError("only the zero form of degree " + std::to_string(d) +
                              " vanishes at all " + std::to_string(zeros.size()) +
                              " prescribed points");
    for (int attempt = 0; attempt < cap; ++attempt) {
        SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Rational> coeffs(basis.size());
        for (const auto& v : kernel) {
            const Rational weight = rng.uniform(-bound, bound);
            if (weight == 0) continue;
            for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += weight * v[c];
        }
        Form f(d, std::move(coeffs));
        if (f.is_zero()) continue;
        const bool clean = std::none_of(nonzeros.begin(), nonzeros.end(),
                                        [&](const ProjPoint& p) { return evaluate(f, p) == 0; });
        if (clean) return f;
    }
    throw RetryCapError("no sample avoided the forbidden zeros in " + std::to_string(cap) +
                        " attempts");
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

std::vector<ProjPoint> points_at(const StarConfig& x, const PairList& pairs) {
    std::vector<ProjPoint> pts;
    for (const auto& [i, j] : pairs) pts.push_back(x.point(i, j));
    return pts;
}

std::vector<ProjPoint> all_points(const StarConfig& x) {
    std::vector<ProjPoint> pts;
    for (const auto& [pair, p] : x.points()) pts.push_back(p);
    return pts;
}

/// All configuration points except the listed pairs.
std::vector<ProjPoint> points_except(const StarConfig& x, const PairList& pairs) {
    std::vector<ProjPoint> pts;
    for (const auto& [pair, p] : x.points())
        if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end()) pts.push_back(p);
    return pts;
}

void check_pattern(ReplicationReport& report, const std::string& name, const EvalMatrix& m,
                   const std::vector<std::vector<int>>& expected) {
    PatternCheck check{name, true, ""};
    for (int r = 0; r < m.entries.rows(); ++r) {
        for (int c = 0; c < m.entries.cols(); ++c) {
            const bool nonzero = m.entries.at(r, c) != 0;
            if (nonzero == static_cast<bool>(expected[r][c])) continue;
            check.pass = false;
            check.detail += (check.detail.empty() ? "" : "; ") + m.col_labels[c] + " at " +
                            pair_label(m.row_labels[r]) + " is " +
                            (nonzero ? "nonzero" : "zero") + ", expected " +
                            (expected[r][c] ? "nonzero" : "zero");
        }
    }
    if (check.pass) check.detail = "all " + std::to_string(m.entries.rows() * m.entries.cols()) +
                                   " entries match";
    report.checks.push_back(std::move(check));
}

void check_rank(ReplicationReport& report, const std::string& name, int got, int want) {
    report.checks.push_back({name, got == want,
                             "rank " + std::to_string(got) + ", expected " +
                                 std::to_string(want)});
}

ReplicationReport finish(ReplicationReport report) {
    for (const PatternCheck& check : report.checks)
        if (!check.pass) throw CheckFailure(check.name + ": " + check.detail);
    report.note = std::to_string(report.checks.size()) + " checks passed";
    return report;
}

}  // namespace

ReplicationReport replicate_l4(int d, std::uint64_t seed, long bound) {
    if (d < 5)
        throw DegreeError("this vanishing pattern needs degree >= 5; degrees 3 and 4 are "
                          "certified by explicit systems instead");
    ReplicationReport report;
    report.d = d;
    report.l = 4;
    report.seed = seed;

    const StarConfig star = random_star(4, derive_seed(seed, 0), bound);
    // One prescribed zero per multiplier after the first, all off the lines
    // of its own index, and no accidental zeros anywhere else.
    const std::vector<PairList> zeros = {{}, {{1, 2}}, {{2, 3}}, {{1, 3}}};
    std::vector<Form> mults;
    for (int i = 0; i < 4; ++i)
        mults.push_back(interpolate(d - 3, points_at(star, zeros[i]),
                                    points_except(star, zeros[i]),
                                    derive_seed(seed, 1 + static_cast<std::uint64_t>(i)),
                                    bound));
    report.system = build_system(star.line_forms(), mults, d);

    report.q_matrix = evaluation_matrix(star, report.system.q, {"Q1", "Q2", "Q3", "Q4"});
    check_pattern(report, "Q values at the points", report.q_matrix,
                  {{1, 1, 0, 0},
                   {1, 0, 1, 0},
                   {1, 0, 0, 1},
                   {0, 1, 0, 0},
                   {0, 0, 0, 1},
                   {0, 0, 1, 0}});
    report.q_rank = rank(report.q_matrix.entries);
    check_rank(report, "rank of the Q values", report.q_rank, 4);

    std::vector<Form> family;
    std::vector<std::string> labels;
    for (int i = 0; i < 4; ++i) {
        const Form n = interpolate(1, {}, all_points(star),
                                   derive_seed(seed, 10 + static_cast<std::uint64_t>(i)), bound);
        family.push_back(n * report.system.q[i]);
        labels.push_back("N" + std::to_string(i + 1) + "*Q" + std::to_string(i + 1));
    }
    family.push_back(report.system.lines[0] * report.system.q[2]);
    labels.push_back("L1*Q3");
    family.push_back(report.system.lines[0] * report.system.q[1]);
    labels.push_back("L1*Q2");
    report.final_matrix = evaluation_matrix(star, family, std::move(labels));
    check_pattern(report, "final family values", report.final_matrix,
                  {{1, 1, 0, 0, 0, 0},
                   {1, 0, 1, 0, 0, 0},
                   {1, 0, 0, 1, 0, 0},
                   {0, 1, 0, 0, 0, 1},
                   {0, 0, 0, 1, 0, 0},
                   {0, 0, 1, 0, 1, 0}});
    report.final_rank = rank(report.final_matrix.entries);
    check_rank(report, "rank of the final family", report.final_rank, 6);
    return finish(std::move(report));
}

ReplicationReport replicate_l5(int d, std::uint64_t seed, long bound) {
    if (d < 6)
        throw DegreeError("this vanishing pattern needs degree >= 6: at degree 5 the two "
                          "prescribed zeros of the second multiplier force it onto line 2; "
                          "degree 5 is certified by an explicit system instead");
    ReplicationReport report;
    report.d = d;
    report.l = 5;
    report.seed = seed;

    const StarConfig star = random_star(5, derive_seed(seed, 0), bound);
    // Prescribed zeros, and the evaluations the final pattern depends on
    // forced nonzero. Every (multiplier, point-on-its-line) pair is pinned
    // one way or the other, so the pattern below is fully determined.
    const std::vector<PairList> zeros = {
        {{0, 4}}, {{0, 1}, {1, 4}}, {{0, 2}, {1, 2}}, {{2, 3}}, {{3, 4}}};
    const std::vector<PairList> nonzeros = {{{0, 1}, {0, 2}, {0, 3}},
                                            {{1, 2}, {1, 3}},
                                            {{2, 3}, {2, 4}},
                                            {{0, 3}, {1, 3}, {3, 4}},
                                            {{0, 4}, {1, 4}, {2, 4}}};
    std::vector<Form> mults;
    for (int i = 0; i < 5; ++i)
        mults.push_back(interpolate(d - 4, points_at(star, zeros[i]),
                                    points_at(star, nonzeros[i]),
                                    derive_seed(seed, 1 + static_cast<std::uint64_t>(i)),
                                    bound));
    report.system = build_system(star.line_forms(), mults, d);

    report.q_matrix =
        evaluation_matrix(star, report.system.q, {"Q1", "Q2", "Q3", "Q4", "Q5"});
    check_pattern(report, "Q values at the points", report.q_matrix,
                  {{0, 1, 0, 0, 0},
                   {0, 0, 1, 0, 0},
                   {1, 0, 0, 1, 0},
                   {1, 0, 0, 0, 0},
                   {0, 0, 1, 0, 0},
                   {0, 1, 0, 1, 0},
                   {0, 1, 0, 0, 0},
                   {0, 0, 0, 1, 0},
                   {0, 0, 1, 0, 1},
                   {0, 0, 0, 0, 1}});
    report.q_rank = rank(report.q_matrix.entries);
    check_rank(report, "rank of the Q values", report.q_rank, 5);

    const std::vector<std::pair<int, int>> products = {
        {4, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}, {3, 4}, {0, 4}};
    std::vector<Form> family;
    std::vector<std::string> labels;
    for (const auto& [line, q] : products) {
        family.push_back(report.system.lines[line] * report.system.q[q]);
        labels.push_back("L" + std::to_string(line + 1) + "*Q" + std::to_string(q + 1));
    }
    report.final_matrix = evaluation_matrix(star, family, std::move(labels));
    check_pattern(report, "final family values", report.final_matrix,
                  {{0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
                   {1, 1, 0, 0, 0, 0, 1, 1, 0, 0},
                   {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                   {0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
                   {0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                   {0, 0, 0, 0, 1, 1, 0, 0, 1, 1},
                   {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
    report.final_rank = rank(report.final_matrix.entries);
    check_rank(report, "rank of the final family", report.final_rank, 10);
    return finish(std::move(report));
}

}  // namespace starcfg
