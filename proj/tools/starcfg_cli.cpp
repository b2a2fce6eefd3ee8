// Command-line surface for the star-configuration toolkit. Every subcommand
// is deterministic in its flags: one --seed feeds documented per-task streams
// (stream 0 the arrangement, stream 1 the multipliers or curve), so reruns
// are byte-identical.
//
// Exit codes: 0 success/consistent, 1 usage error, 2 a consistency check
// failed.
#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starcfg/classifier.hpp"
#include "starcfg/cubic_group.hpp"
#include "starcfg/errors.hpp"
#include "starcfg/json_out.hpp"
#include "starcfg/proof_harness.hpp"
#include "starcfg/rng.hpp"

namespace {

using namespace starcfg;

struct RunConfig {
    std::uint64_t seed = 0;
    long bound = 100;
    int trials = 5;
    bool json = false;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "master seed for all randomness")->capture_default_str();
    cmd->add_option("--bound", cfg.bound, "coefficients are drawn from [-bound, bound]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--trials", cfg.trials, "independent attempts before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--json", cfg.json, "machine-readable output");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_hilbert(int l, int t_max, const RunConfig& cfg) {
    const StarConfig x = random_star(l, derive_seed(cfg.seed, 0), cfg.bound);
    bool all_match = true;
    Json rows = Json::array();
    std::ostringstream table;
    table << "  t  formula  computed  match\n";
    for (int t = 0; t <= t_max; ++t) {
        const long formula = hilbert_function_formula(l, t);
        const long computed = hilbert_function_computed(x, t);
        const bool match = formula == computed;
        all_match = all_match && match;
        rows.push_back(Json{{"t", t}, {"formula", formula}, {"computed", computed},
                            {"match", match}});
        table << std::setw(3) << t << std::setw(9) << formula << std::setw(10) << computed
              << "  " << (match ? "match" : "MISMATCH") << "\n";
    }
    if (cfg.json) {
        emit(Json{{"l", l}, {"seed", cfg.seed}, {"rows", std::move(rows)},
                  {"all_match", all_match}});
    } else {
        std::cout << "Hilbert function of a random " << l << "-line configuration (seed "
                  << cfg.seed << ")\n" << table.str();
    }
    return all_match ? 0 : 2;
}

int run_check(int d, int l, const std::vector<std::string>& line_texts,
              const std::vector<std::string>& mult_texts, const RunConfig& cfg) {
    if (d < l - 1) {
        // Nothing of degree d multiplies the generators; NO is certain.
        if (cfg.json) {
            emit(Json{{"d", d}, {"l", l}, {"status", "certified-no"},
                      {"reason", "degree-bound"}});
        } else {
            std::cout << "check d=" << d << " l=" << l << ": certified-no (degree bound: any "
                      << "curve through the points has degree >= " << l - 1 << ")\n";
        }
        return 0;
    }
    std::vector<Witness> explicit_trials;
    if (!line_texts.empty() || !mult_texts.empty()) {
        Witness w;
        for (const auto& text : line_texts) w.lines.push_back(parse_form(text));
        for (const auto& text : mult_texts) w.mults.push_back(parse_form(text));
        explicit_trials.push_back(std::move(w));
    }
    const DominanceVerdict v =
        dominance_check(d, l, cfg.trials, cfg.seed, cfg.bound, explicit_trials);
    const std::string status = v.certified ? "certified-yes" : "evidence-no";
    if (cfg.json) {
        Json out = to_json(v);
        Json tagged;
        tagged["status"] = status;
        for (auto& [key, value] : out.items()) tagged[key] = value;
        emit(tagged);
    } else {
        std::cout << "check d=" << d << " l=" << l << ": " << status << "\n";
        if (v.certified) {
            std::cout << "full dimension " << v.dim << " of " << v.dim_sd << " reached after "
                      << v.trials_run << " trial" << (v.trials_run == 1 ? "" : "s")
                      << "; the generic degree-" << d << " curve contains such a configuration\n";
        } else {
            std::cout << "best dimension " << v.dim << " of " << v.dim_sd << " over "
                      << v.trials_run << " trials; evidence only, not a proof of absence\n";
        }
    }
    return 0;
}

const char* reason_code(Reason r) {
    switch (r) {
        case Reason::DegreeBound: return "db";
        case Reason::DimensionCount: return "dc";
        case Reason::Luroth: return "lu";
        case Reason::TrivialSmallL: return "tr";
        case Reason::CertifiedRank: return "cr";
        case Reason::GroupLaw: return "gl";
    }
    return "??";
}

int run_classify(int d_max, int l_max, bool latex, const RunConfig& cfg) {
    if (cfg.json) {
        Json cells = Json::array();
        for (int d = 1; d <= d_max; ++d)
            for (int l = 2; l <= l_max; ++l) cells.push_back(to_json(answer(d, l)));
        emit(Json{{"d_max", d_max}, {"l_max", l_max}, {"cells", std::move(cells)}});
        return 0;
    }
    if (latex) {
        std::cout << "\\begin{tabular}{r|" << std::string(l_max - 1, 'c') << "}\n  d";
        for (int l = 2; l <= l_max; ++l) std::cout << " & $\\ell=" << l << "$";
        std::cout << " \\\\\n  \\hline\n";
        for (int d = 1; d <= d_max; ++d) {
            std::cout << "  " << d;
            for (int l = 2; l <= l_max; ++l)
                std::cout << " & " << (answer(d, l).contains ? "Y" : "--");
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
        return 0;
    }
    std::cout << "does the generic degree-d curve contain an l-line configuration?\n     ";
    for (int l = 2; l <= l_max; ++l) std::cout << "  l=" << l;
    std::cout << "\n";
    for (int d = 1; d <= d_max; ++d) {
        std::cout << "d=" << d << (d < 10 ? " " : "") << "  ";
        for (int l = 2; l <= l_max; ++l) {
            const Verdict v = answer(d, l);
            std::cout << " " << (v.contains ? "Y." : "--") << reason_code(v.reason);
        }
        std::cout << "\n";
    }
    std::cout << "\nreasons: db degree-bound, dc dimension-count, lu luroth,\n"
              << "         tr trivial-small-l, cr certified-rank, gl group-law\n";
    return 0;
}

CurvePoint parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected a point as x,y", text.size());
    return CurvePoint::affine(parse_rational(text.substr(0, comma)),
                              parse_rational(text.substr(comma + 1)));
}

int run_cubic_x4(bool use_default, const std::string& a_text, const std::string& b_text,
                 const std::string& p1_text, const std::string& p2_text, const RunConfig& cfg) {
    const WeierstrassCurve curve =
        use_default ? demo_curve()
                    : WeierstrassCurve(parse_rational(a_text), parse_rational(b_text));
    const CurvePoint p1 = use_default ? demo_p1() : parse_point(p1_text);
    const CurvePoint p2 = use_default ? demo_p2() : parse_point(p2_text);
    const X4OnCubic x4 = construct_x4(curve, p1, p2);
    if (cfg.json) {
        emit(to_json(x4));
        return 0;
    }
    std::cout << "curve: y^2 z = x^3 + (" << to_string(curve.a) << ") x z^2 + ("
              << to_string(curve.b) << ") z^3\n"
              << "p1 = " << x4.p1.str() << ", p2 = " << x4.p2.str() << " (order 2)\n"
              << "p3 = " << x4.p3.str() << ", p1+p2 = " << x4.p1_plus_p2.str()
              << ", p4 = " << x4.p4.str() << "\n\nlines:\n";
    for (std::size_t i = 0; i < x4.star.lines().size(); ++i)
        std::cout << "  " << i + 1 << ": " << format_form(x4.star.lines()[i].form()) << "\n";
    std::cout << "\nintersection points on the cubic:\n";
    for (const auto& [pair, name] : x4.assignment())
        std::cout << "  lines " << pair.first + 1 << "," << pair.second + 1 << " meet at "
                  << name << " = " << x4.star.point(pair.first, pair.second).str() << "\n";
    return 0;
}

void print_replication(const ReplicationReport& report) {
    std::cout << "replication for " << report.l << " lines at degree " << report.d << " (seed "
              << report.seed << ")\n\nlines:\n";
    for (std::size_t i = 0; i < report.system.lines.size(); ++i)
        std::cout << "  L" << i + 1 << " = " << format_form(report.system.lines[i]) << "\n";
    std::cout << "\nQ values at the points (* nonzero):\n"
              << report.q_matrix.pattern_table() << "rank " << report.q_rank << "\n\n"
              << "final family (* nonzero):\n" << report.final_matrix.pattern_table()
              << "rank " << report.final_rank << "\n\nchecks:\n";
    for (const PatternCheck& check : report.checks)
        std::cout << "  " << (check.pass ? "pass" : "FAIL") << "  " << check.name << ": "
                  << check.detail << "\n";
}

int certify_instead(int d, int l, const std::string& why, const RunConfig& cfg) {
    const auto witness = known_witness(d, l);
    const DominanceVerdict v = dominance_check(d, l, 1, cfg.seed, cfg.bound, {*witness});
    if (cfg.json) {
        Json out;
        out["note"] = why;
        out["certificate"] = to_json(v);
        emit(out);
        return v.certified ? 0 : 2;
    }
    std::cout << why << "\n\nrunning the stored explicit system instead:\n  dimension " << v.dim
              << " of " << v.dim_sd << " -> " << (v.certified ? "certified" : "FAILED") << "\n";
    return v.certified ? 0 : 2;
}

int run_replicate(int l, int d, const RunConfig& cfg) {
    if (l == 4) {
        if (d >= 5) {
            const ReplicationReport report = replicate_l4(d, cfg.seed, cfg.bound);
            if (cfg.json) emit(to_json(report));
            else print_replication(report);
            return 0;
        }
        if (d == 4)
            return certify_instead(4, 4,
                                   "the degree-4 case is not covered by the vanishing-pattern "
                                   "argument; it is settled by an explicit certificate.",
                                   cfg);
        if (d == 3) {
            std::cout << "the cubic case is settled by the group-law construction; "
                         "see the cubic-x4 subcommand.\n";
            return 0;
        }
        throw DegreeError("no curve of degree " + std::to_string(d) +
                          " contains the points of a 4-line configuration");
    }
    // l == 5
    if (d >= 6) {
        const ReplicationReport report = replicate_l5(d, cfg.seed, cfg.bound);
        if (cfg.json) emit(to_json(report));
        else print_replication(report);
        return 0;
    }
    if (d == 5)
        return certify_instead(5, 5,
                               "at degree 5 the multipliers are linear and the two prescribed "
                               "zeros of the second one force it onto line 2, so the "
                               "vanishing-pattern argument breaks; an explicit certificate "
                               "settles the case.",
                               cfg);
    if (d == 4) {
        const DominanceVerdict v = dominance_check(4, 5, cfg.trials, cfg.seed, cfg.bound);
        if (cfg.json) {
            Json out;
            out["note"] = "no certificate exists: quartics through the ten points form a "
                          "proper hypersurface, so the generic quartic misses them";
            out["evidence"] = to_json(v);
            emit(out);
        } else {
            std::cout << "no certificate exists at degree 4: the quartics containing a 5-line "
                         "configuration form a proper hypersurface.\nevidence: best dimension "
                      << v.dim << " of " << v.dim_sd << " over " << v.trials_run << " trials\n";
        }
        return v.certified ? 2 : 0;
    }
    throw DegreeError("no curve of degree " + std::to_string(d) +
                      " contains the points of a 5-line configuration");
}

int run_curve_through(int l, int d, const RunConfig& cfg) {
    const StarConfig x = random_star(l, derive_seed(cfg.seed, 0), cfg.bound);
    const Form curve = random_curve_through(x, d, derive_seed(cfg.seed, 1), cfg.bound);
    const bool contains = contains_star(curve, x);
    if (cfg.json) {
        Json out;
        out["d"] = d;
        out["star"] = to_json(x);
        out["curve"] = to_json(curve);
        out["contains"] = contains;
        emit(out);
    } else {
        std::cout << "random " << l << "-line configuration (seed " << cfg.seed << "):\n";
        for (std::size_t i = 0; i < x.lines().size(); ++i)
            std::cout << "  L" << i + 1 << " = " << format_form(x.lines()[i].form()) << "\n";
        std::cout << "degree-" << d << " curve through all " << choose2(l) << " points:\n  "
                  << format_form(curve) << "\ncontains every point: "
                  << (contains ? "yes" : "NO") << "\n";
    }
    return contains ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for star configurations on generic plane curves"};
    app.require_subcommand(1);

    RunConfig cfg;
    int l = 0, d = 0, t_max = 10, d_max = 10, l_max = 8;
    bool use_default = false, latex = false;
    std::string a_text = "0", b_text = "0", p1_text, p2_text;
    std::vector<std::string> line_texts, mult_texts;

    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "dimension of each graded piece of the points' coordinate ring");
    hilbert->add_option("--l", l, "number of lines")->required()->check(CLI::Range(2, 40));
    hilbert->add_option("--t-max", t_max, "largest degree to tabulate")
        ->check(CLI::Range(0, 60))
        ->capture_default_str();
    add_common_flags(hilbert, cfg);

    CLI::App* check = app.add_subcommand(
        "check", "does the generic degree-d curve contain an l-line configuration?");
    check->add_option("--d", d, "curve degree")->required()->check(CLI::Range(1, 60));
    check->add_option("--l", l, "number of lines")->required()->check(CLI::Range(2, 40));
    check->add_option("--L", line_texts, "explicit lines to try first (repeat l times)");
    check->add_option("--M", mult_texts, "explicit multipliers to try first (repeat l times)");
    add_common_flags(check, cfg);

    CLI::App* classify = app.add_subcommand("classify", "the full YES/NO table with reasons");
    classify->add_option("--d-max", d_max, "largest degree")->check(CLI::Range(1, 60))
        ->capture_default_str();
    classify->add_option("--l-max", l_max, "largest line count")->check(CLI::Range(2, 40))
        ->capture_default_str();
    classify->add_flag("--latex", latex, "emit a LaTeX tabular");
    add_common_flags(classify, cfg);

    CLI::App* cubic = app.add_subcommand(
        "cubic-x4", "four lines on a smooth cubic via the chord-tangent group law");
    cubic->add_flag("--default", use_default, "use the worked y^2 = x^3 - 25x example");
    cubic->add_option("--a", a_text, "curve coefficient a");
    cubic->add_option("--b", b_text, "curve coefficient b");
    cubic->add_option("--p1", p1_text, "base point as x,y (not of order 2)");
    cubic->add_option("--p2", p2_text, "order-2 point as x,y");
    add_common_flags(cubic, cfg);

    CLI::App* replicate = app.add_subcommand(
        "replicate", "re-run a rank argument on a fresh random configuration");
    replicate->add_option("--l", l, "number of lines (4 or 5)")->required()
        ->check(CLI::IsMember({4, 5}));
    replicate->add_option("--d", d, "curve degree")->required()->check(CLI::Range(1, 60));
    add_common_flags(replicate, cfg);

    CLI::App* through = app.add_subcommand(
        "curve-through", "a random degree-d curve through all the points, verified");
    through->add_option("--l", l, "number of lines")->required()->check(CLI::Range(2, 40));
    through->add_option("--d", d, "curve degree")->required()->check(CLI::Range(1, 60));
    add_common_flags(through, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (hilbert->parsed()) return run_hilbert(l, t_max, cfg);
        if (check->parsed()) return run_check(d, l, line_texts, mult_texts, cfg);
        if (classify->parsed()) return run_classify(d_max, l_max, latex, cfg);
        if (cubic->parsed()) {
            if (!use_default && (p1_text.empty() || p2_text.empty()))
                throw std::invalid_argument("give --p1 and --p2, or --default");
            return run_cubic_x4(use_default, a_text, b_text, p1_text, p2_text, cfg);
        }
        if (replicate->parsed()) return run_replicate(l, d, cfg);
        if (through->parsed()) return run_curve_through(l, d, cfg);
    } catch (const CheckFailure& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
