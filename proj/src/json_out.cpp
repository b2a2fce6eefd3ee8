#include "starcfg/json_out.hpp"

namespace starcfg {

namespace {

std::string pair_key(const std::pair<int, int>& p) {
    return std::to_string(p.first + 1) + "," + std::to_string(p.second + 1);
}

Json forms_json(const std::vector<Form>& forms) {
    Json arr = Json::array();
    for (const Form& f : forms) arr.push_back(to_json(f));
    return arr;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Form& f) { return format_form(f); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ProjPoint& p) {
    return Json::array({to_json(p.coords()[0]), to_json(p.coords()[1]), to_json(p.coords()[2])});
}

Json to_json(const StarConfig& x) {
    Json out;
    out["l"] = x.line_count();
    Json lines = Json::array();
    for (const Line& line : x.lines()) lines.push_back(to_json(line.form()));
    out["lines"] = std::move(lines);
    Json points = Json::object();
    for (const auto& [pair, p] : x.points()) points[pair_key(pair)] = to_json(p);
    out["points"] = std::move(points);
    return out;
}

Json to_json(const DominanceVerdict& v) {
    Json out;
    out["d"] = v.d;
    out["l"] = v.l;
    out["certified"] = v.certified;
    out["dimension"] = v.dim;
    out["full_dimension"] = v.dim_sd;
    out["trials"] = v.trials_run;
    if (v.witness) {
        out["witness"] = Json{{"lines", forms_json(v.witness->lines)},
                              {"multipliers", forms_json(v.witness->mults)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const Verdict& v) {
    Json out;
    out["d"] = v.d;
    out["l"] = v.l;
    out["contains"] = v.contains;
    out["reason"] = reason_string(v.reason);
    return out;
}

Json to_json(const DimensionCount& dc) {
    Json out;
    out["incidence_bound"] = dc.sigma_bound;
    out["target"] = dc.target;
    out["margin"] = dc.margin();
    out["dominant_possible"] = dc.dominant_possible;
    return out;
}

Json to_json(const CrossValidation& cv) {
    Json out;
    out["verdict"] = to_json(cv.verdict);
    out["dominance"] = cv.dominance ? to_json(*cv.dominance) : Json(nullptr);
    out["group_law_checked"] = cv.group_law_checked;
    return out;
}

Json to_json(const EvalMatrix& em) {
    Json out;
    Json rows = Json::array();
    for (const auto& pair : em.row_labels) rows.push_back(pair_key(pair));
    out["rows"] = std::move(rows);
    out["columns"] = em.col_labels;
    out["entries"] = to_json(em.entries);
    return out;
}

Json to_json(const ReplicationReport& report) {
    Json out;
    out["d"] = report.d;
    out["l"] = report.l;
    out["seed"] = report.seed;
    out["lines"] = forms_json(report.system.lines);
    out["multipliers"] = forms_json(report.system.mults);
    out["q"] = forms_json(report.system.q);
    out["q_matrix"] = to_json(report.q_matrix);
    out["q_rank"] = report.q_rank;
    out["final_matrix"] = to_json(report.final_matrix);
    out["final_rank"] = report.final_rank;
    Json checks = Json::array();
    for (const PatternCheck& check : report.checks)
        checks.push_back(Json{{"name", check.name}, {"pass", check.pass},
                              {"detail", check.detail}});
    out["checks"] = std::move(checks);
    out["note"] = report.note;
    return out;
}

Json to_json(const WeierstrassCurve& c) {
    Json out;
    out["a"] = to_json(c.a);
    out["b"] = to_json(c.b);
    return out;
}

Json to_json(const CurvePoint& p) {
    Json out;
    out["infinity"] = p.is_infinity();
    if (!p.is_infinity()) {
        out["x"] = to_json(p.x());
        out["y"] = to_json(p.y());
    }
    return out;
}

Json to_json(const X4OnCubic& x4) {
    Json out;
    out["curve"] = to_json(x4.curve);
    Json points;
    points["p0"] = to_json(x4.p0);
    points["p1"] = to_json(x4.p1);
    points["p2"] = to_json(x4.p2);
    points["p1+p2"] = to_json(x4.p1_plus_p2);
    points["p3"] = to_json(x4.p3);
    points["p4"] = to_json(x4.p4);
    out["points"] = std::move(points);
    out["star"] = to_json(x4.star);
    Json names;
    for (const auto& [pair, name] : x4.assignment()) names[pair_key(pair)] = name;
    out["assignment"] = std::move(names);
    return out;
}

}  // namespace starcfg
