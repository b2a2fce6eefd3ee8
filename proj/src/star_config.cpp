#include "starcfg/star_config.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcfg/errors.hpp"
#include "starcfg/matrix.hpp"
#include "starcfg/rng.hpp"

namespace starcfg {

namespace {

Point3 cross(const Point3& u, const Point3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Point3 line_coeffs(const Line& line) {
    const Form& f = line.form();
    return {f.coeff_at(0), f.coeff_at(1), f.coeff_at(2)};
}

}  // namespace

ProjPoint::ProjPoint(const Rational& x, const Rational& y, const Rational& z)
    : ProjPoint(Point3{x, y, z}) {}

ProjPoint::ProjPoint(const Point3& coords) : coords_(coords) {
    for (auto& c : coords_) {
        if (c == 0) continue;
        const Rational scale = 1 / c;
        for (auto& d : coords_) d *= scale;
        return;
    }
    throw std::invalid_argument("[0 : 0 : 0] is not a projective point");
}

std::string ProjPoint::str() const {
    return "[" + to_string(coords_[0]) + " : " + to_string(coords_[1]) + " : " +
           to_string(coords_[2]) + "]";
}

Rational evaluate(const Form& f, const ProjPoint& p) { return f.evaluate(p.coords()); }

Line::Line(const Form& f) : form_(f) {
    if (f.degree() != 1) throw DegreeError("a line needs a degree-1 form");
    for (int i = 0; i < 3; ++i) {
        if (form_.coeff_at(i) == 0) continue;
        form_ = (1 / form_.coeff_at(i)) * form_;
        return;
    }
    throw DegreeError("a line needs a nonzero form");
}

Line Line::parse(const std::string& text) { return Line(parse_form(text)); }

ProjPoint intersect_lines(const Line& a, const Line& b) {
    const Point3 p = cross(line_coeffs(a), line_coeffs(b));
    if (p[0] == 0 && p[1] == 0 && p[2] == 0)
        throw std::invalid_argument("coincident lines have no single intersection point");
    return ProjPoint(p);
}

Line line_through(const ProjPoint& p, const ProjPoint& q) {
    const Point3 c = cross(p.coords(), q.coords());
    if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw std::invalid_argument("no unique line through equal points");
    return Line(Form(1, {c[0], c[1], c[2]}));
}

StarConfig StarConfig::build(std::vector<Line> lines) {
    const int l = static_cast<int>(lines.size());
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (lines[i] == lines[j]) throw DuplicateLineError(i, j);
    StarConfig x;
    x.lines_ = std::move(lines);
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            const ProjPoint p = intersect_lines(x.lines_[i], x.lines_[j]);
            for (int k = j + 1; k < l; ++k)
                if (evaluate(x.lines_[k].form(), p) == 0) throw ConcurrentLinesError(i, j, k);
            x.points_.emplace_back(std::make_pair(i, j), p);
        }
    }
    return x;
}

std::vector<Form> StarConfig::line_forms() const {
    std::vector<Form> forms;
    forms.reserve(lines_.size());
    for (const Line& line : lines_) forms.push_back(line.form());
    return forms;
}

const ProjPoint& StarConfig::point(int i, int j) const {
    const int l = line_count();
    if (i < 0 || j <= i || j >= l) throw std::out_of_range("bad line pair");
    // Pairs are stored in lexicographic order: (0,1),(0,2),...,(i,j) sits at
    // the offset below.
    const int index = i * l - i * (i + 1) / 2 + (j - i - 1);
    return points_[index].second;
}

StarConfig random_star(int l, std::uint64_t seed, long bound) {
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    for (int attempt = 0; attempt < 100; ++attempt) {
        SeededRng rng(derive_seed(seed, attempt));
        std::vector<Line> lines;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            std::vector<Rational> coeffs(3);
            for (auto& c : coeffs) c = rng.uniform(-bound, bound);
            if (coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0) ok = false;
            else lines.emplace_back(Form(1, std::move(coeffs)));
        }
        if (!ok) continue;
        try {
            return StarConfig::build(std::move(lines));
        } catch (const DuplicateLineError&) {
        } catch (const ConcurrentLinesError&) {
        }
    }
    throw RetryCapError("no valid arrangement of " + std::to_string(l) + " lines in 100 attempts");
}

std::vector<Form> ideal_generators(const StarConfig& x) {
    const std::vector<Form> forms = x.line_forms();
    std::vector<Form> gens;
    gens.reserve(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i)
        gens.push_back(product_excluding(forms, {static_cast<int>(i)}));
    return gens;
}

long hilbert_function_formula(int l, int t) {
    if (l < 2) throw std::invalid_argument("need at least 2 lines");
    if (t < 0) return 0;
    return std::min<long>(monomial_count(t), choose2(l));
}

long hilbert_function_computed(const StarConfig& x, int t) {
    if (t < 0) return 0;
    const int dim_st = monomial_count(t);
    const int gen_degree = x.line_count() - 1;
    if (t < gen_degree) return dim_st;
    std::vector<Form> multiples;
    for (const Form& g : ideal_generators(x))
        for (const Monomial& m : monomial_basis(t - gen_degree))
            multiples.push_back(g.times_monomial(m));
    return dim_st - span_dimension(multiples, t);
}

long vanishing_forms_dimension(const StarConfig& x, int t) {
    if (t < 0) return 0;
    const auto basis = monomial_basis(t);
    const auto& pts = x.points();
    Matrix eval(static_cast<int>(pts.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            eval.at(static_cast<int>(r), static_cast<int>(c)) =
                Form::term(basis[c], 1).evaluate(pts[r].second.coords());
    return monomial_count(t) - rank(eval);
}

bool contains_star(const Form& f, const StarConfig& x) {
    if (f.degree() < 1) throw DegreeError("need a curve of degree at least 1");
    for (const auto& [pair, p] : x.points())
        if (evaluate(f, p) != 0) return false;
    return true;
}

Form random_curve_through(const StarConfig& x, int d, std::uint64_t seed, long bound) {
    const int l = x.line_count();
    if (d < l - 1)
        throw DegreeError("no degree-" + std::to_string(d) + " curve contains all points: need degree >= " +
                          std::to_string(l - 1));
    const auto gens = ideal_generators(x);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Form curve(d);
        for (int i = 0; i < l; ++i)
            curve += random_form(d - l + 1, derive_seed(seed, attempt * l + i), bound) * gens[i];
        if (!curve.is_zero()) return curve;
    }
    throw RetryCapError("random multipliers kept producing the zero curve");
}

}  // namespace starcfg
