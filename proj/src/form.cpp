#include "starcfg/form.hpp"

#include <stdexcept>

#include "starcfg/errors.hpp"
#include "starcfg/rng.hpp"

namespace starcfg {

Form::Form(int degree) : degree_(degree), coeffs_(monomial_count(degree)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

Form::Form(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (coeffs_.size() != static_cast<std::size_t>(monomial_count(degree)))
        throw DegreeError("coefficient vector has wrong length for degree " +
                          std::to_string(degree));
}

Form Form::term(const Monomial& m, const Rational& coefficient) {
    Form f(m.degree());
    f.coeffs_[monomial_index(m)] = coefficient;
    return f;
}

bool Form::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

const Rational& Form::coeff(const Monomial& m) const {
    if (m.degree() != degree_) throw DegreeError("monomial degree does not match form degree");
    return coeffs_[monomial_index(m)];
}

void Form::set_coeff(const Monomial& m, const Rational& value) {
    if (m.degree() != degree_) throw DegreeError("monomial degree does not match form degree");
    coeffs_[monomial_index(m)] = value;
}

Rational Form::evaluate(const Point3& p) const {
    Rational total = 0;
    const auto basis = monomial_basis(degree_);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational term = coeffs_[i];
        if (basis[i].a) term *= rational_pow(p[0], basis[i].a);
        if (basis[i].b) term *= rational_pow(p[1], basis[i].b);
        if (basis[i].c) term *= rational_pow(p[2], basis[i].c);
        total += term;
    }
    return total;
}

Form Form::times_monomial(const Monomial& m) const {
    Form out(degree_ + m.degree());
    const auto basis = monomial_basis(degree_);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out.coeffs_[monomial_index(basis[i] * m)] = coeffs_[i];
    }
    return out;
}

Form& Form::operator+=(const Form& rhs) {
    if (degree_ != rhs.degree_) throw DegreeError("cannot add forms of different degrees");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Form& Form::operator-=(const Form& rhs) {
    if (degree_ != rhs.degree_) throw DegreeError("cannot subtract forms of different degrees");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Form operator*(const Form& lhs, const Form& rhs) {
    Form out(lhs.degree_ + rhs.degree_);
    const auto lbasis = monomial_basis(lhs.degree_);
    const auto rbasis = monomial_basis(rhs.degree_);
    for (std::size_t i = 0; i < lbasis.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rbasis.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[monomial_index(lbasis[i] * rbasis[j])] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

Form operator*(const Rational& scalar, const Form& f) {
    Form out(f.degree_);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out.coeffs_[i] = scalar * f.coeffs_[i];
    return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string s;
    const auto var = [&s](char name, int e) {
        if (e == 0) return;
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    var('x', m.a);
    var('y', m.b);
    var('z', m.c);
    return s;
}

}  // namespace

std::string format_form(const Form& f) {
    std::string out;
    const auto basis = monomial_basis(f.degree());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Rational& c = f.coeff_at(static_cast<int>(i));
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        const std::string mono = monomial_text(basis[i]);
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag);
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

Form random_form(int degree, std::uint64_t seed, long bound) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    SeededRng rng(seed);
    std::vector<Rational> coeffs(monomial_count(degree));
    for (auto& c : coeffs) c = rng.uniform(-bound, bound);
    return Form(degree, std::move(coeffs));
}

Form random_nonzero_form(int degree, std::uint64_t seed, long bound) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Form f = random_form(degree, derive_seed(seed, attempt), bound);
        if (!f.is_zero()) return f;
    }
}

Form product_excluding(const std::vector<Form>& lines, const std::set<int>& skip) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].degree() != 1 || lines[i].is_zero())
            throw DegreeError("entry " + std::to_string(i + 1) + " is not a nonzero linear form");
    }
    Form out = Form::term(Monomial{0, 0, 0}, 1);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (skip.contains(static_cast<int>(i))) continue;
        out = out * lines[i];
    }
    return out;
}

}  // namespace starcfg
