#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "starcfg/monomial.hpp"
#include "starcfg/rational.hpp"

namespace starcfg {

/// A homogeneous polynomial in x,y,z of a fixed degree d, stored as the dense
/// vector of its C(d+2,2) rational coefficients in monomial_basis(d) order.
/// The zero form exists at every degree. Values are immutable in practice:
/// every operation returns a fresh Form.
class Form {
public:
    /// The zero form of the given degree.
    explicit Form(int degree);
    Form(int degree, std::vector<Rational> coeffs);

    static Form term(const Monomial& m, const Rational& coefficient);

    int degree() const { return degree_; }
    bool is_zero() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(const Monomial& m) const;
    const Rational& coeff_at(int index) const { return coeffs_[index]; }
    void set_coeff(const Monomial& m, const Rational& value);

    /// Exact value at the given affine representative.
    Rational evaluate(const Point3& p) const;

    /// Coefficient-wise product shift; cheaper than a general product.
    Form times_monomial(const Monomial& m) const;

    Form& operator+=(const Form& rhs);
    Form& operator-=(const Form& rhs);
    friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
    friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
    friend Form operator*(const Form& lhs, const Form& rhs);
    friend Form operator*(const Rational& scalar, const Form& f);
    friend bool operator==(const Form&, const Form&) = default;

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

/// Canonical text: terms in monomial order, e.g. "x^2 + 2xy - 3/4z^2".
/// parse_form(format_form(f)) == f.
std::string format_form(const Form& f);

/// Parses the polynomial grammar: integer or p/q literals, variables x,y,z,
/// ^ for powers, * or juxtaposition for products, + and -. Rejects
/// non-homogeneous input with a DegreeError naming the two degrees found.
Form parse_form(const std::string& text);

/// Deterministic random form: integer coefficients uniform in [-bound, bound].
Form random_form(int degree, std::uint64_t seed, long bound = 100);

/// As random_form, but resamples (derived seeds) until nonzero.
Form random_nonzero_form(int degree, std::uint64_t seed, long bound = 100);

/// Product of all lines[j] with j not in skip (0-based); the empty product is
/// the constant 1. Every entry must be a nonzero linear form.
Form product_excluding(const std::vector<Form>& lines, const std::set<int>& skip);

}  // namespace starcfg
