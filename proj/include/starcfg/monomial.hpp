#pragma once

#include <vector>

namespace starcfg {

/// n*(n-1)/2, and 0 for n < 2.
long choose2(long n);

/// Number of degree-d monomials in x,y,z: C(d+2,2).
int monomial_count(int d);

/// x^a y^b z^c.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& rhs) const {
        return Monomial{a + rhs.a, b + rhs.b, c + rhs.c};
    }
};

/// Graded lexicographic order with x > y > z: degree decides first, then the
/// exponent triples compare lexicographically.
bool grlex_less(const Monomial& lhs, const Monomial& rhs);

/// All degree-d monomials in strictly decreasing order: x^d first, z^d last.
std::vector<Monomial> monomial_basis(int d);

/// Position of m within monomial_basis(m.degree()).
int monomial_index(const Monomial& m);

}  // namespace starcfg
