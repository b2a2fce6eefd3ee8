#include "starcfg/monomial.hpp"

#include <stdexcept>

namespace starcfg {

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

int monomial_count(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    return (d + 2) * (d + 1) / 2;
}

bool grlex_less(const Monomial& lhs, const Monomial& rhs) {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    return lhs.c < rhs.c;
}

std::vector<Monomial> monomial_basis(int d) {
    std::vector<Monomial> basis;
    basis.reserve(monomial_count(d));
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) basis.push_back(Monomial{a, b, d - a - b});
    return basis;
}

int monomial_index(const Monomial& m) {
    const int d = m.degree();
    const int skipped = d - m.a;  // monomials with a larger x-exponent
    return skipped * (skipped + 1) / 2 + (d - m.a - m.b);
}

}  // namespace starcfg
