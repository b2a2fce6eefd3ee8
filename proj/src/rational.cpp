#include "starcfg/rational.hpp"

#include <cctype>

#include "starcfg/errors.hpp"

namespace starcfg {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 0);
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("expected digits in rational literal", i);
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("unexpected character in rational literal", i);
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size())
            throw ParseError("expected denominator digits", i);
    }
    Rational r(text, 10);
    if (r.get_den() == 0) throw ParseError("zero denominator", text.find('/') + 1);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    return r;  // base was canonical, so num/den stay coprime
}

}  // namespace starcfg
