#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "starcfg/errors.hpp"
#include "starcfg/form.hpp"

namespace starcfg {

namespace {

/// Recursive-descent parser for sums of products of integer/rational literals
/// and powers of x, y, z. '*' between factors is optional.
class FormParser {
public:
    explicit FormParser(const std::string& text) : text_(text) {}

    Form parse() {
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", pos_);
        parse_signed_term(true);
        while (true) {
            skip_ws();
            if (eof()) break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
            parse_signed_term(false);
        }
        return build();
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    /// One term: optional sign (mandatory for non-leading terms), then at
    /// least one factor.
    void parse_signed_term(bool leading) {
        skip_ws();
        int sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        } else if (!leading) {
            throw ParseError("expected '+' or '-'", pos_);
        }
        skip_ws();
        Rational coefficient = sign;
        Monomial mono{0, 0, 0};
        bool saw_factor = false;
        bool star_pending = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coefficient *= parse_number();
            } else if (c == 'x' || c == 'y' || c == 'z') {
                parse_power(mono);
            } else if (c == '*' && saw_factor && !star_pending) {
                ++pos_;
                star_pending = true;
                continue;
            } else {
                break;
            }
            saw_factor = true;
            star_pending = false;
        }
        if (!saw_factor || star_pending)
            throw ParseError("expected a number or variable", pos_);
        terms_.emplace_back(mono, coefficient);
    }

    Rational parse_number() {
        const Int numerator = parse_natural();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected a denominator after '/'", pos_);
            const std::size_t at = pos_;
            const Int denominator = parse_natural();
            if (denominator == 0) throw ParseError("zero denominator", at);
            Rational q(numerator, denominator);
            q.canonicalize();
            return q;
        }
        return Rational(numerator);
    }

    Int parse_natural() {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        return Int(digits, 10);
    }

    void parse_power(Monomial& mono) {
        const char var = peek();
        ++pos_;
        int exponent = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected an exponent after '^'", pos_);
            const std::size_t at = pos_;
            const Int e = parse_natural();
            if (e > 1000) throw ParseError("exponent too large", at);
            exponent = static_cast<int>(e.get_si());
        }
        if (var == 'x') mono.a += exponent;
        else if (var == 'y') mono.b += exponent;
        else mono.c += exponent;
    }

    Form build() const {
        int degree = -1;
        for (const auto& [mono, coefficient] : terms_) {
            if (coefficient == 0) continue;
            if (degree == -1) {
                degree = mono.degree();
            } else if (mono.degree() != degree) {
                throw DegreeError("non-homogeneous polynomial: found terms of degree " +
                                  std::to_string(degree) + " and degree " +
                                  std::to_string(mono.degree()));
            }
        }
        if (degree == -1) degree = terms_.empty() ? 0 : terms_.front().first.degree();
        Form f(degree);
        for (const auto& [mono, coefficient] : terms_) {
            if (mono.degree() != degree) continue;  // only zero-coefficient strays
            f.set_coeff(mono, f.coeff(mono) + coefficient);
        }
        return f;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace

Form parse_form(const std::string& text) { return FormParser(text).parse(); }

}  // namespace starcfg
