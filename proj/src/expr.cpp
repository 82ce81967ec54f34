#include "negabeta/expr.hpp"

#include <cctype>
#include <cstddef>
#include <string>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

bool digit_at(const std::string& s, std::size_t i) {
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0;
}

// Recursive-descent evaluator; `pos` always sits on the next unread byte.
struct Parser {
    const std::string& text;
    const AlgebraicRealPtr& field;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse_value: " + what + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
    }

    FieldElement expr() {
        FieldElement acc = term();
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    FieldElement term() {
        FieldElement acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    FieldElement factor() {
        bool negate = false;
        for (;;) {
            if (eat('-')) {
                negate = !negate;
            } else if (eat('+')) {
                // sign-neutral
            } else {
                break;
            }
        }
        FieldElement p = primary();
        return negate ? -p : p;
    }

    FieldElement primary() {
        skip_ws();
        if (pos >= text.size()) fail("expected a value");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            FieldElement inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'b') {
            ++pos;
            return FieldElement::generator(field);
        }
        if (digit_at(text, pos)) return number();
        fail(std::string("unexpected character '") + c + "'");
    }

    FieldElement number() {
        std::size_t start = pos;
        while (digit_at(text, pos)) ++pos;
        std::string whole = text.substr(start, pos - start);
        std::string frac;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::size_t fstart = pos;
            while (digit_at(text, pos)) ++pos;
            frac = text.substr(fstart, pos - fstart);
            if (frac.empty()) fail("expected digits after '.'");
        }
        Integer num(whole + frac, 10);
        Integer den(1);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return FieldElement::from_rational(field, q);
    }
};

// One basis term "c*b^i" with the conventional elisions for c = +-1 and
// for the exponents 0 and 1. `c` is nonzero and positive when `magnitude`.
std::string basis_term(const Rational& c, std::size_t i, bool magnitude) {
    Rational a = magnitude ? Rational(abs(c)) : c;
    std::string coeff = a.get_str();
    if (i == 0) return coeff;
    std::string power = i == 1 ? "b" : "b^" + std::to_string(i);
    if (a == 1) return power;
    if (a == -1) return "-" + power;
    return coeff + "*" + power;
}

} // namespace

FieldElement parse_value(const std::string& text, const AlgebraicRealPtr& field) {
    Parser p{text, field};
    FieldElement value = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return value;
}

std::string coefficient_string(const FieldElement& x) {
    const std::vector<Rational>& c = x.coeffs();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (out.empty()) {
            out = basis_term(c[i], i, false);
        } else {
            out += sgn(c[i]) > 0 ? " + " : " - ";
            out += basis_term(c[i], i, true);
        }
    }
    return out.empty() ? "0" : out;
}

std::string decimal_string(const FieldElement& x, int digits) {
    if (digits < 0) throw ConstraintViolation("decimal_string: digits must be nonnegative");
    Integer scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    FieldElement scaled = x * Rational(scale);
    // Round ties away from zero on the scaled integer grid.
    Integer units;
    if (sign(scaled) >= 0) {
        units = floor_int(scaled + Rational(1, 2));
    } else {
        units = -floor_int(-scaled + Rational(1, 2));
    }
    bool negative = units < 0;
    Integer magnitude = abs(units);
    Integer whole = magnitude / scale;
    Integer frac = magnitude % scale;
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

} // namespace negabeta
