#include "negabeta/rational.hpp"

#include <cctype>

namespace negabeta {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw OutOfDomain("empty rational literal");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw OutOfDomain("malformed rational '" + text + "'");
        try {
            return make_rational(Integer(num), Integer(den));
        } catch (const std::invalid_argument&) {
            throw OutOfDomain("malformed rational '" + text + "'");
        }
    }

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const size_t frac_places = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw OutOfDomain("malformed decimal '" + text + "'");
        Integer den(1);
        for (size_t i = 0; i < frac_places; ++i) den *= 10;
        try {
            return make_rational(Integer(digits), den);
        } catch (const std::invalid_argument&) {
            throw OutOfDomain("malformed decimal '" + text + "'");
        }
    }

    try {
        return Rational(Integer(s));
    } catch (const std::invalid_argument&) {
        throw OutOfDomain("malformed integer '" + text + "'");
    }
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Integer ceil_rational(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

std::string decimal_string(const Rational& q, int digits) {
    const bool neg = sgn(q) < 0;
    Rational a = neg ? Rational(-q) : q;
    Integer scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    // truncate |q| * 10^digits toward zero
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), Integer(a.get_num() * scale).get_mpz_t(), a.get_den().get_mpz_t());
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string f = frac.get_str();
    if (digits > 0) f = std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    std::string out = whole.get_str();
    if (digits > 0) out += "." + f;
    if (neg && (whole != 0 || frac != 0)) out = "-" + out;
    return out;
}

} // namespace negabeta
