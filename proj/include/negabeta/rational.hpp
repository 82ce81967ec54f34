#ifndef NEGABETA_RATIONAL_HPP
#define NEGABETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "negabeta/errors.hpp"

namespace negabeta {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class constructors do not canonicalize; these helpers do.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw OutOfDomain("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "p", "p/q" and plain decimals like "-1.25" (kept exact).
Rational parse_rational(const std::string& text);

// floor and ceil as exact integers.
Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

// Decimal rendering truncated toward zero to `digits` fractional places.
// Deterministic, never rounds up, suitable for stable CLI output.
std::string decimal_string(const Rational& q, int digits);

inline int sign_of(const Rational& q) { return sgn(q); }

// Lexicographic order on coefficient vectors, used as a map key.
struct RationalVectorLess {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        const size_t n = a.size() < b.size() ? a.size() : b.size();
        for (size_t i = 0; i < n; ++i) {
            const int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    }
};

} // namespace negabeta

#endif
