#ifndef NEGABETA_ALGEBRAIC_HPP
#define NEGABETA_ALGEBRAIC_HPP

#include <memory>
#include <vector>

#include "negabeta/rational.hpp"

namespace negabeta {

// A real algebraic number, represented by a monic integer polynomial together
// with a rational interval that isolates one of its real roots.
//
// Construction verifies: monic, square-free (gcd with the derivative is
// constant), and a sign change across [lo, hi] with neither endpoint a root.
// Irreducibility is trusted input; a reducible polynomial can make sign
// refinement diverge, which the refinement budget turns into IntegrityError
// instead of a hang.
//
// Values are immutable. Refinement returns a new value, so sharing one
// AlgebraicReal between threads is safe.
class AlgebraicReal {
public:
    AlgebraicReal(std::vector<Integer> minpoly, Rational lo, Rational hi);

    int degree() const { return static_cast<int>(poly_.size()) - 1; }
    const std::vector<Integer>& minpoly() const { return poly_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    // Copy with isolating interval bisected down to the requested width.
    AlgebraicReal refined(const Rational& width) const;

private:
    std::vector<Integer> poly_; // c0, ..., cd with cd = 1
    Rational lo_, hi_;
};

using AlgebraicRealPtr = std::shared_ptr<const AlgebraicReal>;

AlgebraicRealPtr make_algebraic(std::vector<Integer> minpoly, Rational lo, Rational hi);

// Element of Q(theta) for a shared AlgebraicReal theta, stored as a rational
// coefficient vector of length degree(theta) over the power basis
// 1, theta, ..., theta^{d-1}. All arithmetic is exact; products are reduced
// modulo the minimal polynomial.
//
// Elements may only be combined when their bases have identical minimal
// polynomials. The isolating interval is not part of element identity:
// construction discipline (one shared base object per computation) designates
// the root.
class FieldElement {
public:
    FieldElement(AlgebraicRealPtr base, std::vector<Rational> coeffs);

    static FieldElement from_rational(const AlgebraicRealPtr& base, const Rational& q);
    static FieldElement from_rational(const AlgebraicRealPtr& base, long q);
    // The root theta itself.
    static FieldElement generator(const AlgebraicRealPtr& base);

    const AlgebraicRealPtr& base() const { return base_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // OutOfDomain on zero divisor
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);

    FieldElement operator+(const Rational& q) const;
    FieldElement operator-(const Rational& q) const;
    FieldElement operator*(const Rational& q) const;
    FieldElement operator/(const Rational& q) const;

    // Exact structural equality (same ground field, equal coefficients).
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    AlgebraicRealPtr base_;
    std::vector<Rational> c_;
};

// Exact sign decision by interval refinement; terminates for any nonzero
// element of a field with irreducible minimal polynomial.
int sign(const FieldElement& x);

// Three-way exact comparison.
int compare(const FieldElement& x, const FieldElement& y);

inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return compare(a, b) <= 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return compare(a, b) > 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return compare(a, b) >= 0; }

// Strict weak ordering for ordered containers of exact values.
struct FieldElementLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return compare(a, b) < 0; }
};

Integer floor_int(const FieldElement& x);
Integer ceil_int(const FieldElement& x);

// Rational q with |q - x| < eps (eps > 0).
Rational approximate(const FieldElement& x, const Rational& eps);

// Integer power, negative exponents via the field inverse.
FieldElement pow(const FieldElement& x, long e);

// Image of x under the nontrivial field automorphism. Degree 2 only.
FieldElement galois_conjugate(const FieldElement& x);

// x * conjugate(x) as an exact rational. Degree 2 only.
Rational field_norm(const FieldElement& x);

// Dimension of the Q-span of the given values (all over one ground field).
int rational_rank(const std::vector<FieldElement>& values);

enum class Family { Plus, Minus };
enum class Mode { Pos, Neg };

// Quadratic Pisot base: the root beta > 1 of
//   Plus:  x^2 - m x - n  with m >= n >= 1       (beta in (m, m+1))
//   Minus: x^2 - m x + n  with m - 2 >= n >= 1   (beta in (m-1, m))
// In both families the conjugate beta' = m - beta satisfies |beta'| < 1,
// which the constructor re-verifies exactly, and beta is a unit iff n = 1.
class PisotBase {
public:
    PisotBase(Family family, long m, long n);

    Family family() const { return family_; }
    long m() const { return m_; }
    long n() const { return n_; }
    bool is_unit() const { return n_ == 1; }

    long floor_beta() const { return family_ == Family::Plus ? m_ : m_ - 1; }
    long ceil_beta() const { return floor_beta() + 1; }

    const AlgebraicRealPtr& field() const { return field_; }
    FieldElement beta() const { return FieldElement::generator(field_); }
    FieldElement rational(const Rational& q) const { return FieldElement::from_rational(field_, q); }
    FieldElement rational(long q) const { return FieldElement::from_rational(field_, q); }
    // a + b*beta
    FieldElement element(const Rational& a, const Rational& b) const;
    // Left endpoint -beta/(beta+1) of the negative-base domain.
    FieldElement ell() const;

private:
    Family family_;
    long m_, n_;
    AlgebraicRealPtr field_;
};

PisotBase make_base(Family family, long m, long n);

} // namespace negabeta

#endif
