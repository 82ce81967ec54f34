#include "negabeta/algebraic.hpp"

#include <algorithm>
#include <utility>

namespace negabeta {

namespace {

// ---- dense polynomial helpers over Rational, coefficient order c0..cd ----

int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

std::vector<Rational> to_rational_poly(const std::vector<Integer>& p) {
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

Rational eval_poly(const std::vector<Integer>& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return acc;
}

// Remainder of a by b over Q, b nonzero.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    const int db = poly_degree(b);
    const Rational lead = b[static_cast<size_t>(db)];
    int da = poly_degree(a);
    while (da >= db && da >= 0) {
        const Rational f = a[static_cast<size_t>(da)] / lead;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
        a[static_cast<size_t>(da)] = 0;
        da = poly_degree(a);
    }
    return a;
}

bool is_squarefree(const std::vector<Integer>& p) {
    std::vector<Rational> a = to_rational_poly(p);
    std::vector<Rational> b;
    for (size_t i = 1; i < p.size(); ++i) b.emplace_back(Rational(p[i]) * static_cast<long>(i));
    // Euclid: gcd(p, p') must be a nonzero constant.
    while (poly_degree(b) > 0) {
        std::vector<Rational> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_degree(b) == 0 || poly_degree(a) == 0;
}

// ---- rational interval arithmetic, used for sign decisions ----

struct IV {
    Rational lo, hi;
};

IV iv_mul(const IV& a, const IV& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    IV out{p1, p1};
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < out.lo) out.lo = *p;
        if (*p > out.hi) out.hi = *p;
    }
    return out;
}

IV iv_eval(const std::vector<Rational>& c, const IV& x) {
    IV acc{c.back(), c.back()};
    for (size_t i = c.size() - 1; i-- > 0;) {
        acc = iv_mul(acc, x);
        acc.lo += c[i];
        acc.hi += c[i];
    }
    return acc;
}

// One bisection step keeping the sign change. The midpoint is nudged when it
// happens to be a root of p (possible only when the trusted irreducibility
// contract is broken, or the root bracketed is rational).
void bisect_once(const std::vector<Integer>& p, Rational& lo, Rational& hi, int slo) {
    const long deg = static_cast<long>(p.size()) - 1;
    for (long k = 1; k <= deg + 2; ++k) {
        Rational mid = lo + (hi - lo) * make_rational(k, deg + 3);
        const int sm = sgn(eval_poly(p, mid));
        if (sm == 0) continue;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
        return;
    }
    throw IntegrityError("bisection found only roots; isolating interval is invalid");
}

constexpr int kRefineBudget = 4096;

} // namespace

// ---- AlgebraicReal ----

AlgebraicReal::AlgebraicReal(std::vector<Integer> minpoly, Rational lo, Rational hi)
    : poly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_.size() < 2) throw ConstraintViolation("minimal polynomial must have degree >= 1");
    if (poly_.back() != 1) throw ConstraintViolation("minimal polynomial must be monic");
    if (!(lo_ < hi_)) throw ConstraintViolation("isolating interval is empty");
    const int slo = sgn(eval_poly(poly_, lo_));
    const int shi = sgn(eval_poly(poly_, hi_));
    if (slo == 0 || shi == 0)
        throw ConstraintViolation("isolating interval endpoint is a root");
    if (slo == shi) throw ConstraintViolation("no sign change on the isolating interval");
    if (!is_squarefree(poly_)) throw ConstraintViolation("minimal polynomial is not square-free");
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
    AlgebraicReal out = *this;
    const int slo = sgn(eval_poly(poly_, lo_));
    int budget = kRefineBudget;
    while (out.hi_ - out.lo_ > width) {
        if (--budget < 0) throw IntegrityError("interval refinement budget exhausted");
        bisect_once(out.poly_, out.lo_, out.hi_, slo);
    }
    return out;
}

AlgebraicRealPtr make_algebraic(std::vector<Integer> minpoly, Rational lo, Rational hi) {
    // Pre-refining once here makes later sign decisions cheap: most values
    // compared downstream are separated far more widely than 2^-64.
    AlgebraicReal raw(std::move(minpoly), std::move(lo), std::move(hi));
    Rational width = make_rational(Integer(1), Integer(1) << 64);
    return std::make_shared<const AlgebraicReal>(raw.refined(width));
}

// ---- FieldElement ----

FieldElement::FieldElement(AlgebraicRealPtr base, std::vector<Rational> coeffs)
    : base_(std::move(base)), c_(std::move(coeffs)) {
    if (!base_) throw ConstraintViolation("field element needs a ground field");
    if (c_.size() != static_cast<size_t>(base_->degree()))
        throw DegreeMismatch("coefficient vector length must equal the field degree");
}

FieldElement FieldElement::from_rational(const AlgebraicRealPtr& base, const Rational& q) {
    std::vector<Rational> c(static_cast<size_t>(base->degree()), Rational(0));
    c[0] = q;
    return FieldElement(base, std::move(c));
}

FieldElement FieldElement::from_rational(const AlgebraicRealPtr& base, long q) {
    return from_rational(base, Rational(q));
}

FieldElement FieldElement::generator(const AlgebraicRealPtr& base) {
    if (base->degree() < 2)
        throw DegreeMismatch("generator of a degree-1 field is rational; use from_rational");
    std::vector<Rational> c(static_cast<size_t>(base->degree()), Rational(0));
    c[1] = 1;
    return FieldElement(base, std::move(c));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw OutOfDomain("element is irrational");
    return c_[0];
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.base() == b.base()) return;
    if (a.base()->minpoly() != b.base()->minpoly())
        throw DegreeMismatch("elements of different ground fields");
}

// Fold coefficients of x^d and above back down using the monic minpoly.
void reduce_mod_minpoly(std::vector<Rational>& r, const std::vector<Integer>& p) {
    const size_t d = p.size() - 1;
    for (size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        const Rational f = r[i];
        for (size_t j = 0; j < d; ++j) r[i - d + j] -= f * Rational(p[j]);
        r[i] = 0;
    }
    r.resize(d);
}

} // namespace

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& q : c) q = -q;
    return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    const size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_mod_minpoly(prod, base_->minpoly());
    return FieldElement(base_, std::move(prod));
}

namespace {

// Extended Euclid in Q[x]: inverse of a modulo the (irreducible) minpoly.
std::vector<Rational> field_inverse(const std::vector<Rational>& a, const std::vector<Integer>& pz) {
    std::vector<Rational> r0 = to_rational_poly(pz), r1 = a;
    std::vector<Rational> u0(pz.size(), Rational(0)), u1(pz.size(), Rational(0));
    u1[0] = 1;
    while (poly_degree(r1) > 0) {
        // one full division step: r0 = q*r1 + r2, u2 = u0 - q*u1
        const int d1 = poly_degree(r1);
        const Rational lead = r1[static_cast<size_t>(d1)];
        std::vector<Rational> r2 = r0, u2 = u0;
        int d2 = poly_degree(r2);
        while (d2 >= d1 && d2 >= 0) {
            const Rational f = r2[static_cast<size_t>(d2)] / lead;
            for (int i = 0; i <= d1; ++i)
                r2[static_cast<size_t>(d2 - d1 + i)] -= f * r1[static_cast<size_t>(i)];
            r2[static_cast<size_t>(d2)] = 0;
            for (size_t i = 0; i + static_cast<size_t>(d2 - d1) < u2.size() && i < u1.size(); ++i)
                if (u1[i] != 0) u2[i + static_cast<size_t>(d2 - d1)] -= f * u1[i];
            d2 = poly_degree(r2);
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(r2);
        u1 = std::move(u2);
    }
    if (poly_degree(r1) == 0) {
        r0 = std::move(r1);
        u0 = std::move(u1);
    }
    if (poly_degree(r0) != 0)
        throw IntegrityError("gcd with minpoly is non-constant; minpoly is reducible");
    const Rational g = r0[0];
    for (auto& q : u0) q /= g;
    reduce_mod_minpoly(u0, pz);
    return u0;
}

} // namespace

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) throw OutOfDomain("division by zero field element");
    if (o.is_rational()) return *this / o.c_[0];
    FieldElement inv(base_, field_inverse(o.c_, base_->minpoly()));
    return *this * inv;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    *this = *this + o;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    *this = *this - o;
    return *this;
}

FieldElement FieldElement::operator+(const Rational& q) const {
    std::vector<Rational> c(c_);
    c[0] += q;
    return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator-(const Rational& q) const { return *this + Rational(-q); }

FieldElement FieldElement::operator*(const Rational& q) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= q;
    return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator/(const Rational& q) const {
    if (q == 0) throw OutOfDomain("division by zero");
    std::vector<Rational> c(c_);
    for (auto& x : c) x /= q;
    return FieldElement(base_, std::move(c));
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(*this, o);
    return c_ == o.c_;
}

int sign(const FieldElement& x) {
    const auto& c = x.coeffs();
    if (x.is_rational()) return sgn(c[0]);
    IV iv{x.base()->lower(), x.base()->upper()};
    const auto& p = x.base()->minpoly();
    const int slo = sgn(eval_poly(p, iv.lo));
    for (int step = 0; step < kRefineBudget; ++step) {
        const IV v = iv_eval(c, iv);
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
        bisect_once(p, iv.lo, iv.hi, slo);
    }
    throw IntegrityError("sign refinement budget exhausted; is the minpoly irreducible?");
}

int compare(const FieldElement& x, const FieldElement& y) {
    if (x.coeffs() == y.coeffs()) {
        require_same_field(x, y);
        return 0;
    }
    return sign(x - y);
}

Integer floor_int(const FieldElement& x) {
    if (x.is_rational()) return floor_rational(x.rational_value());
    const Rational q = approximate(x, make_rational(1, 4));
    Integer k = floor_rational(q);
    // |q - x| < 1/4, so k is off by at most one.
    while (compare(x, FieldElement::from_rational(x.base(), Rational(k))) < 0) --k;
    while (compare(x, FieldElement::from_rational(x.base(), Rational(k + 1))) >= 0) ++k;
    return k;
}

Integer ceil_int(const FieldElement& x) {
    return -floor_int(-x);
}

Rational approximate(const FieldElement& x, const Rational& eps) {
    if (!(eps > 0)) throw OutOfDomain("approximation tolerance must be positive");
    if (x.is_rational()) return x.rational_value();
    IV iv{x.base()->lower(), x.base()->upper()};
    const auto& p = x.base()->minpoly();
    const int slo = sgn(eval_poly(p, iv.lo));
    for (int step = 0; step < kRefineBudget; ++step) {
        const IV v = iv_eval(x.coeffs(), iv);
        if (v.hi - v.lo < eps) return (v.lo + v.hi) / 2;
        bisect_once(p, iv.lo, iv.hi, slo);
    }
    throw IntegrityError("approximation refinement budget exhausted");
}

FieldElement pow(const FieldElement& x, long e) {
    FieldElement acc = FieldElement::from_rational(x.base(), 1);
    if (e == 0) return acc;
    const bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    FieldElement sq = x;
    while (k > 0) {
        if (k & 1UL) acc = acc * sq;
        k >>= 1UL;
        if (k > 0) sq = sq * sq;
    }
    if (invert) return FieldElement::from_rational(x.base(), 1) / acc;
    return acc;
}

FieldElement galois_conjugate(const FieldElement& x) {
    if (x.base()->degree() != 2)
        throw DegreeMismatch("galois conjugate implemented for quadratic fields only");
    // minpoly x^2 + c1 x + c0: the two roots sum to -c1, so theta' = -c1 - theta.
    const Rational c1(x.base()->minpoly()[1]);
    const Rational a = x.coeffs()[0], b = x.coeffs()[1];
    return FieldElement(x.base(), {a - c1 * b, -b});
}

Rational field_norm(const FieldElement& x) {
    const FieldElement prod = x * galois_conjugate(x);
    if (!prod.is_rational()) throw IntegrityError("norm is not rational");
    return prod.rational_value();
}

int rational_rank(const std::vector<FieldElement>& values) {
    if (values.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(values.size());
    for (const auto& v : values) {
        require_same_field(values.front(), v);
        rows.push_back(v.coeffs());
    }
    const size_t cols = rows.front().size();
    int rank = 0;
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = rows.size();
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        const std::vector<Rational>& p = rows[static_cast<size_t>(rank)];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
            const Rational f = rows[r][col] / p[col];
            for (size_t cc = col; cc < cols; ++cc) rows[r][cc] -= f * p[cc];
        }
        ++rank;
    }
    return rank;
}

// ---- PisotBase ----

PisotBase::PisotBase(Family family, long m, long n) : family_(family), m_(m), n_(n) {
    if (family == Family::Plus) {
        if (!(m >= n && n >= 1))
            throw ConstraintViolation("x^2 - mx - n requires m >= n >= 1");
        field_ = make_algebraic({Integer(-n), Integer(-m), Integer(1)}, Rational(m), Rational(m + 1));
    } else {
        if (!(m - 2 >= n && n >= 1))
            throw ConstraintViolation("x^2 - mx + n requires m - 2 >= n >= 1");
        field_ = make_algebraic({Integer(n), Integer(-m), Integer(1)}, Rational(m - 1), Rational(m));
    }
    // Pisot sanity: beta > 1 and |beta'| < 1, decided exactly.
    const FieldElement b = beta();
    const FieldElement bc = galois_conjugate(b);
    const FieldElement one = rational(1);
    if (!(compare(b, one) > 0 && compare(bc, one) < 0 && compare(bc, -one) > 0))
        throw ConstraintViolation("base is not a quadratic Pisot number");
}

FieldElement PisotBase::element(const Rational& a, const Rational& b) const {
    return FieldElement(field_, {a, b});
}

FieldElement PisotBase::ell() const {
    const FieldElement b = beta();
    return (-b) / (b + Rational(1));
}

PisotBase make_base(Family family, long m, long n) { return PisotBase(family, m, n); }

} // namespace negabeta
