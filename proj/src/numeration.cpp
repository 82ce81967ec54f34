#include "negabeta/numeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace negabeta {

namespace {

// Smallest period of w under cyclic repetition.
std::vector<int> primitive_root(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return std::vector<int>(w.begin(), w.begin() + static_cast<long>(d));
    }
    return w;
}

} // namespace

EventuallyPeriodicWord::EventuallyPeriodicWord(std::vector<int> preperiod, std::vector<int> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) per_ = {0};
    per_ = primitive_root(per_);
    // Absorb preperiod symbols that merely repeat the period's tail.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_.insert(per_.begin(), per_.back());
        per_.pop_back();
        pre_.pop_back();
    }
    per_ = primitive_root(per_);
}

EventuallyPeriodicWord EventuallyPeriodicWord::finite(std::vector<int> digits) {
    return EventuallyPeriodicWord(std::move(digits), {0});
}

EventuallyPeriodicWord EventuallyPeriodicWord::zero_word() {
    return EventuallyPeriodicWord({}, {0});
}

int EventuallyPeriodicWord::at(size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

EventuallyPeriodicWord EventuallyPeriodicWord::suffix(size_t i) const {
    if (i <= pre_.size())
        return EventuallyPeriodicWord(std::vector<int>(pre_.begin() + static_cast<long>(i), pre_.end()), per_);
    const size_t r = (i - pre_.size()) % per_.size();
    std::vector<int> rot(per_.begin() + static_cast<long>(r), per_.end());
    rot.insert(rot.end(), per_.begin(), per_.begin() + static_cast<long>(r));
    return EventuallyPeriodicWord({}, std::move(rot));
}

bool EventuallyPeriodicWord::is_zero() const {
    return pre_.empty() && per_.size() == 1 && per_[0] == 0;
}

bool EventuallyPeriodicWord::is_finite_string() const {
    return per_.size() == 1 && per_[0] == 0;
}

std::vector<int> EventuallyPeriodicWord::finite_digits() const {
    if (!is_finite_string()) throw OutOfDomain("word does not end in 0^omega");
    return pre_;
}

namespace {

// Walk both words until the decision bound; equal prefixes of that length
// force equality because the periodic tails are then synchronized.
size_t decision_bound(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    return a.preperiod().size() + b.preperiod().size() +
           std::lcm(a.period().size(), b.period().size());
}

} // namespace

int lex_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    const size_t bound = decision_bound(a, b);
    for (size_t i = 0; i < bound; ++i) {
        const int d = a.at(i) - b.at(i);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

int alt_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    const size_t bound = decision_bound(a, b);
    for (size_t i = 0; i < bound; ++i) {
        int d = a.at(i) - b.at(i);
        if (d == 0) continue;
        // storage index i holds digit number k = i + 1; odd k flips the order
        if (i % 2 == 0) d = -d;
        return d < 0 ? -1 : 1;
    }
    return 0;
}

NumerationSystem make_system(const PisotBase& base, Mode mode) {
    const FieldElement b = base.beta();
    if (mode == Mode::Pos)
        return NumerationSystem{base.field(), mode, b, base.rational(0),
                                static_cast<int>(base.ceil_beta() - 1)};
    return NumerationSystem{base.field(), mode, -b, base.ell(),
                            static_cast<int>(base.floor_beta())};
}

NumerationSystem make_pos_system(const AlgebraicRealPtr& field) {
    const FieldElement b = FieldElement::generator(field);
    if (!(compare(b, FieldElement::from_rational(field, 1)) > 0))
        throw ConstraintViolation("greedy numeration needs beta > 1");
    const Integer fl = floor_int(b);
    return NumerationSystem{field, Mode::Pos, b, FieldElement::from_rational(field, 0),
                            static_cast<int>(fl.get_si())};
}

namespace {

bool in_interval(const NumerationSystem& sys, const FieldElement& x) {
    return compare(x, sys.ell) >= 0 && compare(x, sys.ell + Rational(1)) < 0;
}

} // namespace

std::pair<int, FieldElement> transform_step(const NumerationSystem& sys, const FieldElement& x) {
    if (!in_interval(sys, x)) throw OutOfDomain("point outside the fundamental interval");
    const FieldElement ax = sys.alpha * x;
    const Integer digit = floor_int(ax - sys.ell);
    FieldElement tx = ax - Rational(digit);
    if (digit < 0 || digit > sys.max_digit)
        throw IntegrityError("digit outside the alphabet; broken interval arithmetic");
    if (!in_interval(sys, tx)) throw IntegrityError("transform left the fundamental interval");
    return {static_cast<int>(digit.get_si()), std::move(tx)};
}

std::pair<int, FieldElement> transform_step(const PisotBase& base, Mode mode, const FieldElement& x) {
    return transform_step(make_system(base, mode), x);
}

EventuallyPeriodicWord d_expansion(const NumerationSystem& sys, const FieldElement& x, int max_steps) {
    if (!in_interval(sys, x)) throw OutOfDomain("point outside the fundamental interval");
    std::map<std::vector<Rational>, size_t, RationalVectorLess> seen;
    std::vector<int> digits;
    FieldElement cur = x;
    for (int step = 0; step < max_steps; ++step) {
        const auto [it, fresh] = seen.emplace(cur.coeffs(), digits.size());
        if (!fresh) {
            const size_t start = it->second;
            std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(start));
            std::vector<int> per(digits.begin() + static_cast<long>(start), digits.end());
            return EventuallyPeriodicWord(std::move(pre), std::move(per));
        }
        auto [d, tx] = transform_step(sys, cur);
        digits.push_back(d);
        cur = std::move(tx);
    }
    throw NoPeriodFound("orbit did not close within the step budget");
}

EventuallyPeriodicWord d_expansion(const PisotBase& base, Mode mode, const FieldElement& x,
                                   int max_steps) {
    return d_expansion(make_system(base, mode), x, max_steps);
}

EventuallyPeriodicWord d_beta_one(const AlgebraicRealPtr& field, int max_steps) {
    const NumerationSystem sys = make_pos_system(field);
    // Greedy convention at 1: the first digit is floor(beta), then the orbit
    // of the remainder beta - floor(beta), which lies in [0, 1).
    std::vector<int> head{sys.max_digit};
    const FieldElement rem = sys.alpha - Rational(sys.max_digit);
    EventuallyPeriodicWord tail = d_expansion(sys, rem, max_steps);
    std::vector<int> pre = std::move(head);
    pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
    return EventuallyPeriodicWord(std::move(pre), tail.period());
}

EventuallyPeriodicWord quasi_greedy_upper(const EventuallyPeriodicWord& d_beta_1) {
    if (!d_beta_1.is_finite_string()) return d_beta_1;
    std::vector<int> t = d_beta_1.finite_digits();
    if (t.empty() || t.back() < 1)
        throw ConstraintViolation("greedy expansion of 1 must end with a positive digit");
    t.back() -= 1;
    return EventuallyPeriodicWord({}, std::move(t));
}

EventuallyPeriodicWord ito_sadahiro_upper(const EventuallyPeriodicWord& d_l) {
    if (d_l.purely_periodic() && d_l.period().size() % 2 == 1) {
        std::vector<int> p{0};
        p.insert(p.end(), d_l.period().begin(), d_l.period().end());
        if (p.back() < 1) throw ConstraintViolation("d(l) period must end with a positive digit");
        p.back() -= 1;
        return EventuallyPeriodicWord({}, std::move(p));
    }
    std::vector<int> pre{0};
    pre.insert(pre.end(), d_l.preperiod().begin(), d_l.preperiod().end());
    return EventuallyPeriodicWord(std::move(pre), d_l.period());
}

ReferenceWords reference_words(const NumerationSystem& sys) {
    if (sys.mode == Mode::Pos) {
        return ReferenceWords{EventuallyPeriodicWord::zero_word(),
                              quasi_greedy_upper(d_beta_one(sys.field))};
    }
    EventuallyPeriodicWord low = d_expansion(sys, sys.ell);
    EventuallyPeriodicWord high = ito_sadahiro_upper(low);
    return ReferenceWords{std::move(low), std::move(high)};
}

ReferenceWords reference_words(const PisotBase& base, Mode mode) {
    return reference_words(make_system(base, mode));
}

AdmissibilityContext admissibility_context(const NumerationSystem& sys) {
    return AdmissibilityContext{sys.mode, sys.max_digit, reference_words(sys)};
}

AdmissibilityContext admissibility_context(const PisotBase& base, Mode mode) {
    return admissibility_context(make_system(base, mode));
}

namespace {

bool suffix_ok(const AdmissibilityContext& ctx, const EventuallyPeriodicWord& s) {
    if (ctx.mode == Mode::Pos) return lex_compare(s, ctx.refs.high) < 0;
    return alt_compare(ctx.refs.low, s) <= 0 && alt_compare(s, ctx.refs.high) < 0;
}

} // namespace

bool is_admissible(const AdmissibilityContext& ctx, const EventuallyPeriodicWord& word) {
    const size_t count = word.preperiod().size() + word.period().size();
    for (size_t i = 0; i < count; ++i) {
        const int d = word.at(i);
        if (d < 0 || d > ctx.max_digit) return false;
    }
    // Distinct suffixes: one per preperiod position, one per period rotation.
    for (size_t i = 0; i < count; ++i)
        if (!suffix_ok(ctx, word.suffix(i))) return false;
    return true;
}

bool is_admissible(const PisotBase& base, Mode mode, const EventuallyPeriodicWord& word) {
    return is_admissible(admissibility_context(base, mode), word);
}

bool is_valid_integer_string(const AdmissibilityContext& ctx, const DigitString& s) {
    if (s.point != 0) return false;
    if (s.digits.empty()) return false;
    if (s.digits.size() > 1 && s.digits.front() == 0) return false;
    const EventuallyPeriodicWord w = EventuallyPeriodicWord::finite(s.digits);
    if (!is_admissible(ctx, w)) return false;
    // The (-beta) scaling runs over the open interval, which excludes the
    // one string whose infinite word is d(l) itself.
    if (ctx.mode == Mode::Neg && w == ctx.refs.low) return false;
    return true;
}

Expansion expansion_of(const NumerationSystem& sys, const FieldElement& x, int max_steps) {
    const FieldElement zero = FieldElement::from_rational(sys.field, 0);
    if (x == zero)
        return Expansion{DigitString{{0}, 0}, EventuallyPeriodicWord::zero_word()};
    if (sys.mode == Mode::Pos && sign(x) < 0)
        throw OutOfDomain("greedy expansions are defined for nonnegative values");

    // Minimal k with x / alpha^k inside I; NEG requires the open interior,
    // so endpoint hits move on to the next power.
    const FieldElement upper = sys.ell + Rational(1);
    FieldElement scaled = x;
    long k = 0;
    for (;; ++k) {
        if (k > 512) throw NotRepresentable("value did not scale into the fundamental interval");
        const int clo = compare(scaled, sys.ell);
        const int chi = compare(scaled, upper);
        if (sys.mode == Mode::Pos ? (clo >= 0 && chi < 0) : (clo > 0 && chi < 0)) break;
        scaled = scaled / sys.alpha;
    }

    const EventuallyPeriodicWord word = d_expansion(sys, scaled, max_steps);
    std::vector<int> integral;
    for (long i = 0; i < k; ++i) integral.push_back(word.at(static_cast<size_t>(i)));
    if (integral.empty()) integral.push_back(0);
    if (integral.size() > 1 && integral.front() == 0)
        throw IntegrityError("scaling produced a leading zero digit");
    return Expansion{DigitString{std::move(integral), 0}, word.suffix(static_cast<size_t>(k))};
}

Expansion expansion_of(const PisotBase& base, Mode mode, const FieldElement& x, int max_steps) {
    return expansion_of(make_system(base, mode), x, max_steps);
}

DigitString integer_expansion_of(const NumerationSystem& sys, const FieldElement& x, int max_steps) {
    Expansion e = expansion_of(sys, x, max_steps);
    if (!e.is_integer())
        throw NotRepresentable("value has a nonzero fractional tail");
    return std::move(e.integral);
}

DigitString integer_expansion_of(const PisotBase& base, Mode mode, const FieldElement& x,
                                 int max_steps) {
    return integer_expansion_of(make_system(base, mode), x, max_steps);
}

FieldElement value_of(const NumerationSystem& sys, const DigitString& s) {
    FieldElement acc = FieldElement::from_rational(sys.field, 0);
    for (int d : s.digits) acc = acc * sys.alpha + Rational(d);
    if (s.point != 0) acc = acc * pow(sys.alpha, -s.point);
    return acc;
}

FieldElement value_of(const PisotBase& base, Mode mode, const DigitString& s) {
    return value_of(make_system(base, mode), s);
}

DigitString successor_expansion(const PisotBase& base, const DigitString& s) {
    if (base.family() != Family::Minus)
        throw WrongFamily("successor rewriting is specific to the x^2 - mx + n family");
    const long m = base.m(), n = base.n();
    const AdmissibilityContext ctx = admissibility_context(base, Mode::Neg);
    if (!is_valid_integer_string(ctx, s))
        throw NotAdmissible("input is not an admissible integer expansion");

    // Two zeros of left padding let the rewrite read its X Y context even
    // when the pattern runs off the front of the string.
    std::vector<int> d{0, 0};
    d.insert(d.end(), s.digits.begin(), s.digits.end());
    const int last = d.back();

    if (last <= m - 3) {
        d.back() += 1;
    } else {
        if (last != m - 2)
            throw IntegrityError("admissible string ends with a digit above m-2");
        // strip the maximal run [(m-1) n]^k before the final m-2
        size_t p = d.size() - 2; // position of Y
        while (p >= 1 && d[p] == n && d[p - 1] == m - 1) p -= 2;
        const size_t k = (d.size() - 2 - p) / 2;
        const int Y = d[p], X = d[p - 1];
        if (Y >= 1 && (X <= m - 2 || Y >= n + 1)) {
            // case (a): ... X (Y-1) 0 [(m-1) n]^k
            d[p] = Y - 1;
            d[p + 1] = 0;
            for (size_t i = 0; i < k; ++i) {
                d[p + 2 + 2 * i] = static_cast<int>(m - 1);
                d[p + 3 + 2 * i] = static_cast<int>(n);
            }
        } else if (X <= m - 2 && Y == 0) {
            // case (b): ... (X+1) (m-1) [n (m-1)]^k n
            d[p - 1] = X + 1;
            d[p] = static_cast<int>(m - 1);
            for (size_t i = 0; i < k; ++i) {
                d[p + 1 + 2 * i] = static_cast<int>(n);
                d[p + 2 + 2 * i] = static_cast<int>(m - 1);
            }
            d.back() = static_cast<int>(n);
        } else {
            throw IntegrityError("rewrite context (X, Y) outside the proof's case split");
        }
    }

    while (d.size() > 1 && d.front() == 0) d.erase(d.begin());
    DigitString out{std::move(d), 0};
    if (!is_valid_integer_string(ctx, out))
        throw IntegrityError("successor rewrite produced an inadmissible string");
    return out;
}

} // namespace negabeta
