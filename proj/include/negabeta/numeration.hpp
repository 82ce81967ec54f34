#ifndef NEGABETA_NUMERATION_HPP
#define NEGABETA_NUMERATION_HPP

#include <utility>
#include <vector>

#include "negabeta/algebraic.hpp"

namespace negabeta {

// Infinite digit word with eventually periodic tail, stored canonically:
// the period is primitive and the preperiod is shortest (no common tail
// symbol with the rotated period). A finite string is stored with period
// "0", making the 0^omega suffix explicit.
class EventuallyPeriodicWord {
public:
    EventuallyPeriodicWord(std::vector<int> preperiod, std::vector<int> period);

    static EventuallyPeriodicWord finite(std::vector<int> digits);
    static EventuallyPeriodicWord zero_word();

    const std::vector<int>& preperiod() const { return pre_; }
    const std::vector<int>& period() const { return per_; }

    int at(size_t i) const;
    EventuallyPeriodicWord suffix(size_t i) const;
    bool purely_periodic() const { return pre_.empty(); }
    // True for 0^omega.
    bool is_zero() const;
    // True when the tail is 0^omega, i.e. the word carries a finite string.
    bool is_finite_string() const;
    // The digits before the 0^omega tail (requires is_finite_string()).
    std::vector<int> finite_digits() const;

    bool operator==(const EventuallyPeriodicWord& o) const {
        return pre_ == o.pre_ && per_ == o.per_;
    }
    bool operator!=(const EventuallyPeriodicWord& o) const { return !(*this == o); }

private:
    std::vector<int> pre_, per_;
};

// Strict lexicographic three-way comparison; decided within the first
// |pre_a| + |pre_b| + lcm(|per_a|, |per_b|) symbols.
int lex_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);

// Alternate (negative-base) order: at the first difference in position k,
// counting the leading digit as k = 1, compare (-1)^k a_k < (-1)^k b_k.
int alt_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);

// Finite digit string x_k ... x_1 x_0 (most significant first) with a radix
// point position; integer expansions use point = 0.
struct DigitString {
    std::vector<int> digits;
    long point = 0;

    bool operator==(const DigitString& o) const {
        return digits == o.digits && point == o.point;
    }
};

// Digit expansion split at the radix point. The fractional tail is 0^omega
// exactly when the expanded value is a (+-beta)-integer.
struct Expansion {
    DigitString integral;
    EventuallyPeriodicWord fractional;

    bool is_integer() const { return fractional.is_zero(); }
};

// One numeration system: alpha = beta (POS) or -beta (NEG) acting on the
// fundamental interval I = [ell, ell + 1), with digits 0..max_digit.
struct NumerationSystem {
    AlgebraicRealPtr field;
    Mode mode;
    FieldElement alpha;
    FieldElement ell;
    int max_digit;
};

NumerationSystem make_system(const PisotBase& base, Mode mode);
// Greedy system for an arbitrary base beta > 1 (used beyond the quadratic
// families); digits 0..ceil(beta)-1.
NumerationSystem make_pos_system(const AlgebraicRealPtr& field);

struct ReferenceWords {
    EventuallyPeriodicWord low, high;
};

// T(x) = alpha x - floor(alpha x - ell); returns the digit and T(x).
std::pair<int, FieldElement> transform_step(const NumerationSystem& sys, const FieldElement& x);
std::pair<int, FieldElement> transform_step(const PisotBase& base, Mode mode, const FieldElement& x);

// Digit string d(x) of x in I, eventually periodic by exact orbit detection.
EventuallyPeriodicWord d_expansion(const NumerationSystem& sys, const FieldElement& x,
                                   int max_steps = 4096);
EventuallyPeriodicWord d_expansion(const PisotBase& base, Mode mode, const FieldElement& x,
                                   int max_steps = 4096);

// Greedy expansion of 1 (first digit floor(beta), then the orbit of the
// remainder). Finite strings come back with the explicit 0^omega tail.
EventuallyPeriodicWord d_beta_one(const AlgebraicRealPtr& field, int max_steps = 4096);

// Pure rewriting rules behind reference_words, exposed for direct testing.
// POS: quasi-greedy limit of d_beta(1); NEG: the upper limit word of d(l).
EventuallyPeriodicWord quasi_greedy_upper(const EventuallyPeriodicWord& d_beta_1);
EventuallyPeriodicWord ito_sadahiro_upper(const EventuallyPeriodicWord& d_l);

// POS: low = 0^omega, high = quasi-greedy limit (strict bound on every
// suffix). NEG: low = d(l) (weak bound), high = the Ito-Sadahiro limit
// (strict bound).
ReferenceWords reference_words(const NumerationSystem& sys);
ReferenceWords reference_words(const PisotBase& base, Mode mode);

// Precomputed data for admissibility checks in enumeration loops.
struct AdmissibilityContext {
    Mode mode;
    int max_digit;
    ReferenceWords refs;
};

AdmissibilityContext admissibility_context(const NumerationSystem& sys);
AdmissibilityContext admissibility_context(const PisotBase& base, Mode mode);

// True iff every suffix of the word sits inside the admissible band. The
// suffix set of an eventually periodic word is finite: preperiod suffixes
// plus rotations of the period.
bool is_admissible(const AdmissibilityContext& ctx, const EventuallyPeriodicWord& word);
bool is_admissible(const PisotBase& base, Mode mode, const EventuallyPeriodicWord& word);

// String-level validity of an integer expansion: the (-beta) scaling runs
// over the open interval, so besides the band condition the infinite word
// s 0^omega must differ from d(l) itself. POS has no extra clause.
bool is_valid_integer_string(const AdmissibilityContext& ctx, const DigitString& s);

// Full expansion of x: minimal k >= 0 with x/alpha^k in I (interior of I
// for NEG; endpoint hits skip to the next k), then the orbit digits.
Expansion expansion_of(const NumerationSystem& sys, const FieldElement& x, int max_steps = 4096);
Expansion expansion_of(const PisotBase& base, Mode mode, const FieldElement& x,
                       int max_steps = 4096);

// Integer expansion; NotRepresentable when the fractional tail is nonzero.
DigitString integer_expansion_of(const NumerationSystem& sys, const FieldElement& x,
                                 int max_steps = 4096);
DigitString integer_expansion_of(const PisotBase& base, Mode mode, const FieldElement& x,
                                 int max_steps = 4096);

// Exact value sum_i digits[i] alpha^(exponent of position i).
FieldElement value_of(const NumerationSystem& sys, const DigitString& s);
FieldElement value_of(const PisotBase& base, Mode mode, const DigitString& s);

// Expansion of the next larger (-beta)-integer; x^2 - mx + n family only.
// Last digit <= m-3 increments in place; last digit m-2 rewrites the maximal
// tail X Y [(m-1)n]^k (m-2), reading missing leading context as zeros.
DigitString successor_expansion(const PisotBase& base, const DigitString& s);

} // namespace negabeta

#endif
