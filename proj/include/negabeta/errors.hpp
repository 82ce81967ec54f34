#ifndef NEGABETA_ERRORS_HPP
#define NEGABETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negabeta {

// Base for everything thrown by the library. Callers that don't care about
// the precise failure can catch this one.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor precondition failed (non-monic polynomial, family constraint
// violated, window endpoints out of order, ...).
struct ConstraintViolation : Error {
    using Error::Error;
};

// Two field elements over different ground fields were combined.
struct DegreeMismatch : Error {
    using Error::Error;
};

// Argument lies outside the domain of a transformation or map.
struct OutOfDomain : Error {
    using Error::Error;
};

// Orbit did not close up within the step budget.
struct NoPeriodFound : Error {
    using Error::Error;
};

// Value has no finite expansion of the requested kind.
struct NotRepresentable : Error {
    using Error::Error;
};

// Digit string violates the admissibility band.
struct NotAdmissible : Error {
    using Error::Error;
};

// Letter outside a morphism's alphabet.
struct UnknownLetter : Error {
    using Error::Error;
};

// Morphism has no fixed point with the requested seed.
struct NotProlongable : Error {
    using Error::Error;
};

// A saturation check did not stabilize within the inspection budget.
// Deciding with the current budget would risk a wrong answer, so we refuse.
struct BudgetTooSmall : Error {
    using Error::Error;
};

// Operation requires the base to be an algebraic unit.
struct NotAUnit : Error {
    using Error::Error;
};

// Operation is specific to the other quadratic family.
struct WrongFamily : Error {
    using Error::Error;
};

// Requested enumeration window exceeds the configured size guard.
struct WindowTooWide : Error {
    using Error::Error;
};

// Textual input does not match the expected grammar.
struct ParseError : Error {
    using Error::Error;
};

// Internal cross-check failed; indicates a bug, not bad input.
struct IntegrityError : Error {
    using Error::Error;
};

} // namespace negabeta

#endif
