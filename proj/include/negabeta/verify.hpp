#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "negabeta/algebraic.hpp"
#include "negabeta/report.hpp"

namespace negabeta {

// Budgets for the named verification suites; the defaults finish in seconds
// on the quadratic grid bases. Saturation budgets are chosen internally and
// doubled on demand, so only honest undecidability surfaces as an error.
struct VerifyOptions {
  std::size_t maxlen = 30;  // factor-language and complexity length bound
  long long bound = 60;     // index box half-width for addition scans
  long window = 10;         // real-axis half-width for point enumeration
};

// The available suite names, in documentation order.
std::vector<std::string> suite_names();

// Runs one named suite and returns its per-check report:
//
//   gaps            both digit systems against the enumeration oracle plus
//                   the gap and reference-word closed forms
//   language        factor-language equality of the two codings plus the
//                   conjugacy or intertwining witness behind it
//   union-theorem   nonnegative integers as a union of negative-base parts
//                   (plus family with n = 1 and m >= 2 only)
//   cap-identities  cut-and-project window algebra, and for unit bases the
//                   projection identities for both integer sets
//   addition        compatibility scans and the unit difference-set bounds
//   sturmian        complexity and balance for unit bases, an explicit
//                   unbalanced factor pair otherwise
//   counterexamples base-independent boundary examples: the golden-ratio
//                   addition figure, the cubic and degree-6 bases, and the
//                   minus-family closest-point failures
//
// Every suite except "counterexamples" requires a quadratic base
// (OutOfDomain otherwise); "counterexamples" ignores the base. Unknown
// names and degenerate options raise ConstraintViolation; family
// restrictions propagate from the underlying modules (WrongFamily).
Report run_suite(const std::string& name, const std::optional<PisotBase>& base,
                 const VerifyOptions& options = {});

}  // namespace negabeta
