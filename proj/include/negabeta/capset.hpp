#pragma once

#include <utility>
#include <vector>

#include "negabeta/algebraic.hpp"
#include "negabeta/report.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

// Interval of field elements with explicit endpoint openness.
// Degenerate windows (lo == hi) must be closed on both sides.
struct Window {
  FieldElement lo;
  FieldElement hi;
  bool closed_lo = true;
  bool closed_hi = false;

  bool contains(const FieldElement& x) const;
};

Window make_window(FieldElement lo, FieldElement hi, bool closed_lo = true,
                   bool closed_hi = false);

// The window {x + t : t in w}.
Window translate(const Window& w, const FieldElement& x);

// The window {f * t : t in w}; a negative factor swaps ends and openness.
Window scale(const Window& w, const FieldElement& f);

// Cut-and-project scheme on a real quadratic field: lattice Z + Z eta in the
// direct space, star map a + b eta -> a + b epsilon into the internal space.
// Both eta and epsilon must be irrational and distinct.
struct Scheme {
  FieldElement eta;
  FieldElement epsilon;
};

Scheme make_scheme(FieldElement eta, FieldElement epsilon);

// Scheme whose lattice is Z[beta] and whose star map is Galois conjugation.
Scheme beta_scheme(const PisotBase& base);

// Lattice coordinates (a, b) with x = a + b eta; OutOfDomain when x is not
// a lattice point.
std::pair<Integer, Integer> lattice_coordinates(const Scheme& s,
                                                const FieldElement& x);

FieldElement star(const Scheme& s, const FieldElement& x);

// All lattice points x with x in real_window and x* in omega, ascending.
std::vector<FieldElement> cap_points(const Scheme& s, const Window& omega,
                                     const Window& real_window);

// Window-restricted checks of the three cut-and-project identities:
// splitting omega at an interior point, translating by a lattice point x0,
// and rescaling by a unit alpha.
Report window_algebra_check(const PisotBase& base, const Window& omega,
                            const FieldElement& x0, const FieldElement& alpha,
                            const Window& real_window);

// For unit bases: the positive-base integers are a cut-and-project set
// intersected with [0, inf), and the negative-base integers are one outright.
// Compares both against the generated point sequences on the window.
Report verify_identifications(const PisotBase& base, const Window& real_window);

// For the plus family with n = 1 and m >= 2: the nonnegative positive-base
// integers are the union of the negative-base integers and beta times them,
// and the two parts meet only in 0.
Report verify_union_theorem(const PisotBase& base, const Window& real_window);

// Central patch of a cut-and-project set: the 2*count gaps around 0 and the
// word coding them by ascending gap value.
struct ThreeGapData {
  std::vector<FieldElement> gaps;  // distinct gap values, ascending
  Word coding;                     // left-to-right coding of the central gaps
};

ThreeGapData three_gap_data(const Scheme& s, const Window& omega, int count);

// Checks the gap structure of cap_points(omega): at most three distinct gap
// values, the largest the sum of the other two when all three occur, and a
// balanced Sturmian-complexity coding when exactly two occur.
Report three_gap_check(const Scheme& s, const Window& omega, int count);

}  // namespace negabeta
