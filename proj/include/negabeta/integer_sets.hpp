#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "negabeta/algebraic.hpp"
#include "negabeta/numeration.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

// The two gap lengths between consecutive points of a quadratic-base integer
// set. delta0 = 1 in every case; delta1 carries the family closed form.
struct GapAlphabet {
  FieldElement delta0;
  FieldElement delta1;
};

// Closed forms: POS/Plus n/beta; POS/Minus 1 - n/beta; NEG/Plus m/beta when
// m = n and 1 + n/beta when m > n; NEG/Minus 2 - n/beta.
GapAlphabet gap_values(const PisotBase& base, Mode mode);

// An indexed point set {t_j : j in Z} with t_0 = 0, increasing in j, and
// t_{j+1} - t_j = deltas[letter(j)]. Points and gap word determine each
// other, so every position is an exact prefix sum of gap values.
//
// The quadratic constructor covers both modes: the POS gap word is the fixed
// point of the canonical substitution and the set is symmetric by definition
// (the word left of the origin mirrors the word right of it); the NEG gap
// word is the bidirectional fixed point of the canonical antimorphism. The
// parry() constructor covers the greedy set of any base with finite
// d_beta(1) = t_1...t_q: gaps Delta_k = sum_{j=1}^{q-k} t_{k+j} beta^{-j}
// and substitution i -> 0^{t_{i+1}}(i+1) for i < q-1, q-1 -> 0^{t_q}.
//
// Letter and prefix-sum caches grow monotonically under a single writer;
// concurrent reads of already generated stretches are safe.
class PointSequence {
 public:
  PointSequence(const PisotBase& base, Mode mode);
  static PointSequence parry(const AlgebraicRealPtr& field);

  Mode mode() const;
  const AlgebraicRealPtr& field() const;
  int alphabet_size() const;
  const std::vector<FieldElement>& deltas() const;
  // Binary-alphabet view of deltas(); DegreeMismatch otherwise.
  GapAlphabet gaps() const;

  int letter(long long j) const;
  FieldElement point(long long j) const;

  // Letter occurrence counts over the index range [lo, hi).
  std::vector<long long> letter_counts(long long lo, long long hi) const;

  // Largest j with t_j <= x; total because gaps are bounded below.
  long long floor_index(const FieldElement& x) const;
  // Exact membership; *index receives the hit when non-null.
  bool contains(const FieldElement& x, long long* index = nullptr) const;

  // Gap word as prefix suppliers for the factor machinery: forward reads
  // u_0 u_1 ..., backward reads u_{-1} u_{-2} ... away from the origin.
  PrefixFn forward_prefixes() const;
  PrefixFn backward_prefixes() const;

 private:
  struct State;
  explicit PointSequence(std::shared_ptr<State> st) : st_(std::move(st)) {}
  std::shared_ptr<State> st_;
};

// Independent enumeration oracle: every admissible integer digit string (no
// fractional part) whose exact value lies in [lo, hi], sorted by value. The
// search depth is derived from the window, not from the sequence machinery:
// a POS string of length L has value >= beta^{L-1} and a NEG string of
// length L has |value| >= beta^{L-1}/(beta+1), so lengths above the derived
// bound K cannot reach the window; K > max_len raises WindowTooWide.
// Distinct admissible strings must have distinct values; a collision raises
// IntegrityError instead of silently deduplicating.
std::vector<std::pair<FieldElement, DigitString>> brute_force_points(
    const PisotBase& base, Mode mode, const FieldElement& lo,
    const FieldElement& hi, int max_len);

// Same oracle for the greedy system of an arbitrary base beta > 1.
std::vector<std::pair<FieldElement, DigitString>> brute_force_points(
    const AlgebraicRealPtr& field, const FieldElement& lo,
    const FieldElement& hi, int max_len);

// True iff the expansion of x terminates with zero fractional tail. POS sets
// are symmetric, so negative x are tested through their mirror image.
bool membership(const PisotBase& base, Mode mode, const FieldElement& x);

}  // namespace negabeta
