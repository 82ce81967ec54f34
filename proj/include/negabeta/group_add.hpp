#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "negabeta/algebraic.hpp"
#include "negabeta/integer_sets.hpp"

namespace negabeta {

// Exact record of one addition instance measured against the group sum.
struct AdditionReport {
  long long j;
  long long k;
  FieldElement sum;             // t_j + t_k
  long long oplus_index;        // j + k
  FieldElement diff;            // t_j + t_k - t_{j+k}
  long long closest_index;      // minimizes |t_j + t_k - t_i|, ties break low
  bool is_compatible_instance;  // sum lies outside the set or equals t_{j+k}
};

// The group sum t_{j+k}; under it the point set is a copy of the integers
// with neutral element t_0 = 0.
FieldElement oplus(const PointSequence& seq, long long j, long long k);

// Full report for one pair. The difference is computed positionally and again
// through the factor-count identity
//   t_j + t_k - t_{j+k} = sum_i (|w|_i - |w'|_i) Delta_i
// over case-dependent equal-length factors; disagreement of the two routes is
// an integrity failure.
AdditionReport addition_report(const PointSequence& seq, long long j,
                               long long k);

// Reports for every pair |j| <= |k| <= index_bound whose real sum lands in
// the set at an index other than j + k. Empty when the gap values are
// rationally independent.
std::vector<AdditionReport> compatibility_scan(const PointSequence& seq,
                                               long long index_bound);

// Delta_0 - Delta_1 of the negative-base sequence of a plus-family unit:
// -1/beta for m >= 2 and 1/beta^2 for m = 1.
FieldElement xi(const PisotBase& base);

// Distinct exact values of t_j + t_k - t_{j+k} over |j| <= |k| <= index_bound,
// ascending.
std::vector<FieldElement> diff_set_scan(const PointSequence& seq,
                                        long long index_bound);

// Whether t_{j+k} is the closest point to t_j + t_k throughout the box
// |j|, |k| <= index_bound of the negative-base sequence. Plus family with
// n = 1 and m >= 2 only; there the offset stays below half the least gap.
bool closest_point_property(const PisotBase& base, long long index_bound);

// Empirical balance bound of the forward coding word at each length, computed
// under the saturation protocol.
std::vector<std::pair<std::size_t, int>> balance_growth(
    const PointSequence& seq, const std::vector<std::size_t>& lengths);

}  // namespace negabeta
