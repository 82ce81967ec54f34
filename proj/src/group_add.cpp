#include "negabeta/group_add.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "negabeta/errors.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

namespace {

// t_j + t_k - t_{j+k} as a signed difference of letter counts over two
// equal-length index ranges, split by the signs of j, k, j + k. Each case
// rewrites the three prefix sums so that the shared stretch cancels.
FieldElement combinatorial_diff(const PointSequence& seq, long long j,
                                long long k) {
  if (j > k) std::swap(j, k);
  long long w_lo, w_hi, v_lo, v_hi;
  bool negated = false;
  if (j >= 0) {
    w_lo = 0, w_hi = j, v_lo = k, v_hi = j + k;
  } else if (k <= 0) {
    w_lo = k, w_hi = 0, v_lo = j + k, v_hi = j;
    negated = true;
  } else if (j + k <= 0) {
    w_lo = 0, w_hi = k, v_lo = j, v_hi = j + k;
  } else {
    w_lo = j + k, w_hi = k, v_lo = j, v_hi = 0;
  }
  std::vector<long long> w_counts = seq.letter_counts(w_lo, w_hi);
  std::vector<long long> v_counts = seq.letter_counts(v_lo, v_hi);
  FieldElement acc = FieldElement::from_rational(seq.field(), 0);
  for (std::size_t i = 0; i < seq.deltas().size(); ++i)
    acc += seq.deltas()[i] *
           Rational(static_cast<long>(w_counts[i] - v_counts[i]));
  return negated ? -acc : acc;
}

}  // namespace

FieldElement oplus(const PointSequence& seq, long long j, long long k) {
  return seq.point(j + k);
}

AdditionReport addition_report(const PointSequence& seq, long long j,
                               long long k) {
  FieldElement sum = seq.point(j) + seq.point(k);
  FieldElement diff = sum - seq.point(j + k);
  if (diff != combinatorial_diff(seq, j, k))
    throw IntegrityError("positional and combinatorial differences disagree");
  long long below = seq.floor_index(sum);
  FieldElement slack_below = sum - seq.point(below);
  FieldElement slack_above = seq.point(below + 1) - sum;
  long long closest = compare(slack_below, slack_above) <= 0 ? below : below + 1;
  bool member = slack_below.is_zero();
  return AdditionReport{j,    k,       sum,  j + k,
                        diff, closest, !member || below == j + k};
}

std::vector<AdditionReport> compatibility_scan(const PointSequence& seq,
                                               long long index_bound) {
  std::vector<AdditionReport> violations;
  for (long long k = -index_bound; k <= index_bound; ++k) {
    long long reach = k < 0 ? -k : k;
    for (long long j = -reach; j <= reach; ++j) {
      AdditionReport report = addition_report(seq, j, k);
      if (!report.is_compatible_instance) violations.push_back(report);
    }
  }
  return violations;
}

FieldElement xi(const PisotBase& base) {
  if (base.family() != Family::Plus || !base.is_unit())
    throw WrongFamily("xi needs the plus family with n = 1");
  if (base.m() == 1) return pow(base.beta(), -2);
  return -pow(base.beta(), -1);
}

std::vector<FieldElement> diff_set_scan(const PointSequence& seq,
                                        long long index_bound) {
  std::set<FieldElement, FieldElementLess> values;
  for (long long k = -index_bound; k <= index_bound; ++k) {
    long long reach = k < 0 ? -k : k;
    for (long long j = -reach; j <= reach; ++j)
      values.insert(addition_report(seq, j, k).diff);
  }
  return std::vector<FieldElement>(values.begin(), values.end());
}

bool closest_point_property(const PisotBase& base, long long index_bound) {
  if (base.family() != Family::Plus || !base.is_unit() || base.m() < 2)
    throw WrongFamily(
        "the closest point property needs the plus family with n = 1, m >= 2");
  PointSequence seq(base, Mode::Neg);
  for (long long k = -index_bound; k <= index_bound; ++k)
    for (long long j = -index_bound; j <= k; ++j)
      if (addition_report(seq, j, k).closest_index != j + k) return false;
  return true;
}

std::vector<std::pair<std::size_t, int>> balance_growth(
    const PointSequence& seq, const std::vector<std::size_t>& lengths) {
  PrefixFn u = seq.forward_prefixes();
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t length : lengths) {
    std::size_t budget = 64;
    while (budget < 8 * length) budget *= 2;
    for (;;) {
      try {
        out.emplace_back(length, balance(u, length, budget));
        break;
      } catch (const BudgetTooSmall&) {
        if (budget >= (std::size_t{1} << 22)) throw;
        budget *= 2;
      }
    }
  }
  return out;
}

}  // namespace negabeta
