#include "negabeta/integer_sets.hpp"

#include <algorithm>
#include <utility>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

FieldElement fe_abs(const FieldElement& x) { return sign(x) < 0 ? -x : x; }

FieldElement family_delta1(const PisotBase& base, Mode mode) {
  const FieldElement inv_beta = pow(base.beta(), -1);
  const Rational m(base.m()), n(base.n());
  const FieldElement one = base.rational(1);
  if (mode == Mode::Pos) {
    if (base.family() == Family::Plus) return inv_beta * n;
    return one - inv_beta * n;
  }
  if (base.family() == Family::Plus) {
    if (base.m() == base.n()) return inv_beta * m;
    return one + inv_beta * n;
  }
  return base.rational(2) - inv_beta * n;
}

}  // namespace

GapAlphabet gap_values(const PisotBase& base, Mode mode) {
  return GapAlphabet{base.rational(1), family_delta1(base, mode)};
}

struct PointSequence::State {
  Mode mode;
  AlgebraicRealPtr field;
  std::vector<FieldElement> deltas;
  Morphism gen;   // POS: substitution fixing the gap word; NEG: antimorphism
  bool mirrored;  // POS only: the word left of 0 mirrors the word right of 0
  PointedWord word;
  std::vector<FieldElement> pos_sums;  // pos_sums[k] = t_k
  std::vector<FieldElement> neg_sums;  // neg_sums[k] = t_{-k}

  State(Mode mode_, AlgebraicRealPtr field_, std::vector<FieldElement> deltas_,
        Morphism gen_)
      : mode(mode_),
        field(std::move(field_)),
        deltas(std::move(deltas_)),
        gen(std::move(gen_)),
        mirrored(mode_ == Mode::Pos) {
    if (static_cast<std::size_t>(gen.alphabet_size()) != deltas.size())
      throw IntegrityError("one gap value per gap letter");
    for (const FieldElement& d : deltas)
      if (sign(d) <= 0) throw IntegrityError("gap values must be positive");
    const FieldElement zero = FieldElement::from_rational(field, 0);
    pos_sums.push_back(zero);
    neg_sums.push_back(zero);
  }

  // Monotone letter cache growth; regenerated prefixes are checked against
  // the cached stretch, so an unstable generator cannot move old letters.
  void ensure(std::size_t need_pos, std::size_t need_neg) {
    if (mirrored) {
      const std::size_t need = std::max(need_pos, need_neg);
      if (word.positive.size() >= need) return;
      const std::size_t target =
          std::max({need, word.positive.size() * 2, std::size_t{32}});
      Word w = fixed_point(gen, 0, target);
      if (!std::equal(word.positive.begin(), word.positive.end(), w.begin()))
        throw IntegrityError("gap word regeneration moved a cached letter");
      word.positive = std::move(w);
      return;
    }
    if (word.positive.size() >= need_pos && word.negative.size() >= need_neg)
      return;
    const std::size_t target =
        std::max({need_pos, need_neg, word.positive.size() * 2, std::size_t{32}});
    PointedWord pw = pointed_fixed_point(gen, 0, 1, target);
    if (!std::equal(word.positive.begin(), word.positive.end(),
                    pw.positive.begin()))
      throw IntegrityError("gap word regeneration moved a cached letter");
    if (!std::equal(word.negative.rbegin(), word.negative.rend(),
                    pw.negative.rbegin()))
      throw IntegrityError("gap word regeneration moved a cached letter");
    word = std::move(pw);
  }
};

PointSequence::PointSequence(const PisotBase& base, Mode mode) {
  const BaseMorphisms bm = base_morphisms(base);
  const GapAlphabet g = gap_values(base, mode);
  st_ = std::make_shared<State>(
      mode, base.field(), std::vector<FieldElement>{g.delta0, g.delta1},
      mode == Mode::Pos ? bm.phi : bm.anti);
}

PointSequence PointSequence::parry(const AlgebraicRealPtr& field) {
  const EventuallyPeriodicWord d = d_beta_one(field);
  if (!d.is_finite_string())
    throw NotRepresentable(
        "d_beta(1) is infinite; the greedy construction covers simple Parry "
        "bases only");
  const std::vector<int> t = d.finite_digits();
  const int q = static_cast<int>(t.size());

  std::vector<Word> images(static_cast<std::size_t>(q));
  for (int i = 0; i + 1 < q; ++i) {
    images[static_cast<std::size_t>(i)] = zeros(static_cast<std::size_t>(t[static_cast<std::size_t>(i)]));
    images[static_cast<std::size_t>(i)].push_back(i + 1);
  }
  images[static_cast<std::size_t>(q - 1)] =
      zeros(static_cast<std::size_t>(t[static_cast<std::size_t>(q - 1)]));

  const FieldElement inv_beta = pow(FieldElement::generator(field), -1);
  std::vector<FieldElement> deltas;
  deltas.reserve(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    FieldElement acc = FieldElement::from_rational(field, 0);
    FieldElement power = inv_beta;
    for (int idx = k; idx < q; ++idx) {
      acc += power * Rational(t[static_cast<std::size_t>(idx)]);
      power = power * inv_beta;
    }
    deltas.push_back(acc);
  }
  if (deltas.front() != FieldElement::from_rational(field, 1))
    throw IntegrityError("greedy gap Delta_0 must equal 1");

  return PointSequence(std::make_shared<State>(
      Mode::Pos, field, std::move(deltas), Morphism(std::move(images))));
}

Mode PointSequence::mode() const { return st_->mode; }
const AlgebraicRealPtr& PointSequence::field() const { return st_->field; }
int PointSequence::alphabet_size() const {
  return static_cast<int>(st_->deltas.size());
}
const std::vector<FieldElement>& PointSequence::deltas() const {
  return st_->deltas;
}

GapAlphabet PointSequence::gaps() const {
  if (st_->deltas.size() != 2)
    throw DegreeMismatch("gap alphabet is not binary");
  return GapAlphabet{st_->deltas[0], st_->deltas[1]};
}

int PointSequence::letter(long long j) const {
  State& st = *st_;
  if (j >= 0) {
    st.ensure(static_cast<std::size_t>(j) + 1, 0);
    return st.word.positive[static_cast<std::size_t>(j)];
  }
  if (st.mirrored) {
    const long long k = -1 - j;
    st.ensure(static_cast<std::size_t>(k) + 1, 0);
    return st.word.positive[static_cast<std::size_t>(k)];
  }
  st.ensure(0, static_cast<std::size_t>(-j));
  return st.word.at(j);
}

FieldElement PointSequence::point(long long j) const {
  State& st = *st_;
  if (j >= 0) {
    while (static_cast<long long>(st.pos_sums.size()) <= j) {
      const long long k = static_cast<long long>(st.pos_sums.size()) - 1;
      st.pos_sums.push_back(st.pos_sums.back() +
                            st.deltas[static_cast<std::size_t>(letter(k))]);
    }
    return st.pos_sums[static_cast<std::size_t>(j)];
  }
  const long long k = -j;
  while (static_cast<long long>(st.neg_sums.size()) <= k) {
    const long long next = static_cast<long long>(st.neg_sums.size());
    st.neg_sums.push_back(st.neg_sums.back() -
                          st.deltas[static_cast<std::size_t>(letter(-next))]);
  }
  return st.neg_sums[static_cast<std::size_t>(k)];
}

std::vector<long long> PointSequence::letter_counts(long long lo,
                                                    long long hi) const {
  std::vector<long long> counts(st_->deltas.size(), 0);
  for (long long j = lo; j < hi; ++j)
    ++counts[static_cast<std::size_t>(letter(j))];
  return counts;
}

long long PointSequence::floor_index(const FieldElement& x) const {
  const FieldElement zero = FieldElement::from_rational(st_->field, 0);
  long long lo, hi;
  if (compare(x, zero) >= 0) {
    lo = 0;
    hi = 1;
    while (compare(point(hi), x) <= 0) {
      lo = hi;
      hi *= 2;
    }
  } else {
    hi = 0;
    lo = -1;
    while (compare(point(lo), x) > 0) {
      hi = lo;
      lo *= 2;
    }
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (compare(point(mid), x) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool PointSequence::contains(const FieldElement& x, long long* index) const {
  const long long j = floor_index(x);
  if (point(j) != x) return false;
  if (index) *index = j;
  return true;
}

PrefixFn PointSequence::forward_prefixes() const {
  auto st = st_;
  return [st](std::size_t n) {
    st->ensure(n, 0);
    return Word(st->word.positive.begin(),
                st->word.positive.begin() + static_cast<std::ptrdiff_t>(n));
  };
}

PrefixFn PointSequence::backward_prefixes() const {
  auto st = st_;
  return [st](std::size_t n) {
    // Mirrored sets: u_{-k} = u_{k-1}, so reading away from 0 on the left
    // reproduces the forward word.
    if (st->mirrored) {
      st->ensure(n, 0);
      return Word(st->word.positive.begin(),
                  st->word.positive.begin() + static_cast<std::ptrdiff_t>(n));
    }
    st->ensure(0, n);
    Word out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
      out.push_back(st->word.at(-static_cast<long long>(i)));
    return out;
  };
}

namespace {

std::vector<std::pair<FieldElement, DigitString>> enumerate_window(
    const NumerationSystem& sys, const FieldElement& lo, const FieldElement& hi,
    int max_len) {
  if (compare(lo, hi) > 0)
    throw ConstraintViolation("oracle window endpoints out of order");
  const FieldElement one = FieldElement::from_rational(sys.field, 1);
  const FieldElement beta_abs =
      sys.mode == Mode::Pos ? sys.alpha : -sys.alpha;

  // An L-digit admissible string (nonzero leading digit) has value at least
  // beta^{L-1} in the greedy system and modulus at least beta^{L-1}/(beta+1)
  // in the negative-base system, so no string longer than K below can land
  // inside the window.
  const FieldElement mag = std::max(fe_abs(lo), fe_abs(hi), FieldElementLess{});
  const FieldElement threshold =
      sys.mode == Mode::Pos ? mag : mag * (beta_abs + one);
  int K = 0;
  FieldElement power = one;
  while (compare(power, threshold) <= 0) {
    ++K;
    if (K > max_len)
      throw WindowTooWide("window needs digit strings longer than max_len");
    power = power * beta_abs;
  }

  const AdmissibilityContext ctx = admissibility_context(sys);
  std::vector<std::pair<FieldElement, DigitString>> out;
  auto consider = [&](const std::vector<int>& digits) {
    DigitString s{digits, 0};
    if (!is_valid_integer_string(ctx, s)) return;
    FieldElement v = value_of(sys, s);
    if (compare(v, lo) < 0 || compare(v, hi) > 0) return;
    out.emplace_back(std::move(v), std::move(s));
  };

  consider({0});
  for (int L = 1; L <= K; ++L) {
    std::vector<int> digits(static_cast<std::size_t>(L), 0);
    digits[0] = 1;
    for (;;) {
      consider(digits);
      int pos = L - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == sys.max_digit) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first) < 0;
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1].first == out[i].first)
      throw IntegrityError("two admissible integer strings share one value");
  return out;
}

}  // namespace

std::vector<std::pair<FieldElement, DigitString>> brute_force_points(
    const PisotBase& base, Mode mode, const FieldElement& lo,
    const FieldElement& hi, int max_len) {
  return enumerate_window(make_system(base, mode), lo, hi, max_len);
}

std::vector<std::pair<FieldElement, DigitString>> brute_force_points(
    const AlgebraicRealPtr& field, const FieldElement& lo,
    const FieldElement& hi, int max_len) {
  return enumerate_window(make_pos_system(field), lo, hi, max_len);
}

bool membership(const PisotBase& base, Mode mode, const FieldElement& x) {
  FieldElement v = x;
  if (mode == Mode::Pos && sign(x) < 0) v = -x;
  return expansion_of(base, mode, v).is_integer();
}

}  // namespace negabeta
