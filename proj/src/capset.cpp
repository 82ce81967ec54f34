#include "negabeta/capset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "negabeta/errors.hpp"
#include "negabeta/integer_sets.hpp"

namespace negabeta {

namespace {

FieldElement field_zero(const FieldElement& like) {
  return FieldElement::from_rational(like.base(), 0);
}

std::string coeff_string(const FieldElement& x) {
  std::ostringstream os;
  os << "(";
  const std::vector<Rational>& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << (sgn(c[i]) < 0 ? " - " : " + ");
    Rational a = i && sgn(c[i]) < 0 ? Rational(-c[i]) : c[i];
    os << a.get_str();
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  os << ")";
  return os.str();
}

CheckReport check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

bool same_points(const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Ascending merge of two disjoint ascending point lists; a shared value means
// the caller split a window into overlapping parts.
std::vector<FieldElement> disjoint_union(std::vector<FieldElement> a,
                                         const std::vector<FieldElement>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), FieldElementLess{});
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] == a[i]) throw IntegrityError("window parts overlap");
  return a;
}

// Points of the sequence inside the window, ascending. floor_index brackets
// the left end, so the walk starts at the only candidate that can equal lo.
std::vector<FieldElement> sequence_points(PointSequence& seq, const Window& w) {
  if (compare(w.lo, w.hi) > 0) throw ConstraintViolation("window ends out of order");
  std::vector<FieldElement> out;
  for (long long j = seq.floor_index(w.lo);; ++j) {
    FieldElement t = seq.point(j);
    if (compare(t, w.hi) > 0) break;
    if (w.contains(t)) out.push_back(t);
  }
  return out;
}

// The part of w on the nonnegative axis; the clipped end is closed so that 0
// stays inside.
Window nonnegative_part(const Window& w) {
  FieldElement zero = field_zero(w.lo);
  if (compare(w.hi, zero) < 0 || (compare(w.hi, zero) == 0 && !w.closed_hi))
    throw ConstraintViolation("window misses the nonnegative axis");
  if (compare(w.lo, zero) < 0) return Window{zero, w.hi, true, w.closed_hi};
  return w;
}

std::size_t finite_factor_count(const Word& w, std::size_t n) {
  std::set<Word> factors;
  if (n == 0 || n > w.size()) return n == 0 ? 1 : 0;
  for (std::size_t i = 0; i + n <= w.size(); ++i)
    factors.insert(Word(w.begin() + i, w.begin() + i + n));
  return factors.size();
}

}  // namespace

bool Window::contains(const FieldElement& x) const {
  int at_lo = compare(lo, x);
  if (at_lo > 0 || (at_lo == 0 && !closed_lo)) return false;
  int at_hi = compare(x, hi);
  if (at_hi > 0 || (at_hi == 0 && !closed_hi)) return false;
  return true;
}

Window make_window(FieldElement lo, FieldElement hi, bool closed_lo,
                   bool closed_hi) {
  int order = compare(lo, hi);
  if (order > 0) throw ConstraintViolation("window ends out of order");
  if (order == 0 && !(closed_lo && closed_hi))
    throw ConstraintViolation("a degenerate window must be closed on both sides");
  return Window{std::move(lo), std::move(hi), closed_lo, closed_hi};
}

Window translate(const Window& w, const FieldElement& x) {
  return Window{w.lo + x, w.hi + x, w.closed_lo, w.closed_hi};
}

Window scale(const Window& w, const FieldElement& f) {
  int s = sign(f);
  if (s == 0) throw ConstraintViolation("scale factor must be nonzero");
  if (s > 0) return Window{f * w.lo, f * w.hi, w.closed_lo, w.closed_hi};
  return Window{f * w.hi, f * w.lo, w.closed_hi, w.closed_lo};
}

Scheme make_scheme(FieldElement eta, FieldElement epsilon) {
  if (eta.coeffs().size() != 2)
    throw DegreeMismatch("cut-and-project schemes live in quadratic fields");
  if (eta.is_rational() || epsilon.is_rational())
    throw ConstraintViolation("scheme directions must be irrational");
  if ((eta - epsilon).is_zero())
    throw ConstraintViolation("scheme directions must differ");
  return Scheme{std::move(eta), std::move(epsilon)};
}

Scheme beta_scheme(const PisotBase& base) {
  FieldElement beta = base.beta();
  return make_scheme(beta, galois_conjugate(beta));
}

std::pair<Integer, Integer> lattice_coordinates(const Scheme& s,
                                                const FieldElement& x) {
  // Solve x = a + b eta through coefficient vectors; eta irrational keeps the
  // second coefficient nonzero.
  FieldElement in_field = x - field_zero(s.eta);
  const std::vector<Rational>& xc = in_field.coeffs();
  const std::vector<Rational>& ec = s.eta.coeffs();
  Rational b = xc[1] / ec[1];
  Rational a = xc[0] - b * ec[0];
  if (a.get_den() != 1 || b.get_den() != 1)
    throw OutOfDomain("not a point of the lattice Z + Z eta");
  return {a.get_num(), b.get_num()};
}

FieldElement star(const Scheme& s, const FieldElement& x) {
  auto [a, b] = lattice_coordinates(s, x);
  return s.epsilon * Rational(b) + Rational(a);
}

std::vector<FieldElement> cap_points(const Scheme& s, const Window& omega,
                                     const Window& real_window) {
  // x = a + b eta, x* = a + b epsilon, so x - x* = b (eta - epsilon) pins b to
  // a closed relaxation of the difference window; each b then pins a. Exact
  // membership with the openness flags filters the relaxed candidates.
  FieldElement d = s.eta - s.epsilon;
  FieldElement diff_lo = real_window.lo - omega.hi;
  FieldElement diff_hi = real_window.hi - omega.lo;
  Integer bmin, bmax;
  if (sign(d) > 0) {
    bmin = ceil_int(diff_lo / d);
    bmax = floor_int(diff_hi / d);
  } else {
    bmin = ceil_int(diff_hi / d);
    bmax = floor_int(diff_lo / d);
  }
  std::vector<FieldElement> out;
  for (Integer b = bmin; b <= bmax; ++b) {
    FieldElement direct = s.eta * Rational(b);
    FieldElement internal = s.epsilon * Rational(b);
    FieldElement alo = real_window.lo - direct;
    FieldElement ahi = real_window.hi - direct;
    FieldElement slo = omega.lo - internal;
    FieldElement shi = omega.hi - internal;
    Integer amin = ceil_int(compare(alo, slo) >= 0 ? alo : slo);
    Integer amax = floor_int(compare(ahi, shi) <= 0 ? ahi : shi);
    for (Integer a = amin; a <= amax; ++a) {
      FieldElement x = direct + Rational(a);
      if (real_window.contains(x) && omega.contains(internal + Rational(a)))
        out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), FieldElementLess{});
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1] == out[i])
      throw IntegrityError("two lattice points share one value");
  return out;
}

Report window_algebra_check(const PisotBase& base, const Window& omega,
                            const FieldElement& x0, const FieldElement& alpha,
                            const Window& real_window) {
  Scheme s = beta_scheme(base);
  Report report;

  // Splitting omega at an interior point covers the same points.
  if (compare(omega.lo, omega.hi) == 0) {
    report.push_back(check("split-window", true, "window degenerate, nothing to split"));
  } else {
    FieldElement mid = (omega.lo + omega.hi) / Rational(2);
    Window left{omega.lo, mid, omega.closed_lo, true};
    Window right{mid, omega.hi, false, omega.closed_hi};
    std::vector<FieldElement> merged = disjoint_union(
        cap_points(s, left, real_window), cap_points(s, right, real_window));
    std::vector<FieldElement> whole = cap_points(s, omega, real_window);
    std::ostringstream os;
    os << merged.size() << " points from the parts, " << whole.size()
       << " from the whole window";
    report.push_back(check("split-window", same_points(merged, whole), os.str()));
  }

  // Translating the set by x0 translates the window by the conjugate.
  std::vector<FieldElement> shifted =
      cap_points(s, omega, translate(real_window, -x0));
  for (FieldElement& p : shifted) p += x0;
  std::vector<FieldElement> moved_window =
      cap_points(s, translate(omega, star(s, x0)), real_window);
  {
    std::ostringstream os;
    os << "translated by " << coeff_string(x0) << ", " << shifted.size()
       << " points";
    report.push_back(
        check("translate-window", same_points(shifted, moved_window), os.str()));
  }

  // Rescaling the set by a unit alpha rescales the window by the conjugate.
  Rational norm = field_norm(alpha);
  if (norm != 1 && norm != -1)
    throw NotAUnit("window scaling needs an algebraic unit");
  lattice_coordinates(s, alpha);  // OutOfDomain unless alpha lies in Z[beta]
  std::vector<FieldElement> scaled =
      cap_points(s, omega, scale(real_window, pow(alpha, -1)));
  for (FieldElement& p : scaled) p = alpha * p;
  std::sort(scaled.begin(), scaled.end(), FieldElementLess{});
  std::vector<FieldElement> scaled_window =
      cap_points(s, scale(omega, star(s, alpha)), real_window);
  {
    std::ostringstream os;
    os << "rescaled by " << coeff_string(alpha) << ", " << scaled.size()
       << " points";
    report.push_back(
        check("scale-window", same_points(scaled, scaled_window), os.str()));
  }
  return report;
}

Report verify_identifications(const PisotBase& base, const Window& real_window) {
  if (!base.is_unit())
    throw NotAUnit("cut-and-project identifications need a unit base");
  Scheme s = beta_scheme(base);
  FieldElement beta = base.beta();
  FieldElement zero = base.rational(0);
  FieldElement one = base.rational(1);
  Report report;

  // Positive base: window (-1, beta) for the plus family, [0, beta) for the
  // minus family, intersected with the nonnegative axis.
  Window pos_omega = base.family() == Family::Plus
                         ? make_window(-one, beta, false, false)
                         : make_window(zero, beta, true, false);
  Window wpos = nonnegative_part(real_window);
  std::vector<FieldElement> cap_pos = cap_points(s, pos_omega, wpos);
  PointSequence seq_pos(base, Mode::Pos);
  std::vector<FieldElement> walk_pos = sequence_points(seq_pos, wpos);
  {
    std::ostringstream os;
    os << cap_pos.size() << " projected points against " << walk_pos.size()
       << " generated points";
    report.push_back(
        check("pos-identification", same_points(cap_pos, walk_pos), os.str()));
  }
  bool memb_pos = true;
  for (const FieldElement& x : cap_pos)
    memb_pos = memb_pos && membership(base, Mode::Pos, x);
  report.push_back(check("pos-membership", memb_pos,
                         "every projected point has an integer expansion"));

  // Negative base: [0, beta) in general position, [0, beta^2) for the plus
  // family with m = 1, and a symmetric window for the minus family.
  Window neg_omega = [&] {
    if (base.family() == Family::Plus) {
      if (base.m() == 1) return make_window(zero, beta * beta, true, false);
      return make_window(zero, beta, true, false);
    }
    FieldElement ratio = (beta - one) / (beta + one);
    return make_window(-ratio, beta * ratio, false, false);
  }();
  std::vector<FieldElement> cap_neg = cap_points(s, neg_omega, real_window);
  PointSequence seq_neg(base, Mode::Neg);
  std::vector<FieldElement> walk_neg = sequence_points(seq_neg, real_window);
  {
    std::ostringstream os;
    os << cap_neg.size() << " projected points against " << walk_neg.size()
       << " generated points";
    report.push_back(
        check("neg-identification", same_points(cap_neg, walk_neg), os.str()));
  }
  bool memb_neg = true;
  for (const FieldElement& x : cap_neg)
    memb_neg = memb_neg && membership(base, Mode::Neg, x);
  report.push_back(check("neg-membership", memb_neg,
                         "every projected point has an integer expansion"));
  return report;
}

Report verify_union_theorem(const PisotBase& base, const Window& real_window) {
  if (base.family() != Family::Plus || base.n() != 1 || base.m() < 2)
    throw WrongFamily("union theorem needs the plus family with n = 1 and m >= 2");
  FieldElement beta = base.beta();
  FieldElement zero = base.rational(0);
  Window wpos = nonnegative_part(real_window);

  PointSequence seq_pos(base, Mode::Pos);
  PointSequence seq_neg(base, Mode::Neg);
  std::vector<FieldElement> whole = sequence_points(seq_pos, wpos);
  std::vector<FieldElement> part = sequence_points(seq_neg, wpos);
  std::vector<FieldElement> scaled =
      sequence_points(seq_neg, scale(wpos, pow(beta, -1)));
  for (FieldElement& p : scaled) p = beta * p;

  std::vector<FieldElement> merged = part;
  merged.insert(merged.end(), scaled.begin(), scaled.end());
  std::sort(merged.begin(), merged.end(), FieldElementLess{});
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<FieldElement> overlap;
  std::set_intersection(part.begin(), part.end(), scaled.begin(), scaled.end(),
                        std::back_inserter(overlap), FieldElementLess{});
  std::vector<FieldElement> expected_overlap;
  if (wpos.contains(zero)) expected_overlap.push_back(zero);

  Report report;
  {
    std::ostringstream os;
    os << whole.size() << " nonnegative points, " << part.size() << " plus "
       << scaled.size() << " in the two parts";
    report.push_back(check("union-covers", same_points(whole, merged), os.str()));
  }
  report.push_back(check("parts-meet-in-zero",
                         same_points(overlap, expected_overlap),
                         "the parts share only the origin"));
  return report;
}

ThreeGapData three_gap_data(const Scheme& s, const Window& omega, int count) {
  if (count < 1) throw ConstraintViolation("gap count must be positive");
  if (compare(omega.lo, omega.hi) == 0)
    throw ConstraintViolation("acceptance window must be non-degenerate");
  FieldElement zero = field_zero(s.eta);
  if (!omega.contains(zero))
    throw ConstraintViolation("acceptance window must contain zero");

  // Projected sets of a non-degenerate window are relatively dense, so a few
  // doublings of the real window expose count gaps on each side of 0.
  std::vector<FieldElement> pts;
  std::size_t origin = 0;
  Rational radius(count);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 60) throw IntegrityError("projected points failed to fill the window");
    Window w = make_window(FieldElement::from_rational(s.eta.base(), -radius),
                           FieldElement::from_rational(s.eta.base(), radius),
                           true, true);
    pts = cap_points(s, omega, w);
    auto at = std::lower_bound(pts.begin(), pts.end(), zero, FieldElementLess{});
    if (at != pts.end() && *at == zero) {
      origin = static_cast<std::size_t>(at - pts.begin());
      std::size_t want = static_cast<std::size_t>(count);
      if (origin >= want && pts.size() - 1 - origin >= want) break;
    }
    radius *= 2;
  }

  std::size_t want = static_cast<std::size_t>(count);
  std::vector<FieldElement> gaps;
  std::set<FieldElement, FieldElementLess> distinct;
  for (std::size_t i = origin - want; i < origin + want; ++i) {
    FieldElement g = pts[i + 1] - pts[i];
    gaps.push_back(g);
    distinct.insert(g);
  }
  ThreeGapData data{std::vector<FieldElement>(distinct.begin(), distinct.end()),
                    Word{}};
  for (const FieldElement& g : gaps) {
    auto at = std::lower_bound(data.gaps.begin(), data.gaps.end(), g,
                               FieldElementLess{});
    data.coding.push_back(static_cast<int>(at - data.gaps.begin()));
  }
  return data;
}

Report three_gap_check(const Scheme& s, const Window& omega, int count) {
  ThreeGapData data = three_gap_data(s, omega, count);
  std::size_t kinds = data.gaps.size();
  Report report;
  {
    std::ostringstream os;
    os << kinds << " distinct gap values over " << data.coding.size() << " gaps";
    report.push_back(check("gap-count", kinds >= 1 && kinds <= 3, os.str()));
  }
  if (kinds == 3) {
    bool additive = data.gaps[2] == data.gaps[0] + data.gaps[1];
    report.push_back(check("gap-additivity", additive,
                           "largest gap equals the sum of the other two"));
  } else {
    report.push_back(check("gap-additivity", true,
                           "fewer than three values, nothing to add"));
  }
  if (kinds == 2) {
    bool balanced = true;
    std::size_t balance_span = std::min<std::size_t>(50, data.coding.size() - 1);
    for (std::size_t n = 1; n <= balance_span; ++n)
      balanced = balanced && max_imbalance(data.coding, n) <= 1;
    bool sturmian_counts = true;
    for (std::size_t n = 1; n <= 20; ++n)
      sturmian_counts =
          sturmian_counts && finite_factor_count(data.coding, n) == n + 1;
    std::ostringstream os;
    os << "coding balanced up to " << balance_span
       << ", factor counts n + 1 up to 20";
    report.push_back(
        check("sturmian-coding", balanced && sturmian_counts, os.str()));
  } else {
    std::ostringstream os;
    os << "coding uses " << kinds << " values, Sturmian check skipped";
    report.push_back(check("sturmian-coding", true, os.str()));
  }
  return report;
}

}  // namespace negabeta
