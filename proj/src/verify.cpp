#include "negabeta/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "negabeta/capset.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expr.hpp"
#include "negabeta/group_add.hpp"
#include "negabeta/integer_sets.hpp"
#include "negabeta/numeration.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

namespace {

CheckReport check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

// Retries a saturation-bounded computation with doubled budgets; past the
// cap the honest BudgetTooSmall propagates to the caller.
template <typename F>
auto with_budget(F&& f, std::size_t initial) {
  for (std::size_t budget = initial;; budget *= 2) {
    try {
      return f(budget);
    } catch (const BudgetTooSmall&) {
      if (budget >= (std::size_t{1} << 22)) throw;
    }
  }
}

std::string digits_text(const std::vector<int>& ds) {
  bool wide = std::any_of(ds.begin(), ds.end(), [](int d) { return d > 9; });
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i && wide) out += ',';
    out += std::to_string(ds[i]);
  }
  return out;
}

std::string word_text(const EventuallyPeriodicWord& w) {
  return digits_text(w.preperiod()) + "(" + digits_text(w.period()) + ")...";
}

// a + c/beta, the shape the worked examples use for sequence points.
FieldElement with_inv(const PisotBase& b, long a, long c) {
  return b.rational(a) + b.rational(c) / b.beta();
}

// Points of the sequence inside [lo, hi], ascending.
std::vector<FieldElement> walk_points(const PointSequence& seq,
                                      const FieldElement& lo,
                                      const FieldElement& hi) {
  std::vector<FieldElement> out;
  for (long long j = seq.floor_index(lo);; ++j) {
    FieldElement t = seq.point(j);
    if (compare(t, hi) > 0) break;
    if (compare(t, lo) >= 0) out.push_back(t);
  }
  return out;
}

Report gaps_suite(const PisotBase& base, const VerifyOptions& o) {
  Report rep;
  FieldElement w = base.rational(o.window);
  FieldElement zero = base.rational(0);
  for (Mode mode : {Mode::Pos, Mode::Neg}) {
    std::string tag = mode == Mode::Pos ? "pos" : "neg";
    PointSequence seq(base, mode);
    FieldElement lo = mode == Mode::Pos ? zero : -w;
    std::vector<FieldElement> oracle;
    for (const auto& [value, digits] : brute_force_points(base, mode, lo, w, 48))
      oracle.push_back(value);
    std::vector<FieldElement> walked = walk_points(seq, lo, w);
    std::ostringstream os;
    os << oracle.size() << " oracle vs " << walked.size() << " walked points";
    rep.push_back(check(tag + "-points-match-oracle", oracle == walked, os.str()));

    GapAlphabet g = seq.gaps();
    bool in_alphabet = true, saw0 = false, saw1 = false;
    for (std::size_t i = 0; i + 1 < oracle.size(); ++i) {
      FieldElement d = oracle[i + 1] - oracle[i];
      if (d == g.delta0) saw0 = true;
      else if (d == g.delta1) saw1 = true;
      else in_alphabet = false;
    }
    rep.push_back(check(tag + "-gap-alphabet", in_alphabet && saw0 && saw1,
                        "delta1 = " + coefficient_string(g.delta1)));
  }

  int m = static_cast<int>(base.m()), n = static_cast<int>(base.n());
  EventuallyPeriodicWord expected =
      base.family() == Family::Plus
          ? EventuallyPeriodicWord({m}, {m - n})
          : EventuallyPeriodicWord({}, {m - 1, n});
  EventuallyPeriodicWord orbit = d_expansion(base, Mode::Neg, base.ell());
  bool ok = orbit == expected && reference_words(base, Mode::Neg).low == expected;
  rep.push_back(check("reference-word-closed-form", ok, "d(l) = " + word_text(orbit)));
  return rep;
}

Report language_suite(const PisotBase& base, const VerifyOptions& o) {
  Report rep;
  BaseMorphisms bm = base_morphisms(base);
  PrefixFn u_pos = fixed_point_prefixes(bm.phi, 0);
  PrefixFn u_neg = antimorphism_positive_prefixes(bm.anti);
  PrefixFn rhs = bm.splitter ? image_prefixes(*bm.splitter, u_neg) : u_neg;
  std::vector<bool> eq = with_budget(
      [&](std::size_t b) { return language_equal(u_pos, rhs, o.maxlen, b); }, 4096);
  std::size_t first_bad = 0;
  for (std::size_t i = 0; i < eq.size(); ++i)
    if (!eq[i] && !first_bad) first_bad = i + 1;
  rep.push_back(check("factor-sets-match", first_bad == 0,
                      first_bad ? "first mismatch at length " + std::to_string(first_bad)
                                : "lengths 1.." + std::to_string(o.maxlen) +
                                      (bm.splitter ? " through the gap splitter" : " directly")));

  std::size_t m = static_cast<std::size_t>(base.m());
  Morphism phi2 = compose(bm.phi, bm.phi);
  Morphism anti2 = compose(bm.anti, bm.anti);
  if (base.family() == Family::Plus && base.m() == base.n()) {
    std::optional<Word> w = right_conjugate_witness(phi2, anti2);
    bool ok = w.has_value() && *w == wpow(wcat({zeros(m), {1}}), m);
    rep.push_back(check("conjugacy-witness", ok,
                        ok ? "antimorphism square conjugate by (0^m 1)^m" : "witness missing"));
  } else if (base.family() == Family::Plus) {
    bool inter = verify_intertwining(split_unit_first(), anti2, *bm.psi);
    bool conj = right_conjugate_witness(phi2, *bm.psi).has_value();
    rep.push_back(check("conjugacy-witness", inter && conj,
                        "splitter intertwines anti^2 with a conjugate of phi^2"));
  } else {
    bool inter = verify_intertwining(split_unit_last(), anti2, *bm.psi);
    bool conj = right_conjugate_witness(*bm.psi, phi2).has_value();
    rep.push_back(check("conjugacy-witness", inter && conj,
                        "splitter intertwines anti^2 with a conjugate of phi^2"));
  }

  bool has = bm.sturmian_factors.has_value();
  bool composed = has && compose_all(*bm.sturmian_factors) == anti2;
  rep.push_back(check("antimorphism-square-decomposition",
                      base.is_unit() ? composed : !has,
                      base.is_unit()
                          ? std::to_string(has ? bm.sturmian_factors->size() : 0) +
                                " exchange/fibonacci factors"
                          : "absent for a non-unit base"));
  return rep;
}

Report cap_suite(const PisotBase& base, const VerifyOptions& o) {
  FieldElement w = base.rational(o.window);
  Window real_window = make_window(-w, w, true, true);
  Window omega = make_window(base.rational(0), base.beta());
  FieldElement alpha = base.is_unit() ? base.beta() : base.rational(-1);
  Report rep = window_algebra_check(base, omega, base.rational(1), alpha, real_window);
  if (base.is_unit()) {
    Report ids = verify_identifications(base, real_window);
    rep.insert(rep.end(), ids.begin(), ids.end());
  }
  return rep;
}

Report addition_suite(const PisotBase& base, const VerifyOptions& o) {
  Report rep;
  PointSequence pos(base, Mode::Pos);
  PointSequence neg(base, Mode::Neg);
  std::string box = "box " + std::to_string(o.bound);
  rep.push_back(check("pos-scan-clean", compatibility_scan(pos, o.bound).empty(), box));
  rep.push_back(check("neg-scan-clean", compatibility_scan(neg, o.bound).empty(), box));
  if (!base.is_unit()) return rep;

  std::vector<FieldElement> diffs = diff_set_scan(neg, o.bound);
  std::string listing;
  for (const FieldElement& d : diffs)
    listing += (listing.empty() ? "" : ", ") + coefficient_string(d);
  if (base.family() == Family::Plus) {
    FieldElement x = xi(base);
    bool inside = std::all_of(diffs.begin(), diffs.end(), [&](const FieldElement& d) {
      return d.is_zero() || d == x;
    });
    rep.push_back(check("difference-set", inside, "{" + listing + "} vs {0, xi}"));
    bool reflect = true;
    for (long long j = 1; j <= o.bound && reflect; ++j)
      reflect = neg.point(j) + neg.point(-j) == x;
    rep.push_back(check("reflection-offset", reflect,
                        "t_j + t_-j = " + coefficient_string(x)));
    if (base.m() >= 2)
      rep.push_back(check("closest-point", closest_point_property(base, o.bound), box));
  } else {
    FieldElement eta = base.rational(1) - base.rational(1) / base.beta();
    bool inside = std::all_of(diffs.begin(), diffs.end(), [&](const FieldElement& d) {
      return d.is_zero() || d == eta || d == -eta;
    });
    rep.push_back(check("difference-set", inside, "{" + listing + "} vs {-eta, 0, eta}"));
  }
  return rep;
}

Report sturmian_suite(const PisotBase& base, const VerifyOptions& o) {
  Report rep;
  BaseMorphisms bm = base_morphisms(base);
  PrefixFn u_neg = antimorphism_positive_prefixes(bm.anti);
  if (base.is_unit()) {
    std::pair<bool, std::size_t> comp = with_budget(
        [&](std::size_t b) {
          for (std::size_t n = 1; n <= o.maxlen; ++n)
            if (complexity(u_neg, n, b) != n + 1) return std::pair<bool, std::size_t>{false, n};
          return std::pair<bool, std::size_t>{true, 0};
        },
        4096);
    rep.push_back(check("complexity-n-plus-1", comp.first,
                        comp.first ? "lengths 1.." + std::to_string(o.maxlen)
                                   : "fails at length " + std::to_string(comp.second)));
    int bal = with_budget(
        [&](std::size_t b) { return balance(u_neg, 2 * o.maxlen, b); }, 4096);
    rep.push_back(check("one-balanced", bal == 1,
                        "balance " + std::to_string(bal) + " up to length " +
                            std::to_string(2 * o.maxlen)));
    return rep;
  }

  std::size_t m = static_cast<std::size_t>(base.m());
  std::size_t n = static_cast<std::size_t>(base.n());
  Word peaks, flats;
  if (base.family() == Family::Plus && m == n) {
    peaks = wcat({{1}, zeros(m), {1}});
    flats = zeros(2 * m);
  } else if (base.family() == Family::Plus) {
    peaks = wcat({{1}, zeros(m - 1), {1}});
    flats = zeros(m + n - 1);
  } else {
    peaks = wcat({{1}, zeros(m - n - 2), {1}});
    flats = zeros(m - 2);
  }
  std::size_t deep = std::max(peaks.size(), flats.size());
  std::vector<std::set<Word>> sets = with_budget(
      [&](std::size_t b) { return saturated_factor_sets(u_neg, deep, b); }, 4096);
  bool found = sets[peaks.size() - 1].count(peaks) == 1 &&
               sets[flats.size() - 1].count(flats) == 1 &&
               sets[peaks.size() - 1].count(zeros(peaks.size())) == 1;
  rep.push_back(check("unbalanced-factor-pair", found,
                      word_to_string(peaks) + " and " + word_to_string(flats)));
  int bal = with_budget(
      [&](std::size_t b) { return balance_at(u_neg, peaks.size(), b); }, 4096);
  rep.push_back(check("imbalance-witnessed", bal >= 2,
                      "balance " + std::to_string(bal) + " at length " +
                          std::to_string(peaks.size())));
  return rep;
}

Report counterexamples_suite(const VerifyOptions& o) {
  Report rep;

  PisotBase tau = make_base(Family::Plus, 1, 1);
  PointSequence tneg(tau, Mode::Neg);
  AdditionReport g = addition_report(tneg, 5, 5);
  bool golden = tneg.point(5) == with_inv(tau, 4, 1) &&
                tneg.point(10) == with_inv(tau, 7, 3) &&
                tneg.point(11) == with_inv(tau, 7, 4) &&
                g.diff == with_inv(tau, 1, -1) &&
                g.sum - tneg.point(11) == with_inv(tau, 1, -2) &&
                g.oplus_index == 10 && g.closest_index == 11;
  rep.push_back(check("golden-addition-figure", golden,
                      "t_5 + t_5 lands between t_10 and t_11, nearer t_11"));

  PointSequence cubic = PointSequence::parry(make_algebraic({-1, -1, 0, 1}, 1, 2));
  AdditionReport c = addition_report(cubic, 1, 2);
  std::vector<AdditionReport> viol = compatibility_scan(cubic, 12);
  bool seen = std::any_of(viol.begin(), viol.end(), [](const AdditionReport& r) {
    return r.j == 1 && r.k == 2;
  });
  bool shifted = c.sum == cubic.point(4) && c.oplus_index == 3 &&
                 c.closest_index == 4 && !c.is_compatible_instance && seen;
  rep.push_back(check("cubic-shifted-sum", shifted, "t_1 + t_2 = t_4, not t_3"));

  const std::vector<FieldElement>& cd = cubic.deltas();
  bool dependent = rational_rank(cd) == 3 && cd[0] == cd[2] + cd[3];
  rep.push_back(check("cubic-gap-dependence", dependent,
                      "delta_0 = delta_2 + delta_3, rank 3 of 5"));

  PisotBase m31 = make_base(Family::Minus, 3, 1);
  PointSequence n31(m31, Mode::Neg);
  AdditionReport a31 = addition_report(n31, 6, 6);
  bool f31 = n31.point(6) == with_inv(m31, 9, -3) &&
             n31.point(11) == with_inv(m31, 18, -7) &&
             a31.oplus_index == 12 && a31.closest_index == 11;
  PisotBase m41 = make_base(Family::Minus, 4, 1);
  PointSequence n41(m41, Mode::Neg);
  AdditionReport a41 = addition_report(n41, 2, 2);
  bool f41 = a41.sum == m41.rational(4) && n41.point(3) == with_inv(m41, 4, -1) &&
             a41.oplus_index == 4 && a41.closest_index == 3;
  rep.push_back(check("minus-closest-point-failures", f31 && f41,
                      "t_6+t_6 of (3,1) and t_2+t_2 of (4,1) miss the group sum"));

  PointSequence wide = PointSequence::parry(make_algebraic({-1, 0, 0, 0, 0, -1, 1}, 1, 2));
  bool clean = compatibility_scan(wide, std::min<long long>(o.bound, 40)).empty();
  bool independent = rational_rank(wide.deltas()) == 6;
  std::vector<std::pair<std::size_t, int>> growth = balance_growth(wide, {100, 400, 1600});
  bool grows = growth[0].second <= growth[1].second &&
               growth[1].second <= growth[2].second &&
               growth[0].second < growth[2].second;
  std::ostringstream os;
  os << "balance " << growth[0].second << " -> " << growth[1].second << " -> "
     << growth[2].second << " at lengths 100, 400, 1600";
  rep.push_back(check("degree6-compatible-unbounded",
                      clean && independent && grows, os.str()));
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"gaps",     "language", "union-theorem",  "cap-identities",
          "addition", "sturmian", "counterexamples"};
}

Report run_suite(const std::string& name, const std::optional<PisotBase>& base,
                 const VerifyOptions& options) {
  std::vector<std::string> names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw ConstraintViolation("unknown suite: " + name);
  if (options.maxlen < 1 || options.window < 1 || options.bound < 0)
    throw ConstraintViolation("suite options must be positive");
  if (name == "counterexamples") return counterexamples_suite(options);
  if (!base) throw OutOfDomain("suite " + name + " needs a quadratic base");
  if (name == "gaps") return gaps_suite(*base, options);
  if (name == "language") return language_suite(*base, options);
  if (name == "union-theorem") {
    FieldElement w = base->rational(options.window);
    return verify_union_theorem(*base, make_window(base->rational(0), w, true, true));
  }
  if (name == "cap-identities") return cap_suite(*base, options);
  if (name == "addition") return addition_suite(*base, options);
  return sturmian_suite(*base, options);
}

}  // namespace negabeta
