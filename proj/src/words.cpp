#include "negabeta/words.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace negabeta {

namespace {

// Longest prefix of f(w) of length at most cap; f must be Forward.
Word apply_head(const Morphism& f, const Word& w, std::size_t cap) {
  Word out;
  out.reserve(std::min(cap, w.size() * f.max_image_length()));
  for (int a : w) {
    const Word& img = f.image(a);
    for (int b : img) {
      out.push_back(b);
      if (out.size() == cap) return out;
    }
  }
  return out;
}

// Longest suffix of f(w) of length at most cap; f must be Forward.
Word apply_tail(const Morphism& f, const Word& w, std::size_t cap) {
  Word rev;
  rev.reserve(std::min(cap, w.size() * f.max_image_length()));
  for (auto it = w.rbegin(); it != w.rend() && rev.size() < cap; ++it) {
    const Word& img = f.image(*it);
    for (auto jt = img.rbegin(); jt != img.rend(); ++jt) {
      rev.push_back(*jt);
      if (rev.size() == cap) break;
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

Word head(const Word& w, std::size_t k) {
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(std::min(k, w.size())));
}

Word tail(const Word& w, std::size_t k) {
  k = std::min(k, w.size());
  return Word(w.end() - static_cast<std::ptrdiff_t>(k), w.end());
}

int alphabet_span(const Word& w) {
  int k = 0;
  for (int a : w) k = std::max(k, a + 1);
  return k;
}

// Per-letter (min, max) window counts over all length-n windows of w.
std::vector<std::pair<long long, long long>> window_count_ranges(const Word& w, std::size_t n,
                                                                 int alphabet) {
  if (n == 0 || n > w.size()) throw OutOfDomain("window length outside the inspected word");
  std::vector<long long> cnt(static_cast<std::size_t>(alphabet), 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(w[i])];
  std::vector<std::pair<long long, long long>> mm(static_cast<std::size_t>(alphabet));
  for (int c = 0; c < alphabet; ++c) mm[static_cast<std::size_t>(c)] = {cnt[static_cast<std::size_t>(c)], cnt[static_cast<std::size_t>(c)]};
  for (std::size_t i = n; i < w.size(); ++i) {
    ++cnt[static_cast<std::size_t>(w[i])];
    --cnt[static_cast<std::size_t>(w[i - n])];
    for (int c : {w[i], w[i - n]}) {
      auto& [lo, hi] = mm[static_cast<std::size_t>(c)];
      lo = std::min(lo, cnt[static_cast<std::size_t>(c)]);
      hi = std::max(hi, cnt[static_cast<std::size_t>(c)]);
    }
  }
  return mm;
}

}  // namespace

Word word_from_string(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw UnknownLetter("word characters must be digits");
    w.push_back(c - '0');
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (int a : w) {
    if (a < 0 || a > 9) throw UnknownLetter("letters beyond 9 have no single-character form");
    s.push_back(static_cast<char>('0' + a));
  }
  return s;
}

Word wcat(std::initializer_list<Word> parts) {
  Word out;
  std::size_t total = 0;
  for (const Word& p : parts) total += p.size();
  out.reserve(total);
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word wpow(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word zeros(std::size_t k) { return Word(k, 0); }

Morphism::Morphism(std::vector<Word> images, Orientation orientation)
    : images_(std::move(images)), orientation_(orientation) {
  if (images_.empty()) throw ConstraintViolation("a morphism needs a non-empty alphabet");
  for (const Word& img : images_)
    for (int a : img)
      if (a < 0 || a >= alphabet_size())
        throw UnknownLetter("image letter outside the alphabet");
}

const Word& Morphism::image(int letter) const {
  if (letter < 0 || letter >= alphabet_size())
    throw UnknownLetter("letter outside the alphabet");
  return images_[static_cast<std::size_t>(letter)];
}

bool Morphism::non_erasing() const {
  return std::none_of(images_.begin(), images_.end(),
                      [](const Word& img) { return img.empty(); });
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& img : images_) m = std::max(m, img.size());
  return m;
}

Word Morphism::operator()(const Word& w) const {
  Word out;
  std::size_t total = 0;
  for (int a : w) total += image(a).size();
  out.reserve(total);
  if (orientation_ == Orientation::Forward) {
    for (int a : w) {
      const Word& img = image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const Word& img = image(*it);
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return out;
}

Morphism identity_morphism(int alphabet_size) {
  if (alphabet_size < 1) throw ConstraintViolation("a morphism needs a non-empty alphabet");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(alphabet_size));
  for (int a = 0; a < alphabet_size; ++a) images.push_back({a});
  return Morphism(std::move(images));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(g.alphabet_size()));
  for (int a = 0; a < g.alphabet_size(); ++a) images.push_back(f(g.image(a)));
  Orientation o = (f.orientation() == g.orientation()) ? Orientation::Forward
                                                       : Orientation::Reversing;
  return Morphism(std::move(images), o);
}

Morphism compose_all(const std::vector<Morphism>& fs) {
  if (fs.empty()) throw ConstraintViolation("compose_all needs at least one factor");
  Morphism acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = compose(acc, fs[i]);
  return acc;
}

std::vector<std::vector<Integer>> incidence_matrix(const Morphism& f) {
  const std::size_t k = static_cast<std::size_t>(f.alphabet_size());
  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (int a : f.image(static_cast<int>(j))) m[static_cast<std::size_t>(a)][j] += 1;
  return m;
}

EigenvalueBound second_eigenvalue_bound(const Morphism& f) {
  if (f.alphabet_size() != 2)
    throw DegreeMismatch("exact eigenvalue location is implemented for 2x2 matrices");
  auto m = incidence_matrix(f);
  Integer tr = m[0][0] + m[1][1];
  Integer det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Integer disc = tr * tr - 4 * det;
  EigenvalueBound out;
  out.char_poly = {det, -tr, 1};
  if (disc < 0) {
    out.complex_pair = true;
    out.second_in_unit_disc = det < 1;  // |lambda|^2 = det
    return out;
  }
  // Real roots; the smaller one is (tr - sqrt(disc)) / 2.
  bool below_one = (tr - 2 < 0) || ((tr - 2) * (tr - 2) < disc);
  bool above_minus_one = (tr + 2 > 0) && ((tr + 2) * (tr + 2) > disc);
  out.second_in_unit_disc = below_one && above_minus_one;
  return out;
}

Word fixed_point(const Morphism& f, int seed, std::size_t length) {
  if (f.orientation() != Orientation::Forward)
    throw ConstraintViolation("one-sided fixed points need a Forward map");
  if (!f.non_erasing())
    throw ConstraintViolation("fixed points need a non-erasing map");
  const Word& first = f.image(seed);
  if (first.empty() || first.front() != seed)
    throw NotProlongable("the seed image must start with the seed");
  Word w{seed};
  while (w.size() < length) {
    Word next = apply_head(f, w, length);
    if (next.size() == w.size())
      throw NotProlongable("iteration stopped growing before the requested length");
    if (!is_prefix(w, next))
      throw IntegrityError("fixed-point iterate rewrote its own prefix");
    w = std::move(next);
  }
  w.resize(length);
  return w;
}

int PointedWord::at(long long j) const {
  if (j >= 0) {
    if (static_cast<std::size_t>(j) >= positive.size())
      throw OutOfDomain("index beyond the generated positive side");
    return positive[static_cast<std::size_t>(j)];
  }
  long long idx = static_cast<long long>(negative.size()) + j;
  if (idx < 0) throw OutOfDomain("index beyond the generated negative side");
  return negative[static_cast<std::size_t>(idx)];
}

PointedWord pointed_fixed_point(const Morphism& f, int seed_pos, int seed_neg,
                                std::size_t length) {
  if (f.orientation() != Orientation::Reversing)
    throw ConstraintViolation("pointed fixed points need a Reversing map");
  if (!f.non_erasing())
    throw ConstraintViolation("fixed points need a non-erasing map");
  Morphism g = compose(f, f);
  const Word& gp = g.image(seed_pos);
  const Word& gn = g.image(seed_neg);
  if (gp.front() != seed_pos)
    throw NotProlongable("the squared map must prolong the positive seed to the right");
  if (gn.back() != seed_neg)
    throw NotProlongable("the squared map must prolong the negative seed to the left");

  auto gen_right = [&](std::size_t want) {
    Word w{seed_pos};
    while (w.size() < want) {
      Word next = apply_head(g, w, want);
      if (next.size() == w.size())
        throw NotProlongable("iteration stopped growing before the requested length");
      if (!is_prefix(w, next))
        throw IntegrityError("pointed iterate rewrote its stable prefix");
      w = std::move(next);
    }
    return w;
  };
  auto gen_left = [&](std::size_t want) {
    Word w{seed_neg};
    while (w.size() < want) {
      Word next = apply_tail(g, w, want);
      if (next.size() == w.size())
        throw NotProlongable("iteration stopped growing before the requested length");
      if (!is_suffix(w, next))
        throw IntegrityError("pointed iterate rewrote its stable suffix");
      w = std::move(next);
    }
    return w;
  };

  if (length == 0) return {};

  Word right = gen_right(length);
  Word left = gen_left(length);

  // Fixed-point identity on the generated stretch: the image of the right
  // prefix must close the left side against the delimiter and vice versa.
  const std::size_t probe = std::min<std::size_t>(length, 48);
  Word a = f(head(right, probe));
  if (a.size() > left.size()) left = gen_left(a.size());
  if (!is_suffix(a, left))
    throw NotProlongable("iteration does not converge to an antimorphism fixed point");
  Word b = f(tail(left, probe));
  if (b.size() > right.size()) right = gen_right(b.size());
  if (!is_prefix(b, right))
    throw NotProlongable("iteration does not converge to an antimorphism fixed point");

  PointedWord out;
  out.positive = head(right, length);
  out.negative = tail(left, length);
  return out;
}

std::optional<Word> right_conjugate_witness(const Morphism& sigma, const Morphism& psi,
                                            std::size_t max_w) {
  if (sigma.alphabet_size() != psi.alphabet_size()) return std::nullopt;
  if (sigma.orientation() != Orientation::Forward ||
      psi.orientation() != Orientation::Forward)
    return std::nullopt;
  if (!sigma.non_erasing() || !psi.non_erasing()) return std::nullopt;
  if (incidence_matrix(sigma) != incidence_matrix(psi)) return std::nullopt;
  // Any witness is a prefix of sigma(0)^infinity.
  const Word& base = sigma.image(0);
  Word candidate;
  for (std::size_t len = 0; len <= max_w; ++len) {
    if (len > 0) candidate.push_back(base[(len - 1) % base.size()]);
    bool ok = true;
    for (int a = 0; ok && a < sigma.alphabet_size(); ++a)
      ok = wcat({sigma.image(a), candidate}) == wcat({candidate, psi.image(a)});
    if (ok) return candidate;
  }
  return std::nullopt;
}

std::optional<Word> right_conjugate_witness(const Morphism& sigma, const Morphism& psi) {
  std::size_t bound = std::max(sigma.max_image_length(), psi.max_image_length()) *
                      static_cast<std::size_t>(std::max(sigma.alphabet_size(), 2));
  return right_conjugate_witness(sigma, psi, bound);
}

std::set<Word> factors(const Word& w, std::size_t len) {
  std::set<Word> out;
  if (len > w.size()) return out;
  for (std::size_t i = 0; i + len <= w.size(); ++i)
    out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                    w.begin() + static_cast<std::ptrdiff_t>(i + len)));
  return out;
}

PrefixFn fixed_point_prefixes(const Morphism& f, int seed) {
  auto cache = std::make_shared<Word>();
  return [f, seed, cache](std::size_t length) {
    if (cache->size() < length) {
      Word w = fixed_point(f, seed, length);
      if (!is_prefix(*cache, w))
        throw IntegrityError("prefix supplier produced an unstable prefix");
      *cache = std::move(w);
    }
    return head(*cache, length);
  };
}

PrefixFn antimorphism_positive_prefixes(const Morphism& f) {
  auto cache = std::make_shared<Word>();
  return [f, cache](std::size_t length) {
    if (cache->size() < length) {
      Word w = pointed_fixed_point(f, 0, 1, length).positive;
      if (!is_prefix(*cache, w))
        throw IntegrityError("prefix supplier produced an unstable prefix");
      *cache = std::move(w);
    }
    return head(*cache, length);
  };
}

PrefixFn periodic_prefixes(Word pattern) {
  if (pattern.empty()) throw ConstraintViolation("periodic words need a non-empty pattern");
  return [pattern = std::move(pattern)](std::size_t length) {
    Word w;
    w.reserve(length);
    while (w.size() < length) w.push_back(pattern[w.size() % pattern.size()]);
    return w;
  };
}

PrefixFn image_prefixes(const Morphism& f, PrefixFn base) {
  if (f.orientation() != Orientation::Forward)
    throw ConstraintViolation("image prefixes need a Forward map");
  if (!f.non_erasing())
    throw ConstraintViolation("image prefixes need a non-erasing map");
  return [f, base = std::move(base)](std::size_t length) {
    return apply_head(f, base(length), length);
  };
}

std::vector<std::set<Word>> saturated_factor_sets(const PrefixFn& u, std::size_t maxlen,
                                                  std::size_t budget) {
  if (maxlen == 0) return {};
  if (budget < 2 * maxlen)
    throw BudgetTooSmall("prefix budget must be at least twice the factor length");
  Word wa = u(budget);
  Word wb = u(2 * budget);
  if (wa.size() < budget || wb.size() < 2 * budget)
    throw BudgetTooSmall("prefix supplier delivered less than the requested budget");
  std::vector<std::set<Word>> out;
  out.reserve(maxlen);
  for (std::size_t n = 1; n <= maxlen; ++n) {
    std::set<Word> fa = factors(wa, n);
    std::set<Word> fb = factors(wb, n);
    if (fa != fb)
      throw BudgetTooSmall("factor set still growing when doubling the prefix");
    out.push_back(std::move(fb));
  }
  return out;
}

std::vector<bool> language_equal(const PrefixFn& u, const PrefixFn& v, std::size_t maxlen,
                                 std::size_t budget) {
  auto fu = saturated_factor_sets(u, maxlen, budget);
  auto fv = saturated_factor_sets(v, maxlen, budget);
  std::vector<bool> out(maxlen);
  for (std::size_t n = 0; n < maxlen; ++n) out[n] = (fu[n] == fv[n]);
  return out;
}

std::size_t complexity(const PrefixFn& u, std::size_t n, std::size_t budget) {
  if (n == 0) return 1;
  if (budget < 2 * n)
    throw BudgetTooSmall("prefix budget must be at least twice the factor length");
  Word wa = u(budget);
  Word wb = u(2 * budget);
  if (wa.size() < budget || wb.size() < 2 * budget)
    throw BudgetTooSmall("prefix supplier delivered less than the requested budget");
  std::set<Word> fa = factors(wa, n);
  std::set<Word> fb = factors(wb, n);
  if (fa != fb)
    throw BudgetTooSmall("factor set still growing when doubling the prefix");
  return fb.size();
}

int max_imbalance(const Word& w, std::size_t n) {
  int alphabet = std::max(alphabet_span(w), 1);
  auto mm = window_count_ranges(w, n, alphabet);
  long long best = 0;
  for (const auto& [lo, hi] : mm) best = std::max(best, hi - lo);
  return static_cast<int>(best);
}

namespace {

int balance_between(const Word& wa, const Word& wb, std::size_t n) {
  int alphabet = std::max({alphabet_span(wa), alphabet_span(wb), 1});
  auto ra = window_count_ranges(wa, n, alphabet);
  auto rb = window_count_ranges(wb, n, alphabet);
  if (ra != rb)
    throw BudgetTooSmall("window count range still growing when doubling the prefix");
  long long best = 0;
  for (const auto& [lo, hi] : rb) best = std::max(best, hi - lo);
  return static_cast<int>(best);
}

}  // namespace

int balance_at(const PrefixFn& u, std::size_t n, std::size_t budget) {
  if (n == 0 || budget < 2 * n)
    throw BudgetTooSmall("prefix budget must be at least twice the window length");
  Word wa = u(budget);
  Word wb = u(2 * budget);
  if (wa.size() < budget || wb.size() < 2 * budget)
    throw BudgetTooSmall("prefix supplier delivered less than the requested budget");
  return balance_between(wa, wb, n);
}

int balance(const PrefixFn& u, std::size_t maxlen, std::size_t budget) {
  if (maxlen == 0 || budget < 2 * maxlen)
    throw BudgetTooSmall("prefix budget must be at least twice the window length");
  Word wa = u(budget);
  Word wb = u(2 * budget);
  if (wa.size() < budget || wb.size() < 2 * budget)
    throw BudgetTooSmall("prefix supplier delivered less than the requested budget");
  int best = 0;
  for (std::size_t n = 1; n <= maxlen; ++n) best = std::max(best, balance_between(wa, wb, n));
  return best;
}

bool is_balanced(const PrefixFn& u, std::size_t maxlen, std::size_t budget) {
  return balance(u, maxlen, budget) <= 1;
}

Morphism exchange_morphism() { return Morphism({{1}, {0}}); }
Morphism fib_morphism() { return Morphism({{0, 1}, {0}}); }
Morphism fib_morphism_mirror() { return Morphism({{1, 0}, {0}}); }
Morphism split_unit_first() { return Morphism({{0}, {0, 1}}); }
Morphism split_unit_last() { return Morphism({{0}, {1, 0}}); }

BaseMorphisms base_morphisms(const PisotBase& base) {
  const std::size_t m = static_cast<std::size_t>(base.m());
  const std::size_t n = static_cast<std::size_t>(base.n());
  BaseMorphisms out{Morphism(std::vector<Word>{{0}}),
                    Morphism(std::vector<Word>{{0}}, Orientation::Reversing),
                    {},
                    {},
                    {}};
  if (base.family() == Family::Plus) {
    out.phi = Morphism({wcat({zeros(m), {1}}), zeros(n)});
    if (m > n) {
      out.anti = Morphism({wcat({zeros(m - 1), {1}}), wcat({zeros(m + n - 1), {1}})},
                          Orientation::Reversing);
      out.splitter = split_unit_first();
      out.psi = Morphism({wcat({zeros(m + n), {1}, wpow(wcat({zeros(m), {1}}), m - 1)}),
                          wpow(wcat({zeros(m), {1}}), n)});
    } else {
      out.anti = Morphism({wcat({zeros(m), {1}}), zeros(m)}, Orientation::Reversing);
    }
  } else {
    out.phi = Morphism({wcat({zeros(m - 1), {1}}), wcat({zeros(m - n - 1), {1}})});
    out.anti = Morphism({wcat({zeros(m - 2), {1}}),
                         wcat({zeros(m - 2), {1}, zeros(m - n - 2), {1}})},
                        Orientation::Reversing);
    out.splitter = split_unit_last();
    Word head_part = wcat({zeros(m - 2), {1}, zeros(m - n - 1), {1}});
    Word block = wcat({zeros(m - 1), {1}});
    out.psi = Morphism({wcat({head_part, wpow(block, m - 2), {0}}),
                        wcat({head_part, wpow(block, m - n - 2), {0}})});
  }
  if (base.is_unit()) {
    std::vector<Morphism> fs;
    const Morphism E = exchange_morphism();
    const Morphism fb = fib_morphism();
    const Morphism fm = fib_morphism_mirror();
    auto push_pair = [&fs](const Morphism& a, const Morphism& b, std::size_t k) {
      for (std::size_t i = 0; i < k; ++i) {
        fs.push_back(a);
        fs.push_back(b);
      }
    };
    if (base.family() == Family::Plus && m == 1) {
      fs = {fb, fm};
    } else if (base.family() == Family::Plus) {
      push_pair(fb, E, m - 1);
      push_pair(E, fm, m);
      push_pair(fb, E, 1);
    } else {
      push_pair(fb, E, m - 3);
      push_pair(E, fm, 1);
      push_pair(fm, E, m - 2);
      push_pair(E, fm, 1);
      push_pair(fb, E, 1);
    }
    out.sturmian_factors = std::move(fs);
  }
  return out;
}

bool verify_intertwining(const Morphism& pi, const Morphism& sigma,
                         const Morphism& psi) {
  try {
    return compose(pi, sigma) == compose(psi, pi);
  } catch (const UnknownLetter&) {
    return false;
  }
}

}  // namespace negabeta
