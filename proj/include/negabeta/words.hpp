#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negabeta/algebraic.hpp"
#include "negabeta/errors.hpp"

namespace negabeta {

// Letters are small non-negative integers; a word is a finite letter sequence.
using Word = std::vector<int>;

Word word_from_string(const std::string& s);
std::string word_to_string(const Word& w);
Word wcat(std::initializer_list<Word> parts);
Word wpow(const Word& w, std::size_t k);
Word zeros(std::size_t k);

// A Reversing map concatenates letter images in reversed order, so the square
// of a Reversing map is Forward.
enum class Orientation { Forward, Reversing };

// Letter-to-word substitution rule on the alphabet {0, ..., k-1}. Image
// letters must stay inside the alphabet. Immutable.
class Morphism {
 public:
  explicit Morphism(std::vector<Word> images,
                    Orientation orientation = Orientation::Forward);

  int alphabet_size() const { return static_cast<int>(images_.size()); }
  Orientation orientation() const { return orientation_; }
  const Word& image(int letter) const;
  bool non_erasing() const;
  std::size_t max_image_length() const;

  Word operator()(const Word& w) const;

  friend bool operator==(const Morphism& a, const Morphism& b) = default;

 private:
  std::vector<Word> images_;
  Orientation orientation_;
};

Morphism identity_morphism(int alphabet_size);

// (f o g)(a) = f(g(a)); the orientation is the parity product.
Morphism compose(const Morphism& f, const Morphism& g);
// compose_all({f, g, h}) = f o g o h; the list must be non-empty.
Morphism compose_all(const std::vector<Morphism>& fs);

// M[i][j] counts occurrences of letter i in the image of letter j.
std::vector<std::vector<Integer>> incidence_matrix(const Morphism& f);

// Exact location of the non-dominant eigenvalue of a 2x2 incidence matrix
// relative to the unit circle, decided in integer arithmetic.
struct EigenvalueBound {
  std::vector<Integer> char_poly;  // c0 + c1 x + x^2
  bool complex_pair = false;
  bool second_in_unit_disc = false;
};
EigenvalueBound second_eigenvalue_bound(const Morphism& f);

// Prefix of the one-sided fixed point of a Forward map whose seed image
// starts with the seed. Prefixes are stable across calls with larger length.
Word fixed_point(const Morphism& f, int seed, std::size_t length);

// Bidirectional pointed word ... u(-2) u(-1) | u(0) u(1) ...; negative is
// stored left to right, so negative.back() sits just left of the delimiter.
struct PointedWord {
  Word negative;
  Word positive;
  int at(long long j) const;
};

// Bidirectional fixed point of a Reversing map f, grown through the Forward
// square f o f from the pointed seed ... seed_neg | seed_pos .... Convergence
// is checked, not assumed: seed conditions on the square, prefix/suffix
// stability of the iterates, and the fixed-point identity f(right prefix) =
// left suffix, f(left suffix) = right prefix on the generated stretch.
PointedWord pointed_fixed_point(const Morphism& f, int seed_pos, int seed_neg,
                                std::size_t length);

// Smallest w with |w| <= max_w and sigma(a) w = w psi(a) for every letter.
// Absence is a value; unequal incidence matrices short-circuit to absent.
std::optional<Word> right_conjugate_witness(const Morphism& sigma,
                                            const Morphism& psi,
                                            std::size_t max_w);
std::optional<Word> right_conjugate_witness(const Morphism& sigma,
                                            const Morphism& psi);

std::set<Word> factors(const Word& w, std::size_t len);

// Prefix suppliers feed the saturation protocol: factor data is accepted only
// when identical on prefixes of length budget and 2*budget, otherwise
// BudgetTooSmall. Suppliers must return stable prefixes.
using PrefixFn = std::function<Word(std::size_t)>;

PrefixFn fixed_point_prefixes(const Morphism& f, int seed);
PrefixFn antimorphism_positive_prefixes(const Morphism& f);
PrefixFn periodic_prefixes(Word pattern);
PrefixFn image_prefixes(const Morphism& f, PrefixFn base);

// Factor sets for lengths 1..maxlen (index n-1), each saturation-checked.
std::vector<std::set<Word>> saturated_factor_sets(const PrefixFn& u,
                                                  std::size_t maxlen,
                                                  std::size_t budget);
// Per-length factor-set equality for lengths 1..maxlen (index n-1).
std::vector<bool> language_equal(const PrefixFn& u, const PrefixFn& v,
                                 std::size_t maxlen, std::size_t budget);
std::size_t complexity(const PrefixFn& u, std::size_t n, std::size_t budget);

// Largest spread of per-letter counts over all length-n windows of w.
int max_imbalance(const Word& w, std::size_t n);
int balance_at(const PrefixFn& u, std::size_t n, std::size_t budget);
int balance(const PrefixFn& u, std::size_t maxlen, std::size_t budget);
bool is_balanced(const PrefixFn& u, std::size_t maxlen, std::size_t budget);

Morphism exchange_morphism();    // 0 -> 1,  1 -> 0
Morphism fib_morphism();         // 0 -> 01, 1 -> 0
Morphism fib_morphism_mirror();  // 0 -> 10, 1 -> 0
Morphism split_unit_first();     // 0 -> 0,  1 -> 01
Morphism split_unit_last();      // 0 -> 0,  1 -> 10

// Word machinery attached to a base: the canonical substitution phi fixing
// the coding of the nonnegative beta-integers, the antimorphism anti fixing
// the coding of the negative-base integers, the gap splitter used to compare
// the two codings (absent when both codings share gap lengths), the Forward
// morphism psi intertwined with anti^2 through the splitter (absent likewise),
// and for unit bases a decomposition of anti^2 into exchange/fib factors
// listed outermost first.
struct BaseMorphisms {
  Morphism phi;
  Morphism anti;
  std::optional<Morphism> splitter;
  std::optional<Morphism> psi;
  std::optional<std::vector<Morphism>> sturmian_factors;
};
BaseMorphisms base_morphisms(const PisotBase& base);

// Checks pi o sigma = psi o pi letterwise.
bool verify_intertwining(const Morphism& pi, const Morphism& sigma,
                         const Morphism& psi);

}  // namespace negabeta
