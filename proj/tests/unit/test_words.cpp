#include <algorithm>
#include <vector>

#include "doctest.h"
#include "negabeta/words.hpp"

using namespace negabeta;

namespace {

std::vector<std::vector<Integer>> mat_mul(const std::vector<std::vector<Integer>>& a,
                                          const std::vector<std::vector<Integer>>& b) {
  const std::size_t k = a.size();
  std::vector<std::vector<Integer>> c(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Word W(const std::string& s) { return word_from_string(s); }

}  // namespace

TEST_CASE("morphism application respects orientation") {
  Morphism phi({{0, 1}, {0}});
  CHECK(phi(W("01")) == W("010"));
  CHECK(phi(Word{}) == Word{});

  Morphism anti({{0, 1}, {0}}, Orientation::Reversing);
  CHECK(anti(W("01")) == W("001"));
  CHECK(anti(Word{}) == Word{});

  CHECK_THROWS_AS(phi(Word{2}), UnknownLetter);
  CHECK_THROWS_AS(phi.image(-1), UnknownLetter);
  CHECK_THROWS_AS(Morphism({{0, 2}, {0}}), UnknownLetter);
  CHECK_THROWS_AS(Morphism(std::vector<Word>{}), ConstraintViolation);
  CHECK(word_to_string(W("0102")) == "0102");
}

TEST_CASE("composition multiplies orientation parity") {
  Morphism E = exchange_morphism();
  CHECK(compose(E, E) == identity_morphism(2));

  Morphism anti({{0, 1}, {0}}, Orientation::Reversing);
  Morphism sq = compose(anti, anti);
  CHECK(sq.orientation() == Orientation::Forward);
  CHECK(sq.image(0) == W("001"));
  CHECK(sq.image(1) == W("01"));
  CHECK(sq == compose(fib_morphism(), fib_morphism_mirror()));

  CHECK(compose(anti, fib_morphism()).orientation() == Orientation::Reversing);
  CHECK(compose(fib_morphism(), anti).orientation() == Orientation::Reversing);

  for (std::size_t m : {1u, 2u, 3u}) {
    Morphism am({wcat({zeros(m), {1}}), zeros(m)}, Orientation::Reversing);
    Morphism am2 = compose(am, am);
    CHECK(am2.image(0) == wcat({zeros(m), wpow(wcat({zeros(m), {1}}), m)}));
    CHECK(am2.image(1) == wpow(wcat({zeros(m), {1}}), m));
    Word probe = W("0110100");
    CHECK(am2(probe) == am(am(probe)));
  }
}

TEST_CASE("incidence matrices count letters and are multiplicative") {
  auto M = incidence_matrix(fib_morphism());
  CHECK(M == std::vector<std::vector<Integer>>{{1, 1}, {1, 0}});
  CHECK(incidence_matrix(identity_morphism(3)) ==
        std::vector<std::vector<Integer>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  Morphism anti({{0, 0, 1}, {0, 0, 0, 1}}, Orientation::Reversing);
  CHECK(incidence_matrix(compose(anti, anti)) ==
        mat_mul(incidence_matrix(anti), incidence_matrix(anti)));
}

TEST_CASE("second eigenvalue location is decided exactly") {
  auto fib = second_eigenvalue_bound(fib_morphism());
  CHECK(fib.char_poly == std::vector<Integer>{-1, -1, 1});
  CHECK_FALSE(fib.complex_pair);
  CHECK(fib.second_in_unit_disc);

  CHECK_FALSE(second_eigenvalue_bound(identity_morphism(2)).second_in_unit_disc);
  CHECK_FALSE(second_eigenvalue_bound(exchange_morphism()).second_in_unit_disc);

  // eigenvalues 3 and 1: the boundary case must fail the strict test
  Morphism edge({{0, 0, 1}, {0, 1, 1}});
  CHECK_FALSE(second_eigenvalue_bound(edge).second_in_unit_disc);

  // canonical maps of both families have their conjugate inside the disc
  for (auto [fam, m, n] : std::vector<std::tuple<Family, long, long>>{
           {Family::Plus, 3, 1}, {Family::Plus, 2, 2}, {Family::Minus, 4, 1}, {Family::Minus, 5, 2}}) {
    auto bm = base_morphisms(make_base(fam, m, n));
    auto eb = second_eigenvalue_bound(bm.phi);
    CHECK(eb.second_in_unit_disc);
    long c0 = fam == Family::Plus ? -n : n;
    CHECK(eb.char_poly == std::vector<Integer>{c0, -m, 1});
  }

  CHECK_THROWS_AS(second_eigenvalue_bound(identity_morphism(3)), DegreeMismatch);
}

TEST_CASE("one-sided fixed points grow stably") {
  Morphism phi = fib_morphism();
  CHECK(fixed_point(phi, 0, 8) == W("01001010"));
  Word longer = fixed_point(phi, 0, 200);
  Word shorter = fixed_point(phi, 0, 21);
  CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  CHECK(fixed_point(phi, 0, 1) == Word{0});

  // fixed-point property on the stable prefix
  Word image = phi(longer);
  CHECK(std::equal(longer.begin(), longer.end(), image.begin()));

  CHECK_THROWS_AS(fixed_point(phi, 1, 4), NotProlongable);
  CHECK_THROWS_AS(fixed_point(Morphism({{0}, {1, 0}}), 0, 5), NotProlongable);
  CHECK_THROWS_AS(fixed_point(Morphism({{0, 1}, {0}}, Orientation::Reversing), 0, 4),
                  ConstraintViolation);
  CHECK_THROWS_AS(fixed_point(Morphism({{0, 1}, {}}), 0, 4), ConstraintViolation);
}

TEST_CASE("pointed fixed points converge from both seeds") {
  Morphism anti({{0, 1}, {0}}, Orientation::Reversing);
  PointedWord pw = pointed_fixed_point(anti, 0, 1, 500);
  REQUIRE(pw.positive.size() == 500);
  REQUIRE(pw.negative.size() == 500);

  CHECK(Word(pw.positive.begin(), pw.positive.begin() + 8) == W("00100101"));
  CHECK(Word(pw.negative.end() - 5, pw.negative.end()) == W("00101"));

  // positive side equals 0 followed by the one-sided fixed point
  Word fib = fixed_point(fib_morphism(), 0, 499);
  Word expect = wcat({{0}, fib});
  CHECK(pw.positive == expect);

  CHECK(pw.at(0) == 0);
  CHECK(pw.at(2) == 1);
  CHECK(pw.at(-1) == 1);
  CHECK(pw.at(-2) == 0);
  CHECK(pw.at(-3) == 1);
  CHECK_THROWS_AS(pw.at(500), OutOfDomain);
  CHECK_THROWS_AS(pw.at(-501), OutOfDomain);

  // stability under regeneration
  PointedWord small = pointed_fixed_point(anti, 0, 1, 100);
  CHECK(std::equal(small.positive.begin(), small.positive.end(), pw.positive.begin()));
  CHECK(std::equal(small.negative.rbegin(), small.negative.rend(), pw.negative.rbegin()));

  // antimorphism fixed-point identity on the stable stretch
  Word a = anti(Word(pw.positive.begin(), pw.positive.begin() + 40));
  REQUIRE(a.size() <= pw.negative.size());
  CHECK(std::equal(a.rbegin(), a.rend(), pw.negative.rbegin()));

  CHECK_THROWS_AS(pointed_fixed_point(Morphism({{1, 0}, {0}}, Orientation::Reversing), 0, 1, 10),
                  NotProlongable);
  CHECK_THROWS_AS(pointed_fixed_point(fib_morphism(), 0, 1, 10), ConstraintViolation);

  // non-unit case with a letter-erasing-free antimorphism whose images differ
  auto bm = base_morphisms(make_base(Family::Plus, 2, 2));
  PointedWord pw2 = pointed_fixed_point(bm.anti, 0, 1, 300);
  CHECK(Word(pw2.positive.begin(), pw2.positive.begin() + 8) == W("00001001"));
}

TEST_CASE("right conjugacy witnesses are found or absent") {
  Morphism sig = compose(fib_morphism(), fib_morphism());
  CHECK(sig.image(0) == W("010"));
  CHECK(sig.image(1) == W("01"));
  Morphism anti({{0, 1}, {0}}, Orientation::Reversing);
  Morphism psi = compose(anti, anti);

  CHECK(right_conjugate_witness(sig, psi) == W("01"));
  CHECK(right_conjugate_witness(sig, sig) == Word{});
  CHECK(right_conjugate_witness(sig, psi, 1) == std::nullopt);
  CHECK(right_conjugate_witness(fib_morphism(), exchange_morphism()) == std::nullopt);

  // equal-gap family: the antimorphism square is conjugate to the substitution square
  for (long m : {1L, 2L, 3L}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, m));
    Morphism phi2 = compose(bm.phi, bm.phi);
    Morphism anti2 = compose(bm.anti, bm.anti);
    CHECK(incidence_matrix(phi2) == incidence_matrix(anti2));
    auto w = right_conjugate_witness(phi2, anti2);
    REQUIRE(w.has_value());
    CHECK(*w == wpow(wcat({zeros(static_cast<std::size_t>(m)), {1}}), static_cast<std::size_t>(m)));
  }

  // distinct-gap positive family: psi is conjugate to the substitution square
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, n));
    Morphism phi2 = compose(bm.phi, bm.phi);
    REQUIRE(bm.psi.has_value());
    auto w = right_conjugate_witness(phi2, *bm.psi);
    REQUIRE(w.has_value());
    CHECK(*w == wpow(wcat({zeros(static_cast<std::size_t>(m)), {1}}), static_cast<std::size_t>(m)));
    // the antimorphism square itself is not conjugate: matrices differ
    CHECK(right_conjugate_witness(phi2, compose(bm.anti, bm.anti)) == std::nullopt);
  }

  // negative-coefficient family: the substitution square is conjugate to psi
  for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {4, 2}}) {
    auto bm = base_morphisms(make_base(Family::Minus, m, n));
    Morphism phi2 = compose(bm.phi, bm.phi);
    REQUIRE(bm.psi.has_value());
    auto w = right_conjugate_witness(*bm.psi, phi2);
    REQUIRE(w.has_value());
    CHECK(*w == wcat({zeros(static_cast<std::size_t>(m - 2)), {1},
                      zeros(static_cast<std::size_t>(m - n - 1)), {1}}));
  }
}

TEST_CASE("factor sets and language comparison saturate honestly") {
  CHECK(factors(W("0010"), 2) == std::set<Word>{W("00"), W("01"), W("10")});
  CHECK(factors(W("0010"), 5).empty());

  PrefixFn u_tau = fixed_point_prefixes(fib_morphism(), 0);
  auto sets = saturated_factor_sets(u_tau, 10, 512);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(sets[n - 1].size() == n + 1);

  auto self = language_equal(u_tau, u_tau, 12, 512);
  CHECK(std::all_of(self.begin(), self.end(), [](bool b) { return b; }));

  Morphism anti_tau({{0, 1}, {0}}, Orientation::Reversing);
  PrefixFn u_neg = antimorphism_positive_prefixes(anti_tau);
  auto eq = language_equal(u_tau, u_neg, 30, 4096);
  CHECK(std::all_of(eq.begin(), eq.end(), [](bool b) { return b; }));

  // a word whose factor sets keep growing forces the budget error
  PrefixFn sparse = [](std::size_t length) {
    Word w(length, 0);
    for (std::size_t p = 1; p < length; p *= 2) w[p] = 1;
    return w;
  };
  CHECK_THROWS_AS(saturated_factor_sets(sparse, 8, 16), BudgetTooSmall);
  CHECK_THROWS_AS(saturated_factor_sets(u_tau, 30, 10), BudgetTooSmall);
}

TEST_CASE("complexity and balance at desk scale") {
  PrefixFn u_tau = fixed_point_prefixes(fib_morphism(), 0);
  for (std::size_t n : {1u, 2u, 5u, 20u, 50u}) CHECK(complexity(u_tau, n, 1024) == n + 1);
  CHECK(balance(u_tau, 30, 2048) == 1);
  CHECK(is_balanced(u_tau, 30, 2048));

  PrefixFn zeros_word = periodic_prefixes({0});
  CHECK(complexity(zeros_word, 7, 64) == 1);
  CHECK(balance(zeros_word, 10, 64) == 0);

  CHECK(max_imbalance(W("10010000"), 4) == 2);

  // equal-coefficient base: the negative-side word is not 1-balanced
  auto bm = base_morphisms(make_base(Family::Plus, 2, 2));
  PrefixFn u_neg = antimorphism_positive_prefixes(bm.anti);
  auto f4 = saturated_factor_sets(u_neg, 4, 1024)[3];
  CHECK(f4.count(W("1001")) == 1);
  CHECK(f4.count(W("0000")) == 1);
  CHECK(balance_at(u_neg, 4, 1024) == 2);
  CHECK_FALSE(is_balanced(u_neg, 4, 1024));

  // unit negative-coefficient base stays Sturmian
  auto bm31 = base_morphisms(make_base(Family::Minus, 3, 1));
  PrefixFn u31 = antimorphism_positive_prefixes(bm31.anti);
  CHECK(balance(u31, 10, 4096) == 1);
  for (std::size_t n : {1u, 2u, 10u}) CHECK(complexity(u31, n, 1024) == n + 1);
}

TEST_CASE("base morphism catalogue matches the closed forms") {
  auto p21 = base_morphisms(make_base(Family::Plus, 2, 1));
  CHECK(p21.phi.image(0) == W("001"));
  CHECK(p21.phi.image(1) == W("0"));
  CHECK(p21.anti.orientation() == Orientation::Reversing);
  CHECK(p21.anti.image(0) == W("01"));
  CHECK(p21.anti.image(1) == W("001"));
  REQUIRE(p21.splitter.has_value());
  CHECK(*p21.splitter == split_unit_first());
  REQUIRE(p21.psi.has_value());
  CHECK(p21.psi->image(0) == W("0001001"));
  CHECK(p21.psi->image(1) == W("001"));

  auto p22 = base_morphisms(make_base(Family::Plus, 2, 2));
  CHECK(p22.anti.image(0) == W("001"));
  CHECK(p22.anti.image(1) == W("00"));
  CHECK_FALSE(p22.splitter.has_value());
  CHECK_FALSE(p22.psi.has_value());
  CHECK_FALSE(p22.sturmian_factors.has_value());

  auto m42 = base_morphisms(make_base(Family::Minus, 4, 2));
  CHECK(m42.phi.image(0) == W("0001"));
  CHECK(m42.phi.image(1) == W("01"));
  CHECK(m42.anti.image(0) == W("001"));
  CHECK(m42.anti.image(1) == W("0011"));
  REQUIRE(m42.splitter.has_value());
  CHECK(*m42.splitter == split_unit_last());
  REQUIRE(m42.psi.has_value());
  CHECK(m42.psi->image(0) == W("00101000100010"));
  CHECK(m42.psi->image(1) == W("001010"));

  auto m31 = base_morphisms(make_base(Family::Minus, 3, 1));
  CHECK(m31.anti.image(0) == W("01"));
  CHECK(m31.anti.image(1) == W("011"));
  CHECK(m31.psi->image(0) == W("01010010"));
  CHECK(m31.psi->image(1) == W("01010"));
}

TEST_CASE("sturmian decompositions reproduce the antimorphism square") {
  // growing family of unit bases across both signs, exponents down to zero
  std::vector<PisotBase> bases;
  for (long m = 1; m <= 5; ++m) bases.push_back(make_base(Family::Plus, m, 1));
  for (long m = 3; m <= 5; ++m) bases.push_back(make_base(Family::Minus, m, 1));
  for (const PisotBase& base : bases) {
    auto bm = base_morphisms(base);
    REQUIRE(bm.sturmian_factors.has_value());
    Morphism built = compose_all(*bm.sturmian_factors);
    CHECK(built == compose(bm.anti, bm.anti));
  }

  auto p11 = base_morphisms(make_base(Family::Plus, 1, 1));
  REQUIRE(p11.sturmian_factors.has_value());
  CHECK(p11.sturmian_factors->size() == 2);
  CHECK((*p11.sturmian_factors)[0] == fib_morphism());
  CHECK((*p11.sturmian_factors)[1] == fib_morphism_mirror());
}

TEST_CASE("intertwining relations hold letterwise") {
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, n));
    CHECK(verify_intertwining(split_unit_first(), compose(bm.anti, bm.anti), *bm.psi));
  }
  for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    auto bm = base_morphisms(make_base(Family::Minus, m, n));
    CHECK(verify_intertwining(split_unit_last(), compose(bm.anti, bm.anti), *bm.psi));
  }
  // unit positive bases intertwine the antimorphism square with the substitution square
  for (long m : {2L, 3L, 4L, 5L}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, 1));
    CHECK(verify_intertwining(split_unit_last(), compose(bm.anti, bm.anti),
                              compose(bm.phi, bm.phi)));
  }
  CHECK_FALSE(verify_intertwining(identity_morphism(2), fib_morphism(), exchange_morphism()));
}

TEST_CASE("split images of the negative-side word match the positive language") {
  // distinct-gap positive base: unit-first splitting
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, n));
    PrefixFn u_pos = fixed_point_prefixes(bm.phi, 0);
    PrefixFn u_neg = image_prefixes(*bm.splitter, antimorphism_positive_prefixes(bm.anti));
    auto eq = language_equal(u_pos, u_neg, 20, 4096);
    CHECK(std::all_of(eq.begin(), eq.end(), [](bool b) { return b; }));
  }
  // negative-coefficient base: unit-last splitting
  for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 1}, {4, 2}}) {
    auto bm = base_morphisms(make_base(Family::Minus, m, n));
    PrefixFn u_pos = fixed_point_prefixes(bm.phi, 0);
    PrefixFn u_neg = image_prefixes(*bm.splitter, antimorphism_positive_prefixes(bm.anti));
    auto eq = language_equal(u_pos, u_neg, 20, 4096);
    CHECK(std::all_of(eq.begin(), eq.end(), [](bool b) { return b; }));
  }
  // equal-gap base: no splitting needed
  for (long m : {1L, 2L}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, m));
    PrefixFn u_pos = fixed_point_prefixes(bm.phi, 0);
    PrefixFn u_neg = antimorphism_positive_prefixes(bm.anti);
    auto eq = language_equal(u_pos, u_neg, 20, 4096);
    CHECK(std::all_of(eq.begin(), eq.end(), [](bool b) { return b; }));
  }
  // unit positive base: the split image IS the positive word, letter for letter
  for (long m : {2L, 3L}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, 1));
    PrefixFn u_pos = fixed_point_prefixes(bm.phi, 0);
    PrefixFn split = image_prefixes(split_unit_last(), antimorphism_positive_prefixes(bm.anti));
    CHECK(u_pos(400) == split(400));
  }
}

TEST_CASE("conjugate primitive morphisms share their fixed-point language") {
  std::vector<std::pair<Morphism, Morphism>> pairs;
  for (long m : {1L, 2L, 3L}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, m));
    pairs.emplace_back(compose(bm.phi, bm.phi), compose(bm.anti, bm.anti));
  }
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto bm = base_morphisms(make_base(Family::Plus, m, n));
    pairs.emplace_back(compose(bm.phi, bm.phi), *bm.psi);
  }
  for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {4, 2}}) {
    auto bm = base_morphisms(make_base(Family::Minus, m, n));
    pairs.emplace_back(compose(bm.phi, bm.phi), *bm.psi);
  }
  for (const auto& [sig, psi] : pairs) {
    CHECK(incidence_matrix(sig) == incidence_matrix(psi));
    auto eq = language_equal(fixed_point_prefixes(sig, 0), fixed_point_prefixes(psi, 0), 30, 8192);
    CHECK(std::all_of(eq.begin(), eq.end(), [](bool b) { return b; }));
  }
}
