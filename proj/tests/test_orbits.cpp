#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coxshuffle/measures.hpp"
#include "coxshuffle/orbits.hpp"

using namespace coxshuffle;

namespace {

FqPoly P(int q, std::vector<int> c) { return FqPoly(make_field(q), std::move(c)); }

// Irreducible by dividing by every monic polynomial of degree 1..d/2.
bool brute_irreducible(const FqPoly& f) {
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    for (const auto& g : monic_polynomials(f.field(), k)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field axioms") {
  std::mt19937 rng(5);
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 125}) {
    CAPTURE(q);
    const auto F = make_field(q);
    CHECK(F->q() == q);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int t = 0; t < 300; ++t) {
      const int a = pick(rng);
      const int b = pick(rng);
      const int c = pick(rng);
      CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
      CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      // Frobenius is additive
      CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
    }
    // the generator has order q - 1
    int x = F->generator();
    int order = 1;
    while (x != 1) {
      x = F->mul(x, F->generator());
      ++order;
    }
    CHECK(order == q - 1);
    CHECK(F->pow(F->generator(), q - 1) == 1);
    CHECK_THROWS_AS((void)F->inv(0), std::domain_error);
  }
  CHECK_THROWS_AS(make_field(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(4, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("explicit modulus") {
  // z^2 + 1 is irreducible over F_3 but z^2 + 2 = (z-1)(z+1) is not
  FiniteField F9(3, std::vector<int>{1, 0, 1});
  CHECK(F9.q() == 9);
  CHECK(F9.mul(3, 3) == 2);  // t * t = -1
  CHECK_THROWS_AS(FiniteField(3, std::vector<int>{2, 0, 1}), std::invalid_argument);
}

TEST_CASE("factor examples") {
  const auto f = factor(P(5, {0, 4, 0, 1}));  // z^3 - z
  REQUIRE(f.factors.size() == 3);
  for (const auto& [g, m] : f.factors) {
    CHECK(g.degree() == 1);
    CHECK(m == 1);
  }
  const auto cubic = factor(P(2, {1, 1, 0, 1}));
  REQUIRE(cubic.factors.size() == 1);
  CHECK(cubic.factors[0].second == 1);
  const auto quartic = factor(P(3, {0, 0, 1, 0, 1}));  // z^4 + z^2
  REQUIRE(quartic.factors.size() == 2);
  CHECK(quartic.factors[0].first == P(3, {0, 1}));
  CHECK(quartic.factors[0].second == 2);
  CHECK(quartic.factors[1].first == P(3, {1, 0, 1}));
  CHECK(quartic.str() == "(z)^2 * (z^2 + 1)");
  CHECK_THROWS_AS(factor(P(3, {1, 2})), std::invalid_argument);
}

TEST_CASE("factorization recombines and has irreducible factors") {
  for (int q : {2, 3, 4, 5, 9}) {
    const auto F = make_field(q);
    for (int d = 1; d <= (q <= 3 ? 6 : 4); ++d) {
      for (const auto& f : monic_polynomials(F, d)) {
        const auto fm = factor(f);
        CHECK(fm.product(F) == f);
        for (const auto& [g, m] : fm.factors) {
          if (g.degree() <= 3) CHECK(brute_irreducible(g));
        }
      }
    }
  }
}

TEST_CASE("irreducible counts") {
  for (int q : {2, 3, 5, 7}) {
    const auto F = make_field(q);
    for (int m = 1; m <= 6; ++m) {
      CAPTURE(q);
      CAPTURE(m);
      CHECK(static_cast<std::int64_t>(F->irreducibles(m).size()) == irreducible_count_formula(q, m));
    }
  }
  // independent of the sieve
  for (int q : {2, 3}) {
    for (int m = 1; m <= 4; ++m) {
      std::int64_t count = 0;
      for (const auto& f : monic_polynomials(make_field(q), m)) count += brute_irreducible(f) ? 1 : 0;
      CHECK(count == irreducible_count_formula(q, m));
    }
  }
  CHECK(irreducible_count_formula(2, 4) == 3);
  CHECK(irreducible_count_formula(4, 2) == 6);
  CHECK(static_cast<std::int64_t>(make_field(4)->irreducibles(2).size()) == 6);
}

TEST_CASE("orbit enumeration") {
  const auto a = enumerate_orbits(OrbitFamily::parse("A", 2, 3));
  CHECK(a.size() == 3);
  for (const auto& f : a) {
    CHECK(f.degree() == 2);
    CHECK(f.coeff(1) == 0);
  }
  CHECK(enumerate_orbits(OrbitFamily::parse("A", 3, 7)).size() == 49);
  const auto b = enumerate_orbits(OrbitFamily::parse("B", 2, 3));
  CHECK(b.size() == 9);
  for (const auto& f : b) CHECK(f.negate_variable() == f);
  CHECK_THROWS_AS(enumerate_orbits(OrbitFamily::parse("B", 9, 7)), EnumerationBoundError);
  try {
    (void)enumerate_orbits(OrbitFamily::parse("A", 9, 7));
  } catch (const EnumerationBoundError& e) {
    CHECK(e.required == 5764801);
  }
  CHECK_THROWS(OrbitFamily::parse("C", 2, 3));
  CHECK_THROWS(OrbitFamily::parse("A", 2, 6));
}

TEST_CASE("phi_map examples") {
  const auto A3_5 = OrbitFamily::parse("A", 3, 5);
  CHECK(phi_map(A3_5, P(5, {0, 4, 0, 1})).str() == "(1 1 1)");
  CHECK(phi_map(OrbitFamily::parse("A", 3, 2), P(2, {1, 1, 0, 1})).str() == "(3)");
  const auto B2_3 = OrbitFamily::parse("B", 2, 3);
  const auto label = phi_map(B2_3, P(3, {0, 0, 1, 0, 1}));
  CHECK(label.lambda == Partition{1});
  CHECK(label.mu == Partition{1});
  CHECK_THROWS_AS(phi_map(A3_5, P(5, {0, 4, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(phi_map(B2_3, P(3, {0, 1, 1, 0, 1})), std::invalid_argument);
}

TEST_CASE("type B labels have size n") {
  for (int q : {3, 5, 9}) {
    for (int n = 1; n <= 3; ++n) {
      const auto fam = OrbitFamily::parse("B", n, q);
      for (const auto& f : enumerate_orbits(fam)) {
        const auto tv = type_vector(phi_map(fam, f), n);
        int size = 0;
        for (int i = 1; i <= n; ++i) size += i * (tv.lambda[static_cast<std::size_t>(i)] + tv.mu[static_cast<std::size_t>(i)]);
        CHECK(size == n);
      }
    }
  }
}

TEST_CASE("orbit distribution, A3 q=7 by hand") {
  // exhaustive factoring of the 49 trace-zero cubics
  std::map<std::string, int> counts;
  const auto F = make_field(7);
  for (int b = 0; b < 7; ++b) {
    for (int c = 0; c < 7; ++c) {
      const FqPoly f(F, {c, b, 0, 1});
      int roots = 0;
      for (int r = 0; r < 7; ++r) roots += f.eval(r) == 0 ? 1 : 0;
      const auto parts = factor(f).degree_partition();
      counts[partition_str(parts)]++;
      CHECK((roots == 0) == (parts == Partition{3}));
    }
  }
  const auto dist = orbit_class_distribution(OrbitFamily::parse("A", 3, 7));
  std::map<std::string, Rational> by_name;
  for (const auto& [label, v] : dist) by_name[label.str()] = v;
  CHECK(by_name["(1 1 1)"] == Rational(12, 49));
  CHECK(by_name["(2 1)"] == Rational(21, 49));
  CHECK(by_name["(3)"] == Rational(16, 49));
  CHECK(counts["(1 1 1)"] == 12);
  CHECK(counts["(2 1)"] == 21);
  CHECK(counts["(3)"] == 16);
}

TEST_CASE("orbit distributions match shuffle measures") {
  struct Case {
    const char* tag;
    int n;
    int q;
  };
  const std::vector<Case> cases{{"A", 2, 3}, {"A", 2, 5}, {"A", 2, 7}, {"A", 3, 5}, {"A", 3, 7}, {"A", 4, 5},
                                {"A", 4, 7}, {"A", 3, 4}, {"B", 1, 3}, {"B", 2, 3}, {"B", 2, 5}, {"B", 3, 3},
                                {"B", 3, 5}, {"B", 2, 9}};
  for (const auto& c : cases) {
    const auto fam = OrbitFamily::parse(c.tag, c.n, c.q);
    CAPTURE(fam.name());
    REQUIRE(fam.very_good());
    const auto g = analyze(fam.group_type());
    const auto expected = pushforward_classes(h_measure(g, Rational(c.q), Method::Definition));
    const auto got = orbit_class_distribution(fam, 2);
    std::map<ClassLabel, Rational> nonzero;
    for (const auto& [label, v] : expected) {
      if (!v.is_zero()) nonzero[label] = v;
    }
    CHECK(got == nonzero);
    const auto counts = orbit_class_counts(fam);
    const auto it = counts.find(identity_label(fam));
    REQUIRE(it != counts.end());
    CHECK(Rational(it->second) == identity_prediction(fam));
  }
}

TEST_CASE("split census with constant term one") {
  const auto c = split_census_constant_one(3, 5);
  CHECK(c.census == 5);
  CHECK(c.prediction == Rational(7));
  CHECK(c.mismatch());
  CHECK(split_census_constant_one(1, 7).census == 1);
  // (z - a)(z - b) with ab = 1, unordered: {1,1}, {2,2}, ... over F_3: {1,1}, {2,2}
  int pairs = 0;
  for (int a = 1; a < 3; ++a) {
    for (int b = a; b < 3; ++b) pairs += (a * b) % 3 == 1 ? 1 : 0;
  }
  CHECK(split_census_constant_one(2, 3).census == pairs);
}

TEST_CASE("translation invariance") {
  const auto r = translation_invariance_check(2, 3);
  CHECK(r.applicable);
  CHECK(r.invariant);
  CHECK(r.fibers.size() == 3);
  CHECK(translation_invariance_check(3, 5).invariant);
  CHECK(translation_invariance_check(4, 3).invariant);
  const auto skipped = translation_invariance_check(3, 3);
  CHECK_FALSE(skipped.applicable);
  CHECK(skipped.reason.find("hypothesis") != std::string::npos);
}
