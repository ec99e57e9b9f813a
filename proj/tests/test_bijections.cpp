#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "coxshuffle/bijections.hpp"
#include "coxshuffle/orbits.hpp"

using namespace coxshuffle;

namespace {

std::int64_t binom(std::int64_t top, int k) {
  if (top < k) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

FqPoly P(int q, std::vector<int> c) { return FqPoly(make_field(q), std::move(c)); }

// All multisets of primitive plain necklaces of total size n over {0..a-1}.
void necklace_multisets(int n, int a, std::vector<std::vector<ZWord>>& out) {
  std::vector<ZWord> atoms;
  for (int m = 1; m <= n; ++m) {
    ZWord w(static_cast<std::size_t>(m), 0);
    while (true) {
      const auto c = canonicalize_necklace(NecklaceKind::Plain, w);
      if (c.primitive && c.word == w) atoms.push_back(w);
      int k = 0;
      while (k < m && w[static_cast<std::size_t>(k)] == a - 1) w[static_cast<std::size_t>(k++)] = 0;
      if (k == m) break;
      ++w[static_cast<std::size_t>(k)];
    }
  }
  std::vector<ZWord> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (i == atoms.size()) return;
    const int sz = static_cast<int>(atoms[i].size());
    int copies = 0;
    rec(i + 1, left);
    while ((copies + 1) * sz <= left) {
      cur.push_back(atoms[i]);
      ++copies;
      rec(i + 1, left - copies * sz);
    }
    cur.resize(cur.size() - static_cast<std::size_t>(copies));
  };
  rec(0, n);
}

}  // namespace

TEST_CASE("necklace canonical forms") {
  CHECK(canonicalize_necklace(NecklaceKind::Plain, {0, 0, 1, 1}).primitive);
  CHECK_FALSE(canonicalize_necklace(NecklaceKind::Plain, {0, 1, 0, 1}).primitive);
  CHECK(canonicalize_necklace(NecklaceKind::Plain, {1, 0, 0, 1}).word == ZWord{0, 0, 1, 1});
  CHECK_FALSE(canonicalize_necklace(NecklaceKind::Twisted, {0}).primitive);
  const auto t = canonicalize_necklace(NecklaceKind::Twisted, {1});
  CHECK(t.primitive);
  CHECK(t.word == ZWord{-1});
  CHECK(t.orbit_size == 2);
  // (1, 1) -> (1, -1) -> (-1, -1) -> (-1, 1): free of order 4
  CHECK(canonicalize_necklace(NecklaceKind::Twisted, {1, 1}).orbit_size == 4);
  // (1, -1) under rotation is not fixed, its negation is a rotation
  const auto b = canonicalize_necklace(NecklaceKind::Blinking, {1, -1});
  CHECK(b.primitive);
  CHECK(b.orbit_size == 2);
  CHECK_FALSE(canonicalize_necklace(NecklaceKind::Blinking, {1, 1}).primitive);
  CHECK_THROWS(canonicalize_necklace(NecklaceKind::Plain, {}));
}

TEST_CASE("signed ornament counts") {
  CHECK(enumerate_signed_ornaments(1, 3).size() == 3);
  CHECK(enumerate_signed_ornaments(2, 3).size() == 9);
  CHECK(enumerate_signed_ornaments(1, 5).size() == 5);
  for (int q : {3, 5}) {
    std::int64_t expected = 1;
    for (int n = 1; n <= 3; ++n) {
      expected *= q;
      const auto all = enumerate_signed_ornaments(n, q);
      CHECK(static_cast<std::int64_t>(all.size()) == expected);
      CHECK(std::set<SignedOrnament>(all.begin(), all.end()).size() == all.size());
      for (const auto& o : all) {
        CHECK(o.size() == n);
        CHECK(o.max_entry() <= (q - 1) / 2);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_signed_ornaments(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_signed_ornaments(9, 7), EnumerationBoundError);
}

TEST_CASE("s-vector counts") {
  const auto b1 = analyze("B1");
  CHECK(s_vector_count(*b1, 0, 3) == 2);
  for (int n = 1; n <= 4; ++n) {
    const auto bn = analyze("B" + std::to_string(n));
    for (int q : {3, 5, 7}) {
      std::int64_t qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      std::int64_t total = 0;
      for (int w = 0; w < bn->order(); ++w) {
        const auto c = s_vector_count(*bn, w, q);
        CHECK(c == s_vector_count_brute_force(*bn, w, q));
        total += c;
      }
      CHECK(total == qn);
      CHECK(s_vector_count(*bn, bn->table().longest, q) == binom((q - 1) / 2, n));
    }
  }
  CHECK_THROWS_AS(s_vector_count(*analyze("A2"), 0, 3), std::invalid_argument);
}

TEST_CASE("ornament types match class sums") {
  for (int n = 1; n <= 3; ++n) {
    const auto bn = analyze("B" + std::to_string(n));
    const auto& t = bn->table();
    for (int q : {3, 5, 7}) {
      if (n == 3 && q == 7) continue;
      std::map<ClassLabel, std::int64_t> by_class;
      for (int w = 0; w < bn->order(); ++w) {
        by_class[t.classes[static_cast<std::size_t>(t.class_of[static_cast<std::size_t>(w)])].label] += s_vector_count(*bn, w, q);
      }
      std::map<ClassLabel, std::int64_t> by_type;
      for (const auto& o : enumerate_signed_ornaments(n, q)) ++by_type[o.type()];
      for (auto it = by_class.begin(); it != by_class.end();) it = it->second == 0 ? by_class.erase(it) : std::next(it);
      CHECK(by_class == by_type);
    }
  }
}

TEST_CASE("Gessel-Reutenauer examples") {
  const auto w = gessel_reutenauer(parse_necklace_list("12,12,2,23,23233"));
  CHECK(cycle_string(w) == "(1 3)(2 4)(5)(6 9)(7 11 8 12 10)");
  CHECK(gessel_reutenauer({{0}}) == std::vector<int>{1});
  CHECK(gessel_reutenauer({{0}, {1}}) == std::vector<int>{1, 2});
  CHECK(cycle_string({2, 1, 3}) == "(1 2)(3)");
  CHECK(parse_necklace_list("(10 2),3") == std::vector<ZWord>{{10, 2}, {3}});
  CHECK_THROWS(parse_necklace_list("1a"));
}

TEST_CASE("Gessel-Reutenauer with letters is injective and keeps cycle type") {
  for (int a : {2, 3}) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::vector<ZWord>> all;
      necklace_multisets(n, a, all);
      // the permutation together with the sorted letters recovers the multiset
      std::set<std::pair<std::vector<int>, std::vector<int>>> images;
      for (const auto& ms : all) {
        const auto w = gessel_reutenauer(ms);
        std::vector<int> sizes;
        std::vector<int> letters;
        for (const auto& nk : ms) {
          sizes.push_back(static_cast<int>(nk.size()));
          letters.insert(letters.end(), nk.begin(), nk.end());
        }
        std::sort(letters.begin(), letters.end());
        CHECK(cycle_type(w) == make_partition(sizes));
        images.emplace(w, letters);
      }
      CHECK(images.size() == all.size());
      // total count of multisets is a^n (the words of length n)
      std::int64_t an = 1;
      for (int i = 0; i < n; ++i) an *= a;
      CHECK(static_cast<std::int64_t>(all.size()) == an);
    }
  }
}

TEST_CASE("Golomb encoding") {
  CHECK(golomb_encode(P(3, {2, 1})) == ZWord{0});  // z - 1
  const auto F7 = make_field(7);
  const int beta = F7->generator();
  CHECK(golomb_encode(FqPoly::linear(F7, beta), beta) == ZWord{1});
  // z^2 + 1 over F_3: the two roots have logs differing by 4, a digit rotation
  const auto F9 = make_field(3, 2);
  const FqPoly phi = P(3, {1, 0, 1});
  std::vector<int> logs;
  for (int x = 0; x < 9; ++x) {
    if (F9->add(F9->mul(x, x), 1) == 0) logs.push_back(F9->log(x));
  }
  REQUIRE(logs.size() == 2);
  CHECK((logs[1] - logs[0] + 8) % 8 == 4);
  const auto enc = golomb_encode(phi);
  CHECK(canonicalize_necklace(NecklaceKind::Plain, enc).primitive);
  for (int L : logs) {
    CHECK(canonicalize_necklace(NecklaceKind::Plain, {L % 3, L / 3}).word == enc);
  }
  CHECK_THROWS_AS(golomb_encode(P(3, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(golomb_encode(P(3, {2, 0, 1})), std::invalid_argument);
  int non_generator = 1;
  CHECK_THROWS_AS(golomb_encode(phi, non_generator), std::invalid_argument);
}

TEST_CASE("Golomb is a bijection onto primitive necklaces") {
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 4; ++m) {
      if (p == 5 && m == 4) continue;
      const auto F = make_field(p);
      std::set<ZWord> images;
      std::int64_t count = 0;
      for (const auto& coeffs : F->irreducibles(m)) {
        const FqPoly phi(F, coeffs);
        if (m == 1 && coeffs[0] == 0) continue;
        const auto w = golomb_encode(phi);
        CHECK(canonicalize_necklace(NecklaceKind::Plain, w).primitive);
        images.insert(w);
        ++count;
      }
      CHECK(static_cast<std::int64_t>(images.size()) == count);
      const bool reserved = images.count(ZWord{p - 1}) > 0;
      CHECK_FALSE(reserved);
      CHECK(count == irreducible_count_formula(p, m) - (m == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("normal bases") {
  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}, {2, 3}, {5, 2}, {3, 4}, {7, 3}}) {
    const int alpha = normal_basis(q, m);
    const auto F = make_field(q, m);
    // every element has unique coordinates that rebuild it
    for (int x = 0; x < F->q(); x += std::max(1, F->q() / 50)) {
      const auto c = normal_coordinates(*F, alpha, x);
      int back = 0;
      int conj = alpha;
      for (int j = 0; j < m; ++j) {
        back = F->add(back, F->mul(c[static_cast<std::size_t>(j)], conj));
        conj = F->frobenius(conj);
      }
      CHECK(back == x);
    }
  }
  // F_4: only the two elements outside F_2 are normal
  const auto F4 = make_field(2, 2);
  const int a = normal_basis(2, 2);
  CHECK(a >= 2);
  CHECK(F4->frobenius(a) != a);
  CHECK(normal_basis(3, 1) == 1);
  CHECK_THROWS_AS(normal_basis(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(normal_basis(7, 7), std::invalid_argument);
}

TEST_CASE("ornaments from polynomials") {
  CHECK(ornament_from_polynomial(P(3, {0, 0, 1})).blinking == std::vector<ZWord>{{0}});
  const auto o = ornament_from_polynomial(P(3, {1, 0, 1}));
  CHECK(o.twisted.size() == 1);
  CHECK(o.blinking.empty());
  CHECK(o.type() == phi_map(OrbitFamily::parse("B", 1, 3), P(3, {1, 0, 1})));
  for (int q : {3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      const auto fam = OrbitFamily::parse("B", n, q);
      std::set<SignedOrnament> images;
      for (const auto& f : enumerate_orbits(fam)) {
        const auto orn = ornament_from_polynomial(f);
        CHECK(orn.type() == phi_map(fam, f));
        CHECK(orn.size() == n);
        CHECK(orn.max_entry() <= (q - 1) / 2);
        images.insert(orn);
      }
      const auto all = enumerate_signed_ornaments(n, q);
      CHECK(images == std::set<SignedOrnament>(all.begin(), all.end()));
    }
  }
  CHECK_THROWS_AS(ornament_from_polynomial(P(3, {0, 1, 1})), std::invalid_argument);
}

TEST_CASE("refinement of the type A map") {
  const auto F5 = make_field(5);
  CHECK(refine_phi_A(P(5, {4, 3, 2, 1}), RefineMode::Golomb) == std::vector<int>{1, 2, 3});  // (z-1)^3
  const FqPoly f = P(5, {4, 4, 0, 1});  // z^3 - z - 1
  if (is_irreducible(f)) CHECK(cycle_type(refine_phi_A(f, RefineMode::Golomb)) == Partition{3});
  CHECK_THROWS_AS(refine_phi_A(P(5, {0, 1, 0, 1}), RefineMode::Golomb), std::invalid_argument);
  CHECK_NOTHROW(refine_phi_A(P(5, {0, 1, 0, 1}), RefineMode::NormalBasis));

  for (auto mode : {RefineMode::Golomb, RefineMode::NormalBasis}) {
    for (int p : {2, 3, 5}) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& g : monic_polynomials(make_field(p), n)) {
          CHECK(cycle_type(refine_phi_A(g, mode, true)) == make_partition(factor(g).degree_partition()));
        }
      }
    }
  }
}

TEST_CASE("refinement censuses") {
  struct Case {
    int n;
    int p;
  };
  for (auto mode : {RefineMode::Golomb, RefineMode::NormalBasis}) {
    for (const auto& c : {Case{3, 5}, Case{1, 3}, Case{2, 3}, Case{3, 3}, Case{4, 3}, Case{3, 2}, Case{4, 2}}) {
      CAPTURE(c.n);
      CAPTURE(c.p);
      const auto census = refine_census(c.n, c.p, mode);
      const auto g = c.n >= 2 ? analyze("A" + std::to_string(c.n - 1)) : nullptr;
      std::int64_t total = 0;
      for (const auto& [w, count] : census) total += count;
      std::int64_t pn = 1;
      for (int i = 0; i < c.n; ++i) pn *= c.p;
      CHECK(total == pn);
      if (!g) continue;
      for (int e = 0; e < g->order(); ++e) {
        const auto& form = g->table().one_line[static_cast<std::size_t>(e)];
        const auto it = census.find(form);
        const std::int64_t got = it == census.end() ? 0 : it->second;
        const int d = popcount(g->table().descents[static_cast<std::size_t>(e)]);
        CHECK(got == binom(c.p + c.n - 1 - d, c.n));
      }
    }
  }
}
