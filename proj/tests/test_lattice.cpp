#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "coxshuffle/affine.hpp"
#include "coxshuffle/analysis.hpp"

using namespace coxshuffle;

namespace {

template <class F>
auto with_rational_group(const char* name, F f) {
  auto g = build_group(CoxeterType::parse(name));
  return f(std::get<CoxeterGroup<Rational>>(g));
}

// Brute-force oracle: w normalizes W_K iff w x w^{-1} lies in W_K for every x in W_K.
int brute_normalizer(const GroupTable& g, DescentSet K) {
  const auto members = parabolic_elements(g, K);
  int count = 0;
  for (int w = 0; w < g.order(); ++w) {
    bool ok = true;
    for (int x : members) {
      const int c = g.multiply(g.multiply(w, x), g.inverse[static_cast<std::size_t>(w)]);
      if (!std::binary_search(members.begin(), members.end(), c)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("parabolic data examples") {
  with_rational_group("A2", [](const CoxeterGroup<Rational>& g) {
    const auto empty = parabolic_data(g, 0);
    CHECK(empty.info.subgroup_order == 1);
    CHECK(empty.fixed_space.dim() == 2);
    CHECK(empty.info.normalizer_order == 6);
    CHECK(empty.info.lambda_count == 1);

    const auto full = parabolic_data(g, 3);
    CHECK(full.info.subgroup_order == 6);
    CHECK(full.fixed_space.dim() == 0);
    CHECK(full.info.lambda_count == 1);

    const auto a1 = parabolic_data(g, 1);
    CHECK(a1.info.subgroup_order == 2);
    CHECK(a1.info.normalizer_order == brute_normalizer(g, 1));
    CHECK(a1.info.normalizer_order == 2);
    CHECK(a1.info.lambda_count == 2);
    return 0;
  });
}

TEST_CASE("parabolic invariants") {
  for (const char* name : {"A3", "B3", "G2", "H3", "D4", "I2(6)"}) {
    CAPTURE(name);
    const auto group = build_group(CoxeterType::parse(name));
    const auto& g = table_of(group);
    const auto infos = all_parabolics(g);
    int class_sum = 0;
    std::map<DescentSet, int> class_sizes;
    std::map<DescentSet, Rational> class_index;
    for (const auto& p : infos) {
      CHECK(g.order() % p.subgroup_order == 0);
      CHECK(p.normalizer_order % p.subgroup_order == 0);
      CHECK(p.lambda_count >= 1);
      CHECK(p.normalizer_order == brute_normalizer(g, p.K));
      ++class_sizes[p.conjugacy_rep];
      class_index[p.conjugacy_rep] += Rational(g.order() / p.normalizer_order, p.lambda_count);
    }
    for (const auto& [rep, size] : class_sizes) {
      CHECK(infos[rep].lambda_count == size);
      CHECK(class_index[rep].is_integer());
      class_sum += infos[rep].lambda_count;
    }
    CHECK(class_sum == (1 << g.rank));
  }
}

TEST_CASE("affine data") {
  const auto a1 = affine_data(build_root_system(CoxeterType::parse("A1")));
  CHECK(a1.marks == std::vector<int>{1, 1});
  CHECK(a1.index_of_connection == 2);
  for (int r = 1; r <= 5; ++r) {
    CHECK(affine_data(build_root_system(CoxeterType{Family::A, r, 0})).index_of_connection == r + 1);
  }
  const auto g2 = affine_data(build_root_system(CoxeterType::parse("G2")));
  CHECK(std::count(g2.marks.begin(), g2.marks.end(), 3) == 1);
  CHECK(g2.index_of_connection == 1);
  const auto b3 = affine_data(build_root_system(CoxeterType::parse("B3")));
  CHECK(b3.index_of_connection == 2);
  const auto d4 = affine_data(build_root_system(CoxeterType::parse("D4")));
  CHECK(d4.index_of_connection == 4);
  CHECK(d4.marks == std::vector<int>{1, 1, 2, 1, 1});
  CHECK_THROWS_AS(affine_data(build_root_system(CoxeterType::parse("H3"))), NoAffineData);

  // sum c_a a = 0 with a0 = -theta, i.e. theta has coefficients c_1..c_r
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    const auto rs = build_root_system(CoxeterType::parse(name));
    const auto ad = affine_data(rs);
    const auto& roots = std::get<RootSystem<Rational>>(rs).positive_roots;
    bool found = false;
    for (const auto& root : roots) {
      bool eq = true;
      for (Eigen::Index i = 0; i < root.size(); ++i) eq = eq && root(i) == Rational(ad.marks[static_cast<std::size_t>(i + 1)]);
      found = found || eq;
    }
    CHECK(found);
  }
}

TEST_CASE("p_count") {
  const auto a1 = affine_data(build_root_system(CoxeterType::parse("A1")));
  CHECK(p_count(a1, 0b10, 5) == 1);
  CHECK(p_count(a1, 0b00, 5) == 4);
  const auto a2 = affine_data(build_root_system(CoxeterType::parse("A2")));
  CHECK(p_count(a2, 0, 4) == 3);
  for (const char* name : {"A3", "B3", "G2"}) {
    const auto ad = affine_data(build_root_system(CoxeterType::parse(name)));
    for (std::uint32_t S = 0; S + 1 < (1u << ad.extended_size()); ++S) {
      for (int x = 1; x <= 13; ++x) CHECK(p_count(ad, S, x) == p_count_brute_force(ad, S, x));
    }
  }
}

TEST_CASE("lattice examples") {
  with_rational_group("A2", [](const CoxeterGroup<Rational>& g) {
    const auto lat = build_lattice(g.root_system);
    CHECK(lat.size() == 5);
    CHECK(char_poly(lat, 0) == IntPoly({2, -3, 1}));
    CHECK(char_poly(lat, lat.size() - 1) == IntPoly::constant(1));
    return 0;
  });
  with_rational_group("B2", [](const CoxeterGroup<Rational>& g) {
    const auto lat = build_lattice(g.root_system);
    CHECK(lat.size() == 6);
    CHECK(char_poly(lat, 0) == IntPoly::from_roots({1, 3}));
    return 0;
  });
  with_rational_group("A3", [](const CoxeterGroup<Rational>& g) {
    const auto lat = build_lattice(g.root_system);
    // partitions of a 4-element set
    CHECK(lat.size() == 15);
    CHECK_THROWS(char_poly(lat, canonicalize<Rational>({Vec<Rational>::Unit(3, 0)}, 3)));
    return 0;
  });
}

TEST_CASE("mobius recursion and chamber count") {
  for (const char* name : {"A3", "B3", "G2", "H3", "D4"}) {
    CAPTURE(name);
    const auto group = build_group(CoxeterType::parse(name));
    std::visit(
        [&](const auto& g) {
          const auto lat = build_lattice(g.root_system);
          for (int x = 0; x < lat.size(); ++x) {
            CHECK(lat.mobius(x, x) == 1);
            for (int y = 0; y < lat.size(); ++y) {
              if (x == y || !lat.leq(x, y)) continue;
              std::int64_t sum = 0;
              for (int z = 0; z < lat.size(); ++z) {
                if (lat.leq(x, z) && lat.leq(z, y)) sum += lat.mobius(z, y);
              }
              CHECK(sum == 0);
            }
          }
          // closure under pairwise intersection
          for (int x = 0; x < lat.size(); ++x) {
            for (int y = x; y < lat.size(); ++y) CHECK(lat.find(intersect(lat.flat(x), lat.flat(y))) >= 0);
          }
          const IntPoly chi = char_poly(lat, 0);
          const auto ex = exponents(g);
          std::vector<std::int64_t> ex64(ex.begin(), ex.end());
          CHECK(chi == IntPoly::from_roots(ex64));
          const std::int64_t sign = (g.rank % 2 == 0) ? 1 : -1;
          CHECK(sign * chi.evaluate(std::int64_t{-1}) == g.order());
        },
        group);
  }
}

TEST_CASE("lattice is independent of hyperplane order") {
  const auto rs = std::get<RootSystem<GoldenRational>>(build_root_system(CoxeterType::parse("H3")));
  std::vector<RowVec<GoldenRational>> fs;
  for (const auto& root : rs.positive_roots) fs.push_back(rs.functional(root));
  const auto base = build_lattice_from_functionals(fs, 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(fs.begin(), fs.end(), rng);
    const auto other = build_lattice_from_functionals(fs, 3);
    REQUIRE(other.size() == base.size());
    for (int i = 0; i < base.size(); ++i) CHECK(other.flat(i) == base.flat(i));
    CHECK(char_poly(other, 0) == char_poly(base, 0));
  }
}

TEST_CASE("coexponents") {
  for (const char* name : {"A3", "B3", "H3", "G2", "I2(5)", "D4"}) {
    CAPTURE(name);
    const auto data = analyze(name);
    const auto r = data->rank();
    CHECK(data->parabolics[(1u << r) - 1].coexponents.empty());
    std::vector<std::int64_t> ex(data->exponents.begin(), data->exponents.end());
    CHECK(data->parabolics[0].coexponents == ex);
    for (const auto& p : data->parabolics) {
      CHECK(p.chi.degree() == p.fixed_dim);
      CHECK(p.fixed_dim == r - popcount(p.info.K));
      CHECK(p.chi.evaluate(std::int64_t{-1}) != 0);
    }
  }
  const auto h3 = analyze("H3");
  for (int i = 0; i < 3; ++i) {
    const auto& p = h3->parabolics[1u << i];
    CHECK(p.coexponents.size() == 2);
    for (auto b : p.coexponents) CHECK(b <= 9);
    CHECK(p.chi == IntPoly::from_roots(p.coexponents));
  }
}

TEST_CASE("H4 lattice and disk cache" * doctest::timeout(600)) {
  const auto dir = std::filesystem::temp_directory_path() / "coxshuffle-test-cache";
  std::filesystem::remove_all(dir);
  setenv("COXETER_CACHE_DIR", dir.c_str(), 1);

  const auto t0 = std::chrono::steady_clock::now();
  const auto h4 = analyze("H4");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("H4 analysis: " << seconds << " s, " << h4->lattice.flat_count << " flats");
  CHECK(h4->order() == 14400);
  CHECK(h4->lattice.flats_by_dim[0] == 1);
  CHECK(h4->lattice.flats_by_dim[4] == 1);
  CHECK(h4->lattice.flats_by_dim[3] == 60);
  CHECK(h4->parabolics[0].coexponents == std::vector<std::int64_t>{1, 11, 19, 29});
  for (const auto& p : h4->parabolics) CHECK(p.chi.degree() == 4 - popcount(p.info.K));

  const auto file = dir / "lattice-H4-v1.json";
  REQUIRE(std::filesystem::exists(file));
  std::ifstream in(file);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto round = cache::deserialize(CoxeterType::parse("H4"), text);
  REQUIRE(round.has_value());
  CHECK(round->flat_count == h4->lattice.flat_count);
  CHECK(round->restricted_chi == h4->lattice.restricted_chi);

  std::string tampered = text;
  const auto pos = tampered.find("\"flat_count\"");
  REQUIRE(pos != std::string::npos);
  tampered.replace(tampered.find(':', pos) + 1, 1, " 9");
  CHECK_FALSE(cache::deserialize(CoxeterType::parse("H4"), tampered).has_value());
  CHECK_FALSE(cache::deserialize(CoxeterType::parse("H3"), text).has_value());
  unsetenv("COXETER_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
