#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "coxshuffle/sampler.hpp"

using namespace coxshuffle;

TEST_CASE("label sequences to decks") {
  // labels 2,1,2: pile 1 = {2}, pile 2 = {1,3}
  CHECK(shuffle_from_labels(ShuffleModel::GsrA, {2, 1, 2}) == std::vector<int>{2, 1, 3});
  // pile 2 turned over: 3 then 1, both negated
  CHECK(shuffle_from_labels(ShuffleModel::TypeBFlip, {2, 1, 2}) == std::vector<int>{2, -3, -1});
  CHECK(shuffle_from_labels(ShuffleModel::TypeBFlip, {3, 3, 1}) == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(validate_shuffle(ShuffleModel::TypeBFlip, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(validate_shuffle(ShuffleModel::GsrA, 3, 0), std::invalid_argument);
  CHECK(parse_model("typeB_flip") == ShuffleModel::TypeBFlip);
  CHECK_THROWS(parse_model("overhand"));
}

TEST_CASE("degenerate samplers") {
  std::mt19937_64 rng(11);
  const auto a2 = analyze("A2");
  const auto b2 = analyze("B2");
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_shuffle(*a2, ShuffleModel::GsrA, 3, 1, rng) == 0);
    CHECK(sample_shuffle(*b2, ShuffleModel::TypeBFlip, 2, 1, rng) == 0);
  }
  CHECK_THROWS_AS(sample_shuffle(*b2, ShuffleModel::TypeBFlip, 2, 2, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_shuffle(*a2, ShuffleModel::TypeBFlip, 3, 3, rng), std::invalid_argument);
}

TEST_CASE("seeded runs are reproducible") {
  const auto a3 = analyze("A3");
  std::mt19937_64 r1(99);
  std::mt19937_64 r2(99);
  for (int i = 0; i < 200; ++i) {
    CHECK(sample_shuffle(*a3, ShuffleModel::GsrA, 4, 3, r1) == sample_shuffle(*a3, ShuffleModel::GsrA, 4, 3, r2));
  }
}

TEST_CASE("exact sampler law is H") {
  const auto a1 = analyze("A1");
  const auto law = sampler_law(a1, ShuffleModel::GsrA, 2, 2);
  CHECK(law(0) == Rational(3, 4));

  for (const char* name : {"A2", "A3", "A4"}) {
    const auto g = analyze(name);
    for (int a : {1, 2, 3}) {
      CAPTURE(name);
      CAPTURE(a);
      CHECK(sampler_law(g, ShuffleModel::GsrA, g->rank() + 1, a).values ==
            h_measure(g, Rational(a), Method::Definition).values);
    }
  }
  for (const char* name : {"B1", "B2", "B3", "B4"}) {
    const auto g = analyze(name);
    for (int x : {1, 3, 5}) {
      if (g->rank() == 4 && x == 5) continue;
      CAPTURE(name);
      CAPTURE(x);
      CHECK(sampler_law(g, ShuffleModel::TypeBFlip, g->rank(), x).values ==
            h_measure(g, Rational(x), Method::Definition).values);
    }
  }
}

TEST_CASE("statistical agreement") {
  struct Case {
    const char* group;
    ShuffleModel model;
    int n;
    int param;
  };
  for (const auto& c : {Case{"A3", ShuffleModel::GsrA, 4, 2}, Case{"B3", ShuffleModel::TypeBFlip, 3, 3}}) {
    const auto g = analyze(c.group);
    const auto exact = h_measure(g, Rational(c.param), Method::Definition);
    const auto start = std::chrono::steady_clock::now();
    const auto tv = sample_tv_distance(exact, c.model, c.n, c.param, 100000, 7);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CAPTURE(c.group);
    CHECK(tv.distance <= 0.02);
    CHECK(secs < 30.0);
  }
}
