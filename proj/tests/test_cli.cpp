#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxshuffle/suites.hpp"
#include "coxshuffle/tables.hpp"

using namespace coxshuffle;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

// the four-case H3 formula, by number of descents
Rational h3_display(int d, const Rational& x) {
  const int shifts[4][3] = {{9, 5, 1}, {5, 1, -1}, {1, -1, -5}, {-1, -5, -9}};
  Rational v(1);
  for (int s : shifts[d]) v *= x + Q(s);
  return v / (Q(120) * x * x * x);
}

}  // namespace

TEST_CASE("tables") {
  SUBCASE("lattice of B2 has 6 flats") {
    const auto t = lattice_table(*analyze("B2"));
    CHECK(t.rows.size() == 6);
    CHECK(t.columns == std::vector<std::string>{"flat_id", "dim", "moebius_from_V"});
    // V, four lines, the origin: mu(V, 0) = 3
    CHECK(t.rows.front()[2] == "1");
    CHECK(t.rows.back()[1] == "0");
    CHECK(t.rows.back()[2] == "3");
  }

  SUBCASE("classes of B2: 5 rows summing to 8") {
    const auto t = class_table(*analyze("B2"));
    REQUIRE(t.rows.size() == 5);
    int total = 0;
    for (const auto& r : t.rows) total += std::stoi(r[1]);
    CHECK(total == 8);
  }

  SUBCASE("H3 at x = 2, 3, 5 reproduces the displayed formula") {
    const std::vector<Rational> xs{Q(2), Q(3), Q(5)};
    const auto t = measure_table(analyze("H3"), xs, Method::Definition);
    CHECK(t.columns == std::vector<std::string>{"descent_set", "x=2/1", "x=3/1", "x=5/1"});
    REQUIRE(t.rows.size() == 8);
    for (std::size_t D = 0; D < 8; ++D) {
      const int d = __builtin_popcount(static_cast<unsigned>(D));
      for (std::size_t i = 0; i < xs.size(); ++i) CHECK(t.rows[D][i + 1] == h3_display(d, xs[i]).str());
    }
  }

  SUBCASE("single-x measure rows split descent classes by conjugacy class") {
    const auto t = measure_table(analyze("A2"), {Q(7)}, Method::Definition);
    CHECK(t.columns.size() == 5);
    int elements = 0;
    Rational mass;
    for (const auto& r : t.rows) {
      elements += std::stoi(r[4]);
      mass += Rational::parse(r[1] + "/" + r[2]) * Q(std::stoi(r[4]));
    }
    CHECK(elements == 6);
    CHECK(mass == Q(1));
  }

  SUBCASE("orbit table") {
    const auto t = orbit_table(OrbitFamily::parse("B", 2, 3));
    CHECK(t.rows.size() == 9);
    CHECK(t.columns == std::vector<std::string>{"poly", "factorization", "lambda", "mu"});
  }

  SUBCASE("byte-stable output and CSV quoting") {
    const auto a = measure_table(analyze("B3"), {Q(3)}, Method::OsSign).csv();
    const auto b = measure_table(analyze("B3"), {Q(3)}, Method::OsSign).csv();
    CHECK(a == b);
    CHECK(a.find("\"{a1,a2}\"") != std::string::npos);
    Table t{{"a", "b"}, {{"x,y", "say \"hi\""}}};
    CHECK(t.csv() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    CHECK(t.render("json") == "[\n  {\n    \"a\": \"x,y\",\n    \"b\": \"say \\\"hi\\\"\"\n  }\n]\n");
    CHECK_THROWS_AS(static_cast<void>(t.render("xml")), std::invalid_argument);
  }

  SUBCASE("output errors name the path") {
    const std::string path = "/nonexistent-dir/out.csv";
    try {
      write_output(path, "x");
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
  }
}

TEST_CASE("reports") {
  Report r;
  r.add("equal", Q(1, 2), Q(2, 4), Basis::Independent);
  CHECK(r.pass());
  r.add("unequal", std::int64_t{3}, std::int64_t{4}, Basis::Published);
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);
  const auto j = r.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["expected"] == "1/2");
  CHECK(j["checks"][1]["basis"] == "published");
}

TEST_CASE("suite registry") {
  SuiteParams p;
  CHECK_THROWS_AS(run_suite("no_such_suite", p), UsageError);
  CHECK_THROWS_AS(resolve_suite_name("problem1", p), UsageError);
  p.family = "B";
  CHECK(resolve_suite_name("problem1", p) == "problem1_B");
  p.family = "C";
  CHECK_THROWS_AS(resolve_suite_name("problem1", p), UsageError);
  CHECK(suite_catalog().size() >= 13);

  SUBCASE("overrides replace keys and drop duplicates") {
    SuiteParams q;
    q.type = "B3";
    const auto grid = suite_grid("longshort", q);
    CHECK(grid.size() == 4);
    for (const auto& point : grid) CHECK(point["type"] == "B3");
    q.x = Q(5);
    CHECK(suite_grid("longshort", q).size() == 1);
    // sommers keeps integer x
    SuiteParams s;
    s.x = Q(11);
    CHECK(suite_grid("sommers", s)[0]["x"] == 11);
    s.x = Q(1, 2);
    CHECK_THROWS_AS(suite_grid("sommers", s), UsageError);
    SuiteParams f;
    f.family = "B";
    const auto only_b = suite_grid("identity_count", f);
    CHECK(only_b.size() == 4);
    for (const auto& point : only_b) CHECK(point["family"] == "B");
  }

  SUBCASE("problem1 for one point reports every class") {
    SuiteParams q;
    q.family = "A";
    q.n = 3;
    q.q = 7;
    const auto r = run_suite("problem1", q);
    CHECK(r.pass());
    CHECK(r.suite == "problem1_A");
    const auto& classes = r.data[0]["data"]["classes"];
    CHECK(classes.size() == 3);
    CHECK(classes["(2 1)"]["orbit_count"] == "21/1");
    CHECK(classes["(2 1)"]["equal"] == true);
  }

  SUBCASE("a bad point is a usage error") {
    SuiteParams q;
    q.type = "E9";
    CHECK_THROWS_AS(run_suite("longshort", q), UsageError);
    SuiteParams grid;
    grid.grid = nlohmann::json::array({{{"type", "A2"}}});
    CHECK_THROWS_AS(run_suite("longshort", grid), UsageError);
  }

  SUBCASE("parallel runs merge in grid order") {
    SuiteParams one;
    SuiteParams many;
    many.jobs = 4;
    auto a = run_suite("convolution", one).to_json();
    auto b = run_suite("convolution", many).to_json();
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a == b);
  }

  SUBCASE("custom grids") {
    SuiteParams q;
    q.grid = nlohmann::json::array({{{"type", "I2(6)"}, {"x", "2"}}, {{"type", "D4"}, {"x", "3"}}});
    const auto r = run_suite("walk_oracle", q);
    CHECK(r.pass());
    CHECK(r.checks.size() == 4 + 16);
  }

  SUBCASE("the sampler is reproducible") {
    SuiteParams q;
    q.count = 2000;
    q.seed = 11;
    auto a = run_suite("sampler_tv", q).to_json();
    auto b = run_suite("sampler_tv", q).to_json();
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a == b);
  }
}
