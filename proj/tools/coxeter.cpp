#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxshuffle/bijections.hpp"
#include "coxshuffle/measures.hpp"
#include "coxshuffle/orbits.hpp"
#include "coxshuffle/sampler.hpp"
#include "coxshuffle/suites.hpp"
#include "coxshuffle/tables.hpp"

namespace cs = coxshuffle;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  int jobs = 1;
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "csv";
};

struct VerifyArgs {
  std::string suite;
  std::string type, family, mode, model, grid_file;
  std::optional<int> n, q;
  std::string x;
  std::uint64_t count = 100'000;
  bool list = false;
};

struct TableArgs {
  std::string what;
  std::string type = "A2";
  std::vector<std::string> xs{"2"};
  std::string method = "definition";
  std::string family = "A";
  int n = 2;
  int q = 3;
};

struct SampleArgs {
  std::string model = "gsr_a";
  int n = 4;
  int x = 2;
  std::uint64_t count = 100'000;
  std::string compare;
};

struct BijectionArgs {
  std::string necklaces;
  std::string family = "A";
  int n = 3;
  int p = 5;
  std::string mode = "golomb";
  bool census = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_verify(const VerifyArgs& a, const Common& common) {
  if (a.list) {
    for (const auto& info : cs::suite_catalog()) std::cout << info.name << "\t" << info.summary << "\n";
    return 0;
  }
  if (a.suite.empty()) throw cs::UsageError("verify needs a suite name (see --list)");
  cs::SuiteParams p;
  if (!a.type.empty()) p.type = a.type;
  if (!a.family.empty()) p.family = a.family;
  if (!a.mode.empty()) p.mode = a.mode;
  if (!a.model.empty()) p.model = a.model;
  p.n = a.n;
  p.q = a.q;
  if (!a.x.empty()) p.x = cs::Rational::parse(a.x);
  p.seed = common.seed;
  p.count = a.count;
  p.jobs = common.jobs;
  if (!a.grid_file.empty()) {
    try {
      p.grid = json::parse(read_file(a.grid_file));
    } catch (const json::parse_error& e) {
      throw cs::UsageError(a.grid_file + ": " + e.what());
    }
  }
  const cs::Report report = cs::run_suite(a.suite, p);
  cs::write_output(common.out, report.to_json().dump(2) + "\n");
  std::cerr << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks, "
            << report.failures() << " failed)\n";
  return report.pass() ? 0 : kExitFail;
}

cs::Table make_table(const TableArgs& a) {
  if (a.what == "measure") {
    std::vector<cs::Rational> xs;
    for (const auto& s : a.xs) xs.push_back(cs::Rational::parse(s));
    return cs::measure_table(cs::analyze(a.type), xs, cs::parse_method(a.method));
  }
  if (a.what == "lattice") return cs::lattice_table(*cs::analyze(a.type));
  if (a.what == "orbits") return cs::orbit_table(cs::OrbitFamily::parse(a.family, a.n, a.q));
  if (a.what == "classes") return cs::class_table(*cs::analyze(a.type));
  if (a.what == "elements") return cs::element_table(*cs::analyze(a.type));
  if (a.what == "parabolics") return cs::parabolic_table(*cs::analyze(a.type));
  throw cs::UsageError("unknown table: " + a.what);
}

int run_table(const TableArgs& a, const Common& common) {
  cs::write_output(common.out, make_table(a).render(common.format));
  return 0;
}

int run_sample(const SampleArgs& a, const Common& common) {
  const auto model = cs::parse_model(a.model);
  cs::validate_shuffle(model, a.n, a.x);
  const auto g = cs::analyze(cs::shuffle_group_type(model, a.n));
  json out{{"model", cs::model_name(model)}, {"n", a.n}, {"x", a.x}, {"seed", common.seed}};
  if (a.compare == "exact") {
    const auto exact = cs::h_measure(g, cs::Rational(a.x), cs::Method::Definition);
    const auto tv = cs::sample_tv_distance(exact, model, a.n, a.x, a.count, common.seed);
    out["samples"] = tv.samples;
    out["tv_distance"] = tv.distance;
  } else if (a.compare.empty()) {
    std::mt19937_64 rng(common.seed);
    std::map<int, std::uint64_t> hits;
    for (std::uint64_t i = 0; i < a.count; ++i) ++hits[cs::sample_shuffle(*g, model, a.n, a.x, rng)];
    json counts = json::array();
    for (const auto& [w, c] : hits) counts.push_back({{"one_line", g->table().one_line[static_cast<std::size_t>(w)]}, {"count", c}});
    out["samples"] = a.count;
    out["counts"] = std::move(counts);
  } else {
    throw cs::UsageError("--compare accepts only \"exact\"");
  }
  cs::write_output(common.out, out.dump(2) + "\n");
  return 0;
}

int run_gr(const BijectionArgs& a, const Common& common) {
  if (a.necklaces.empty()) throw cs::UsageError("bijection gr needs --necklaces");
  cs::write_output(common.out, cs::cycle_string(cs::gessel_reutenauer(cs::parse_necklace_list(a.necklaces))) + "\n");
  return 0;
}

int run_refine(const BijectionArgs& a, const Common& common) {
  if (a.family != "A") throw cs::UsageError("bijection refine supports --family A only");
  const auto mode = cs::parse_refine_mode(a.mode);
  json out = json::array();
  if (a.census) {
    for (const auto& [w, count] : cs::refine_census(a.n, a.p, mode)) {
      out.push_back({{"w", w},
                     {"cycles", cs::cycle_string(w)},
                     {"descents", cs::permutation_descents(w)},
                     {"count", count}});
    }
  } else {
    const auto field = cs::make_field(a.p);
    for (const auto& f : cs::monic_polynomials(field, a.n)) {
      const auto w = cs::refine_phi_A(f, mode, true);
      out.push_back({{"poly", f.str()}, {"factorization", cs::factor(f).str()}, {"cycles", cs::cycle_string(w)}});
    }
  }
  cs::write_output(common.out, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shuffle measures on finite Coxeter groups, orbit censuses over finite fields, verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--jobs", common.jobs, "Worker threads for independent parameter points")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for the shuffle sampler");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
  v->add_option("suite", verify.suite, "Suite name");
  v->add_flag("--list", verify.list, "List suites");
  v->add_option("--type", verify.type, "Coxeter type, e.g. B3, H4, I2(5)");
  v->add_option("--family", verify.family, "Orbit family A or B");
  v->add_option("--n", verify.n);
  v->add_option("--q", verify.q, "Field size (also the prime p for censuses)");
  v->add_option("--x", verify.x, "Parameter x as an integer or p/q");
  v->add_option("--mode", verify.mode, "golomb or normal_basis");
  v->add_option("--model", verify.model, "gsr_a or typeB_flip");
  v->add_option("--count", verify.count, "Samples for sampler_tv");
  v->add_option("--grid", verify.grid_file, "JSON file with an array of grid points");
  v->add_option("--out", common.out, "Output file (default stdout)");

  TableArgs dump;
  auto* d = app.add_subcommand("dump", "Elements, classes or parabolics of a group as CSV");
  d->add_option("--type", dump.type)->required();
  d->add_option("--what", dump.what)->required()->check(CLI::IsMember({"elements", "classes", "parabolics"}));
  d->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));
  d->add_option("--out", common.out);

  TableArgs lattice;
  lattice.what = "lattice";
  auto* l = app.add_subcommand("lattice", "Flats of the reflection arrangement");
  l->add_option("--type", lattice.type)->required();
  l->add_option("--emit,--out", common.out);
  l->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  TableArgs measure;
  measure.what = "measure";
  auto* m = app.add_subcommand("measure", "H_{W,x} by descent set");
  m->add_option("--type", measure.type)->required();
  m->add_option("--x", measure.xs, "One or more values of x")->expected(1, -1);
  m->add_option("--method", measure.method)->check(CLI::IsMember({"definition", "os_sign", "closed_form"}));
  m->add_option("--out", common.out);
  m->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  TableArgs orbits;
  orbits.what = "orbits";
  auto* o = app.add_subcommand("orbits", "Semisimple orbit representatives with their class labels");
  o->add_option("--family", orbits.family)->check(CLI::IsMember({"A", "B"}));
  o->add_option("--n", orbits.n)->required();
  o->add_option("--q", orbits.q)->required();
  o->add_option("--emit,--out", common.out);
  o->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  TableArgs table;
  auto* t = app.add_subcommand("table", "Any table: measure, lattice, orbits, classes, elements, parabolics");
  t->add_option("--what", table.what)->required();
  t->add_option("--type", table.type);
  t->add_option("--x", table.xs)->expected(1, -1);
  t->add_option("--method", table.method);
  t->add_option("--family", table.family);
  t->add_option("--n", table.n);
  t->add_option("--q", table.q);
  t->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));
  t->add_option("--out", common.out);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Draw seeded shuffles");
  s->add_option("--model", sample.model)->check(CLI::IsMember({"gsr_a", "typeB_flip"}));
  s->add_option("--n", sample.n);
  s->add_option("--x", sample.x);
  s->add_option("--count", sample.count);
  s->add_option("--compare", sample.compare, "\"exact\": report total-variation distance to H");
  s->add_option("--out", common.out);

  BijectionArgs bij;
  auto* b = app.add_subcommand("bijection", "Necklace bijections");
  b->require_subcommand(1);
  auto* gr = b->add_subcommand("gr", "Gessel-Reutenauer permutation of a multiset of necklaces");
  gr->add_option("--necklaces", bij.necklaces)->required();
  gr->add_option("--out", common.out);
  auto* refine = b->add_subcommand("refine", "Refine the factorization type of each polynomial to a permutation");
  refine->add_option("--family", bij.family);
  refine->add_option("--n", bij.n);
  refine->add_option("--p", bij.p);
  refine->add_option("--mode", bij.mode)->check(CLI::IsMember({"golomb", "normal_basis"}));
  refine->add_flag("--census", bij.census, "Counts per permutation instead of one row per polynomial");
  refine->add_option("--out", common.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*v) return run_verify(verify, common);
    if (*d) return run_table(dump, common);
    if (*l) return run_table(lattice, common);
    if (*m) return run_table(measure, common);
    if (*o) return run_table(orbits, common);
    if (*t) return run_table(table, common);
    if (*s) return run_sample(sample, common);
    if (*gr) return run_gr(bij, common);
    if (*refine) return run_refine(bij, common);
  } catch (const cs::EnumerationBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
