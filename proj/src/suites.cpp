#include "coxshuffle/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "coxshuffle/bijections.hpp"
#include "coxshuffle/measures.hpp"
#include "coxshuffle/necklace.hpp"
#include "coxshuffle/orbits.hpp"
#include "coxshuffle/sampler.hpp"

namespace coxshuffle {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str_key(const json& point, const char* key) {
  if (!point.contains(key)) throw UsageError(std::string("grid point lacks \"") + key + "\": " + point.dump());
  const auto& v = point.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

int int_key(const json& point, const char* key) {
  if (!point.contains(key) || !point.at(key).is_number_integer()) {
    throw UsageError(std::string("grid point needs integer \"") + key + "\": " + point.dump());
  }
  return point.at(key).get<int>();
}

Rational rational_key(const json& point, const char* key) { return Rational::parse(str_key(point, key)); }

std::string label_of(const json& point) {
  std::string out;
  for (const auto& [k, v] : point.items()) {
    if (!out.empty()) out += ' ';
    out += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

void add_differs(Report& r, std::string description, const Rational& a, const Rational& b, Basis basis) {
  r.checks.push_back({std::move(description), "different from " + a.str(), b.str(), a != b, basis});
}

/// One check per descent set when both measures are constant on descent
/// classes; otherwise a count of differing elements.
void compare_measures(Report& r, const std::string& prefix, const WMeasure& expected, const WMeasure& actual,
                      Basis basis) {
  const auto de = expected.by_descent();
  const auto da = actual.by_descent();
  const int rank = expected.group->rank();
  if (de && da) {
    for (DescentSet D = 0; D < de->size(); ++D) r.add(prefix + " at Des " + descent_str(D, rank), (*de)[D], (*da)[D], basis);
    return;
  }
  std::int64_t differing = 0;
  for (std::size_t w = 0; w < expected.values.size(); ++w) differing += expected.values[w] != actual.values[w] ? 1 : 0;
  r.add(prefix + ": elements that differ", std::int64_t{0}, differing, basis);
}

std::shared_ptr<const GroupData> group_of(const json& point) { return analyze(str_key(point, "type")); }

// ---------------------------------------------------------------- suites

Report triple_agreement(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const std::string tag = g->type.name() + " x=" + x.str();
  const auto def = h_measure(g, x, Method::Definition);
  const auto os = h_measure(g, x, Method::OsSign);
  compare_measures(r, tag + " os_sign vs definition", def, os, Basis::Independent);
  r.add(tag + " total mass", Rational(1), def.total(), Basis::Definition);
  const Family f = g->type.family;
  if (f == Family::A || f == Family::B || f == Family::H3 || f == Family::H4) {
    compare_measures(r, tag + " definition vs closed form", h_measure(g, x, Method::ClosedForm), def, Basis::Published);
  }
  return r;
}

Report longshort(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const std::string tag = g->type.name() + " x=" + x.str();
  const auto m = h_measure(g, x, Method::Definition);
  const auto [at_w0, at_id] = longshort_values(*g, x);
  r.add(tag + " H(id)", at_id, m(g->table().identity()), Basis::Independent);
  r.add(tag + " H(w0)", at_w0, m(g->table().longest), Basis::Independent);
  return r;
}

Report sommers(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const int x = int_key(p, "x");
  const std::string tag = g->type.name() + " x=" + std::to_string(x);
  const auto c = sommers_identity_check(g, x);
  r.add_property(tag + " x coprime to every mark", c.hypothesis_holds, Basis::Definition);
  r.add(tag + " sum of p(S,x) over proper S", c.rhs, c.lhs, Basis::Independent);
  r.add_property(tag + " sum / (f x^r) equals H(id)", c.chain_holds, Basis::Independent);
  r.data = {{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"h_identity", c.identity_value.str()}};
  return r;
}

Report convolution(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const Rational y = rational_key(p, "y");
  const std::string tag = g->type.name() + " H_" + x.str() + " * H_" + y.str();
  const auto lhs = convolve(h_measure(g, x, Method::Definition), h_measure(g, y, Method::Definition));
  compare_measures(r, tag, h_measure(g, x * y, Method::Definition), lhs, Basis::Independent);
  return r;
}

Report h4_counterexample(const json& p, const SuiteParams&) {
  Report r;
  const auto g = analyze("H4");
  const auto& t = g->table();
  const Rational x = rational_key(p, "x");
  const DescentSet a34 = 0b1100;
  int w = -1;
  for (int u = 0; u < g->order() && w < 0; ++u) {
    if (t.descents[static_cast<std::size_t>(u)] == a34) w = u;
  }
  const int ww0 = t.multiply(w, t.longest);
  const DescentSet des_ww0 = t.descents[static_cast<std::size_t>(ww0)];

  const Rational table_w = closed_form_value(*g, a34, -x);
  const Rational table_ww0 = closed_form_value(*g, des_ww0, -x);
  const auto minus = h_measure(g, -x, Method::Definition);
  r.add("definition method reproduces the table at w, x=" + (-x).str(), table_w, minus(w), Basis::Published);
  r.add("definition method reproduces the table at w w0, x=" + (-x).str(), table_ww0, minus(ww0), Basis::Published);
  add_differs(r, "H_{H4," + (-x).str() + "}(w) against H_{H4," + (-x).str() + "}(w w0)", table_w, table_ww0,
              Basis::Published);

  // If H_{-x} were H_x * H_{-1} = H_x * delta_{w0}, then H_{-x}(w) = H_x(w w0).
  const auto delta = h_measure(g, Rational(-1), Method::Definition);
  r.add_property("H_{H4,-1} is the point mass at w0",
                 delta.values == WMeasure::point_mass(g, t.longest).values, Basis::Definition);
  const auto shifted = convolve(h_measure(g, x, Method::Definition), delta);
  add_differs(r, "(H_{H4," + x.str() + "} * H_{H4,-1})(w) against H_{H4," + (-x).str() + "}(w)", table_w, shifted(w),
              Basis::Published);
  r.data = {{"w", w},
            {"w_word", t.word(w)},
            {"des_w", descent_str(a34, 4)},
            {"des_w_w0", descent_str(des_ww0, 4)},
            {"H_minus_x_at_w", table_w.str()},
            {"H_minus_x_at_w_w0", table_ww0.str()},
            {"convolution_at_w", shifted(w).str()}};
  return r;
}

Report spectrum(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const std::string tag = g->type.name() + " x=" + x.str();
  const auto M = transition_matrix(*g, face_weights_definition(*g, x));
  r.add_property(tag + " rows sum to 1", rows_sum_to_one(M), Basis::Definition);
  if (p.value("identity", true)) {
    r.add_property(tag + " prod_{i=0..r} (M - x^-i I) = 0", spectrum_identity_holds(M, x, g->rank()),
                   Basis::Published);
  }
  return r;
}

OrbitFamily family_of(const json& p) {
  return OrbitFamily::parse(str_key(p, "family"), int_key(p, "n"), int_key(p, "q"));
}

Report problem1(const json& p, const SuiteParams& params) {
  Report r;
  const OrbitFamily fam = family_of(p);
  const auto g = analyze(fam.group_type());
  const Rational scale = pow(Rational(fam.q), fam.rank());
  std::map<std::string, Rational> orbit_side;
  for (const auto& [label, mass] : orbit_class_distribution(fam, params.jobs)) orbit_side[label.str()] = mass * scale;
  std::map<std::string, Rational> measure_side;
  for (const auto& [label, mass] : pushforward_classes(h_measure(g, Rational(fam.q), Method::Definition))) {
    if (!mass.is_zero()) measure_side[label.str()] = mass * scale;
  }
  std::map<std::string, bool> labels;
  for (const auto& [k, v] : orbit_side) labels[k] = true;
  for (const auto& [k, v] : measure_side) labels[k] = true;
  json rows = json::object();
  for (const auto& [label, unused] : labels) {
    const Rational orbits = orbit_side.count(label) ? orbit_side[label] : Rational(0);
    const Rational predicted = measure_side.count(label) ? measure_side[label] : Rational(0);
    r.add(fam.name() + " class " + label + ": orbits vs q^r H mass", predicted, orbits, Basis::Independent);
    rows[label] = {{"orbit_count", orbits.str()}, {"q^r_H_mass", predicted.str()}, {"equal", orbits == predicted}};
  }
  if (p.contains("spot")) {
    for (const auto& [label, value] : p.at("spot").items()) {
      const Rational orbits = orbit_side.count(label) ? orbit_side[label] : Rational(0);
      r.add(fam.name() + " class " + label + ": hand count", Rational::parse(value.get<std::string>()), orbits,
            Basis::Independent);
    }
  }
  r.data = {{"family", fam.name()}, {"classes", rows}};
  return r;
}

Report identity_count(const json& p, const SuiteParams& params) {
  Report r;
  const OrbitFamily fam = family_of(p);
  const auto counts = orbit_class_counts(fam, params.jobs);
  const auto it = counts.find(identity_label(fam));
  const std::int64_t found = it == counts.end() ? 0 : it->second;
  r.add(fam.name() + " orbits in the identity class", identity_prediction(fam), Rational(found), Basis::Published);
  return r;
}

Report sl35(const json& p, const SuiteParams&) {
  Report r;
  const int n = int_key(p, "n");
  const int q = int_key(p, "q");
  const auto c = split_census_constant_one(n, q);
  const std::string tag = "degree " + std::to_string(n) + " over F_" + std::to_string(q);
  if (p.contains("census")) {
    r.add(tag + ": split monic polynomials with f(0) = 1", std::int64_t{p.at("census").get<int>()}, c.census,
          Basis::Published);
  }
  if (p.contains("prediction")) {
    r.add(tag + ": orbit-side prediction", Rational::parse(str_key(p, "prediction")), c.prediction, Basis::Published);
  }
  r.add_property(tag + ": census differs from the prediction", c.mismatch(), Basis::Published);
  r.data = {{"census", c.census}, {"prediction", c.prediction.str()}, {"mismatch", c.mismatch()}};
  return r;
}

Report gr_census(const json& p, const SuiteParams&) {
  Report r;
  if (p.contains("necklaces")) {
    const std::string input = str_key(p, "necklaces");
    const std::string got = cycle_string(gessel_reutenauer(parse_necklace_list(input)));
    r.add("Gessel-Reutenauer image of " + input, str_key(p, "cycles"), got, Basis::Published);
    return r;
  }
  const int n = int_key(p, "n");
  const int prime = int_key(p, "p");
  const std::string mode_name = p.value("mode", std::string("golomb"));
  const RefineMode mode = parse_refine_mode(mode_name);
  const auto census = refine_census(n, prime, mode);
  const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(prime) + " " + mode_name;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::int64_t total = 0;
  json rows = json::array();
  do {
    const auto it = census.find(w);
    const std::int64_t got = it == census.end() ? 0 : it->second;
    total += got;
    const Rational expected = binomial(Rational(prime + n - 1 - permutation_descents(w)), n);
    r.add(tag + " count at " + cycle_string(w), expected, Rational(got), Basis::Published);
    rows.push_back({{"w", w}, {"count", got}});
  } while (std::next_permutation(w.begin(), w.end()));
  r.add(tag + " polynomials covered", pow(Rational(prime), n), Rational(total), Basis::Definition);
  r.data = {{"census", rows}};
  return r;
}

Report reiner_counts(const json& p, const SuiteParams&) {
  Report r;
  const int n = int_key(p, "n");
  const int q = int_key(p, "q");
  const auto bn = analyze("B" + std::to_string(n));
  const std::string tag = "B" + std::to_string(n) + " q=" + std::to_string(q);
  std::int64_t sum = 0;
  std::int64_t disagreements = 0;
  for (int w = 0; w < bn->order(); ++w) {
    const std::int64_t formula = s_vector_count(*bn, w, q);
    sum += formula;
    disagreements += formula != s_vector_count_brute_force(*bn, w, q) ? 1 : 0;
  }
  r.add(tag + " sum of C((q-1)/2 + n - d(w), n)", pow(Rational(q), n), Rational(sum), Basis::Published);
  r.add(tag + " elements where the binomial and a direct count of s-vectors differ", std::int64_t{0}, disagreements,
        Basis::Independent);
  return r;
}

Report ornament_counts(const json& p, const SuiteParams&) {
  Report r;
  const int n = int_key(p, "n");
  const int q = int_key(p, "q");
  const auto bn = analyze("B" + std::to_string(n));
  const auto& t = bn->table();
  const std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q);
  const auto ornaments = enumerate_signed_ornaments(n, q);
  r.add(tag + " signed ornaments", pow(Rational(q), n), Rational(static_cast<std::int64_t>(ornaments.size())),
        Basis::Published);
  std::map<std::string, std::int64_t> by_type;
  for (const auto& o : ornaments) ++by_type[o.type().str()];
  std::map<std::string, std::int64_t> by_class;
  for (int w = 0; w < bn->order(); ++w) {
    const auto& label = t.classes[static_cast<std::size_t>(t.class_of[static_cast<std::size_t>(w)])].label;
    by_class[label.str()] += s_vector_count(*bn, w, q);
  }
  for (const auto& [label, count] : by_class) {
    const auto it = by_type.find(label);
    r.add(tag + " ornaments of type " + label, count, it == by_type.end() ? 0 : it->second, Basis::Independent);
  }
  return r;
}

Report sampler_tv(const json& p, const SuiteParams& params) {
  Report r;
  const auto start = Clock::now();
  const ShuffleModel model = parse_model(str_key(p, "model"));
  const int n = int_key(p, "n");
  const Rational xr = rational_key(p, "x");
  if (!xr.is_integer()) throw UsageError("sampler parameter must be an integer");
  const int x = static_cast<int>(xr.num().get_si());
  validate_shuffle(model, n, x);
  const auto g = analyze(shuffle_group_type(model, n));
  const auto exact = h_measure(g, xr, Method::Definition);
  const std::string tag = model_name(model) + " n=" + std::to_string(n) + " x=" + std::to_string(x);
  compare_measures(r, tag + " exact sampler law vs H", exact, sampler_law(g, model, n, x), Basis::Independent);
  const auto tv = sample_tv_distance(exact, model, n, x, params.count, params.seed);
  const double bound = p.value("bound", 0.02);
  std::ostringstream bound_text;
  bound_text << "<= " << bound;
  std::ostringstream got;
  got.precision(6);
  got << std::fixed << tv.distance;
  r.checks.push_back({tag + " total variation, " + std::to_string(tv.samples) + " samples, seed " +
                          std::to_string(params.seed),
                      bound_text.str(), got.str(), tv.distance <= bound, Basis::Independent});
  const double limit = p.value("seconds", 30.0);
  r.add_property(tag + " finished within " + std::to_string(static_cast<int>(limit)) + " s",
                 seconds_since(start) < limit, Basis::Definition);
  r.data = {{"samples", tv.samples}, {"seed", params.seed}, {"distance", tv.distance}};
  return r;
}

Report walk_oracle(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const auto walk = bhr_step(g, face_weights_definition(*g, x));
  compare_measures(r, g->type.name() + " x=" + x.str() + " one BHR step vs H", h_measure(g, x, Method::Definition),
                   walk, Basis::Independent);
  return r;
}

Report nonnegativity(const json& p, const SuiteParams&) {
  Report r;
  const auto g = group_of(p);
  const Rational x = rational_key(p, "x");
  const std::string tag = g->type.name() + " x=" + x.str();
  const auto fw = face_weights_definition(*g, x);
  const auto m = h_measure(g, x, Method::Definition);
  const auto negatives = [](const std::vector<Rational>& v) {
    return static_cast<std::int64_t>(std::count_if(v.begin(), v.end(), [](const Rational& a) { return a.sign() < 0; }));
  };
  const std::int64_t neg_faces = negatives(fw.v);
  const std::int64_t neg_values = negatives(m.values);
  if (p.value("assert", true)) {
    r.add(tag + " negative face weights", std::int64_t{0}, neg_faces, Basis::Published);
    r.add(tag + " negative measure values", std::int64_t{0}, neg_values, Basis::Published);
  }
  r.data = {{"negative_face_weights", neg_faces}, {"negative_values", neg_values}};
  return r;
}

// ---------------------------------------------------------------- registry

using PointRunner = std::function<Report(const json&, const SuiteParams&)>;

struct Entry {
  SuiteInfo info;
  PointRunner run;
};

json type_x_grid(const std::vector<std::string>& types, const std::vector<std::string>& xs) {
  json grid = json::array();
  for (const auto& t : types) {
    for (const auto& x : xs) grid.push_back({{"type", t}, {"x", x}});
  }
  return grid;
}

json family_grid(const std::string& family, const std::vector<std::pair<int, int>>& nq) {
  json grid = json::array();
  for (const auto& [n, q] : nq) grid.push_back({{"family", family}, {"n", n}, {"q", q}});
  return grid;
}

const std::vector<std::pair<int, int>> kGridA{{2, 5}, {2, 7}, {3, 5}, {3, 7}, {4, 5}, {4, 7}};
const std::vector<std::pair<int, int>> kGridB{{2, 3}, {2, 5}, {3, 3}, {3, 5}};

const std::vector<std::string> kMainTypes{"A1", "A2", "A3", "A4", "B2", "B3", "G2", "I2(5)", "I2(6)", "H3", "H4"};
const std::vector<std::string> kAllTypes{"A1",    "A2",    "A3",    "A4",    "A5",    "B2",    "B3", "B4", "D4",
                                         "G2",    "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(10)", "H3", "H4"};

json merge(json a, const json& b) {
  for (const auto& v : b) a.push_back(v);
  return a;
}

std::vector<Entry> build_registry() {
  std::vector<Entry> reg;
  reg.push_back({{"triple_agreement", "definition, OS-sign and closed-form measures agree",
                  type_x_grid(kMainTypes, {"2", "3", "5", "7", "-1", "1/2"})},
                 triple_agreement});
  reg.push_back({{"longshort", "H(id) and H(w0) against the exponent products",
                  type_x_grid(kMainTypes, {"2", "3", "7", "-1"})},
                 longshort});
  json sommers_grid = json::array();
  for (const auto& [t, xs] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A1", {5, 7}}, {"A2", {5, 7}}, {"A3", {5, 7}}, {"B2", {3, 5}}, {"B3", {3, 5}}, {"G2", {5, 7}}}) {
    for (int x : xs) sommers_grid.push_back({{"type", t}, {"x", x}});
  }
  reg.push_back({{"sommers", "sum over proper subsets of the affine diagram", sommers_grid}, sommers});
  json conv_grid = json::array();
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "H3"}) {
    conv_grid.push_back({{"type", t}, {"x", "2"}, {"y", "3"}});
  }
  reg.push_back({{"convolution", "H_x * H_y = H_xy", conv_grid}, convolution});
  reg.push_back({{"h4_counterexample", "convolution fails for H4 at Des(w) = {a3,a4}", json::array({{{"x", "2"}}})},
                 h4_counterexample});
  json spectrum_grid = type_x_grid({"A2", "B2", "G2"}, {"2"});
  spectrum_grid = merge(spectrum_grid, json::array({{{"type", "A1"}, {"x", "2"}},
                                                    {{"type", "A3"}, {"x", "2"}},
                                                    {{"type", "B3"}, {"x", "2"}},
                                                    {{"type", "I2(5)"}, {"x", "3"}},
                                                    {{"type", "H3"}, {"x", "2"}}}));
  reg.push_back({{"spectrum", "transition matrix eigenvalue identity and stochasticity", spectrum_grid}, spectrum});
  json grid_a = family_grid("A", kGridA);
  grid_a[3]["spot"] = {{"(1 1 1)", "12"}, {"(2 1)", "21"}, {"(3)", "16"}};
  reg.push_back({{"problem1_A", "SL(n) orbit classes against H_{S_n,q}", grid_a}, problem1});
  reg.push_back({{"problem1_B", "Spin(2n+1) orbit classes against H_{B_n,q}", family_grid("B", kGridB)}, problem1});
  reg.push_back({{"identity_count", "orbits in the identity class against prod (q+m_i)/(1+m_i)",
                  merge(family_grid("A", kGridA), family_grid("B", kGridB))},
                 identity_count});
  reg.push_back({{"sl35_counterexample", "SL(3,5): split cubics with f(0) = 1",
                  json::array({{{"n", 3}, {"q", 5}, {"census", 5}, {"prediction", "7"}}})},
                 sl35});
  json gr_grid = json::array({{{"necklaces", "12,12,2,23,23233"}, {"cycles", "(1 3)(2 4)(5)(6 9)(7 11 8 12 10)"}}});
  for (const char* mode : {"golomb", "normal_basis"}) {
    for (const auto& [n, p] : std::vector<std::pair<int, int>>{{3, 5}, {1, 3}, {2, 3}, {3, 3}, {4, 3}}) {
      gr_grid.push_back({{"n", n}, {"p", p}, {"mode", mode}});
    }
  }
  reg.push_back({{"gr_census", "Gessel-Reutenauer refinement of polynomial factorizations", gr_grid}, gr_census});
  json nq = json::array();
  for (int q : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) nq.push_back({{"n", n}, {"q", q}});
  }
  reg.push_back({{"reiner_counts", "sum over B_n of s-vector counts equals q^n", nq}, reiner_counts});
  reg.push_back({{"ornament_counts", "signed ornaments with bounded entries", nq}, ornament_counts});
  reg.push_back({{"sampler_tv", "seeded shuffles against the exact law",
                  json::array({{{"model", "gsr_a"}, {"n", 4}, {"x", "2"}}, {{"model", "typeB_flip"}, {"n", 3}, {"x", "3"}}})},
                 sampler_tv});
  reg.push_back({{"walk_oracle", "one BHR step from the identity chamber equals H",
                  type_x_grid(kAllTypes, {"2", "3"})},
                 walk_oracle});
  json nonneg = json::array();
  for (const auto& [types, primes] : std::vector<std::pair<std::vector<std::string>, std::vector<int>>>{
           {{"A1", "A2", "A3", "A4", "A5"}, {2, 3, 5, 7}}, {{"B2", "B3", "B4"}, {3, 5, 7}}, {{"G2"}, {5, 7, 11}}}) {
    for (const auto& t : types) {
      for (int p : primes) nonneg.push_back({{"type", t}, {"x", std::to_string(p)}});
    }
  }
  nonneg.push_back({{"type", "H4"}, {"x", "2"}, {"assert", false}});
  reg.push_back({{"nonnegativity", "face weights and measure values at good primes", nonneg}, nonnegativity});
  return reg;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = build_registry();
  return reg;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw UsageError("unknown suite: " + name);
}

json params_json(const SuiteParams& p) {
  json out = json::object();
  if (p.type) out["type"] = *p.type;
  if (p.family) out["family"] = *p.family;
  if (p.mode) out["mode"] = *p.mode;
  if (p.model) out["model"] = *p.model;
  if (p.n) out["n"] = *p.n;
  if (p.q) out["q"] = *p.q;
  if (p.x) out["x"] = p.x->str();
  out["seed"] = p.seed;
  out["count"] = p.count;
  return out;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::string resolve_suite_name(const std::string& name, const SuiteParams& params) {
  if (name == "problem1") {
    if (!params.family) throw UsageError("problem1 needs --family A or --family B");
    if (*params.family != "A" && *params.family != "B") throw UsageError("unknown family: " + *params.family);
    return "problem1_" + *params.family;
  }
  find_entry(name);
  return name;
}

json suite_grid(const std::string& name, const SuiteParams& params) {
  const Entry& e = find_entry(resolve_suite_name(name, params));
  const json& base = params.grid ? *params.grid : e.info.default_grid;
  if (!base.is_array()) throw UsageError("a grid must be a JSON array of objects");
  json out = json::array();
  for (json point : base) {
    if (!point.is_object()) throw UsageError("a grid must be a JSON array of objects");
    const auto set = [&](const char* key, const json& value) {
      if (point.contains(key)) point[key] = value;
    };
    if (params.family && point.contains("family") && point["family"] != *params.family) continue;
    if (params.type) set("type", *params.type);
    if (params.mode) set("mode", *params.mode);
    if (params.model) set("model", *params.model);
    if (params.n) set("n", *params.n);
    if (params.q) {
      set("q", *params.q);
      set("p", *params.q);
    }
    if (params.x) {
      // integer-valued keys stay integers
      if (point.contains("x") && point["x"].is_number_integer()) {
        if (!params.x->is_integer()) throw UsageError("this suite needs an integer --x");
        point["x"] = params.x->num().get_si();
      } else {
        set("x", params.x->str());
      }
    }
    if (std::find(out.begin(), out.end(), point) == out.end()) out.push_back(std::move(point));
  }
  return out;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  const auto start = Clock::now();
  const std::string resolved = resolve_suite_name(name, params);
  const Entry& entry = find_entry(resolved);
  const json grid = suite_grid(resolved, params);
  if (grid.empty()) throw UsageError(resolved + ": no grid point matches the given parameters");
  const std::size_t points = grid.size();
  std::vector<Report> parts(points);
  std::vector<std::exception_ptr> errors(points);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points; i = next++) {
      try {
        parts[i] = entry.run(grid[i], params);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(params.jobs, static_cast<int>(points)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report merged;
  merged.suite = resolved;
  merged.params = params_json(params);
  merged.params["grid"] = grid;
  json data = json::array();
  for (std::size_t i = 0; i < points; ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const UsageError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw UsageError(label_of(grid[i]) + ": " + e.what());
      }
    }
    merged.append(parts[i]);
    if (!parts[i].data.is_null()) data.push_back({{"point", grid[i]}, {"data", parts[i].data}});
  }
  if (!data.empty()) merged.data = std::move(data);
  merged.wall_time = seconds_since(start);
  return merged;
}

}  // namespace coxshuffle
