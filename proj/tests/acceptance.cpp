// Runs the verification suites with their default grids and prints one
// line per acceptance criterion. Exit status is 0 only when all pass.
// Optional argument: directory that receives one JSON report per suite.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "coxshuffle/suites.hpp"
#include "coxshuffle/tables.hpp"

namespace cs = coxshuffle;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double seconds_limit;  // 0: no runtime bound
};

}  // namespace

int main(int argc, char** argv) {
  const std::string report_dir = argc > 1 ? argv[1] : "";
  if (!report_dir.empty()) std::filesystem::create_directories(report_dir);

  const std::vector<Criterion> criteria{
      {1, "triple agreement of definition, OS-sign and closed forms", {"triple_agreement"}, 300.0},
      {2, "H(id) and H(w0) from the exponents", {"longshort"}, 0},
      {3, "Sommers identity", {"sommers"}, 0},
      {4, "orbit classes vs H_{S_n,q} (type A)", {"problem1_A"}, 60.0},
      {5, "orbit classes vs H_{B_n,q} (type B)", {"problem1_B"}, 60.0},
      {6, "identity-class orbit counts", {"identity_count"}, 0},
      {7, "SL(3,5) split census 5 against prediction 7", {"sl35_counterexample"}, 0},
      {8, "convolution H_2 * H_3 = H_6 and the H4 failure", {"convolution", "h4_counterexample"}, 0},
      {9, "transition matrix spectrum and stochasticity", {"spectrum"}, 0},
      {10, "one BHR step equals H", {"walk_oracle"}, 0},
      {11, "Gessel-Reutenauer census, ornament and s-vector counts", {"gr_census", "reiner_counts", "ornament_counts"}, 0},
      {12, "sampler total variation within 0.02", {"sampler_tv"}, 60.0},
      {13, "nonnegativity at good primes", {"nonnegativity"}, 0},
  };

  cs::SuiteParams params;
  params.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  int failed = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double seconds = 0.0;
    std::string error;
    for (const auto& name : c.suites) {
      try {
        const cs::Report r = cs::run_suite(name, params);
        pass = pass && r.pass();
        checks += r.checks.size();
        failures += r.failures();
        seconds += r.wall_time;
        for (const auto& check : r.checks) {
          if (!check.pass) {
            std::cerr << "  " << name << ": " << check.description << ": expected " << check.expected << ", got "
                      << check.actual << "\n";
          }
        }
        if (!report_dir.empty()) cs::write_output(report_dir + "/" + name + ".json", r.to_json().dump(2) + "\n");
      } catch (const std::exception& e) {
        pass = false;
        error += name + ": " + e.what() + "; ";
      }
    }
    if (c.seconds_limit > 0 && seconds > c.seconds_limit) {
      pass = false;
      error += "runtime over " + std::to_string(static_cast<int>(c.seconds_limit)) + " s; ";
    }
    if (checks == 0) pass = false;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << checks
              << " checks, " << failures << " failed, " << timing << ")";
    if (!error.empty()) std::cout << "  " << error;
    std::cout << std::endl;
    if (!pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
