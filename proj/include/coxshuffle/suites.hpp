#ifndef COXSHUFFLE_SUITES_HPP
#define COXSHUFFLE_SUITES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxshuffle/rational.hpp"
#include "coxshuffle/report.hpp"

namespace coxshuffle {

/// Bad suite name or parameters; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Command-line overrides. `family` keeps only the grid points of that
/// family; every other set field replaces the corresponding key in each
/// point that has it, and duplicate points are then dropped.
struct SuiteParams {
  std::optional<std::string> type;
  std::optional<std::string> family;
  std::optional<std::string> mode;
  std::optional<std::string> model;
  std::optional<int> n;
  std::optional<int> q;
  std::optional<Rational> x;
  std::uint64_t seed = 7;
  std::uint64_t count = 100'000;
  int jobs = 1;
  /// Replaces the default grid entirely (an array of point objects).
  std::optional<nlohmann::json> grid;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  nlohmann::json default_grid;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Resolves aliases ("problem1" plus a family) and checks the name.
std::string resolve_suite_name(const std::string& name, const SuiteParams& params);

/// Grid points after overrides.
nlohmann::json suite_grid(const std::string& name, const SuiteParams& params);

/// Runs every grid point (on `params.jobs` threads) and merges the
/// per-point reports in grid order. Throws UsageError for an unknown suite
/// or a point it cannot interpret.
Report run_suite(const std::string& name, const SuiteParams& params);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_SUITES_HPP
