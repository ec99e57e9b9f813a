#ifndef COXSHUFFLE_REPORT_HPP
#define COXSHUFFLE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxshuffle/rational.hpp"

namespace coxshuffle {

/// Where the expected side of a check comes from.
enum class Basis {
  Published,    // a value printed in the source text
  Independent,  // a second computation that shares no code path
  Definition,   // follows directly from a definition or normalization
};

std::string basis_name(Basis b);

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
  Basis basis = Basis::Independent;
};

/// Outcome of one verification suite. Exact values are serialized as
/// strings ("p/q" for rationals); `data` holds optional suite-specific
/// tables.
struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data;
  double wall_time = 0.0;

  [[nodiscard]] bool pass() const;
  [[nodiscard]] std::size_t failures() const;

  void add(std::string description, std::string expected, std::string actual, Basis basis);
  void add(std::string description, const Rational& expected, const Rational& actual, Basis basis);
  void add(std::string description, std::int64_t expected, std::int64_t actual, Basis basis);
  /// A yes/no property; expected reads "true".
  void add_property(std::string description, bool holds, Basis basis);
  void append(const Report& other);

  [[nodiscard]] nlohmann::json to_json() const;
};

}  // namespace coxshuffle

#endif  // COXSHUFFLE_REPORT_HPP
