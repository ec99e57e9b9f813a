#include "coxshuffle/report.hpp"

#include <algorithm>

namespace coxshuffle {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Published: return "published";
    case Basis::Independent: return "independent";
    case Basis::Definition: return "definition";
  }
  return "unknown";
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::add(std::string description, std::string expected, std::string actual, Basis basis) {
  const bool pass = expected == actual;
  checks.push_back({std::move(description), std::move(expected), std::move(actual), pass, basis});
}

void Report::add(std::string description, const Rational& expected, const Rational& actual, Basis basis) {
  checks.push_back({std::move(description), expected.str(), actual.str(), expected == actual, basis});
}

void Report::add(std::string description, std::int64_t expected, std::int64_t actual, Basis basis) {
  checks.push_back({std::move(description), std::to_string(expected), std::to_string(actual), expected == actual, basis});
}

void Report::add_property(std::string description, bool holds, Basis basis) {
  checks.push_back({std::move(description), "true", holds ? "true" : "false", holds, basis});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["params"] = params;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"description", c.description},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"pass", c.pass},
                   {"basis", basis_name(c.basis)}});
  }
  out["checks"] = std::move(arr);
  if (!data.is_null()) out["data"] = data;
  out["pass"] = pass();
  out["wall_time"] = wall_time;
  return out;
}

}  // namespace coxshuffle
