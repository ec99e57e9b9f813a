#ifndef COXSHUFFLE_TABLES_HPP
#define COXSHUFFLE_TABLES_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "coxshuffle/analysis.hpp"
#include "coxshuffle/measures.hpp"
#include "coxshuffle/orbits.hpp"

namespace coxshuffle {

/// Rows of exact strings. Output depends only on the inputs, so repeated
/// runs produce identical bytes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// RFC 4180 style: fields containing commas, quotes or newlines are quoted.
  [[nodiscard]] std::string csv() const;
  /// Array of objects keyed by column name, keys in column order.
  [[nodiscard]] nlohmann::ordered_json json() const;
  [[nodiscard]] std::string render(const std::string& format) const;
};

/// One x: (descent_set, value_num, value_den, class_label, elements), one
/// row per descent set and conjugacy class meeting it. Several x: one row
/// per descent set with an exact value column per x.
Table measure_table(std::shared_ptr<const GroupData> g, const std::vector<Rational>& xs, Method method);

/// (flat_id, dim, moebius_from_V) over the reflection arrangement.
Table lattice_table(const GroupData& g);

/// (poly, factorization, lambda, mu); mu is empty for family A.
Table orbit_table(const OrbitFamily& fam);

/// (label, size, representative)
Table class_table(const GroupData& g);

/// (index, length, descent_set, word, class_label, one_line)
Table element_table(const GroupData& g);

/// (K, subgroup_order, normalizer_order, conjugates, fixed_dim, chi, coexponents)
Table parabolic_table(const GroupData& g);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
/// Throws std::runtime_error naming the path on failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_TABLES_HPP
