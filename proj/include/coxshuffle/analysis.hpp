#ifndef COXSHUFFLE_ANALYSIS_HPP
#define COXSHUFFLE_ANALYSIS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxshuffle/coxeter_group.hpp"
#include "coxshuffle/lattice.hpp"
#include "coxshuffle/parabolic.hpp"

namespace coxshuffle {

/// Everything the measure computations need about one standard parabolic.
struct ParabolicSummary {
  ParabolicInfo info;
  int fixed_dim = 0;
  IntPoly chi;                             // chi(L^{Fix(W_K)}, x)
  std::vector<std::int64_t> coexponents;   // its integer roots
};

/// Lattice-derived facts that are worth caching on disk.
struct LatticeSummary {
  int flat_count = 0;
  std::vector<int> flats_by_dim;  // index = dimension
  std::vector<IntPoly> restricted_chi;  // index = parabolic mask K
  std::vector<int> fixed_dims;
};

/// A fully analysed group: enumeration, exponents, parabolic data and
/// restricted characteristic polynomials.
struct GroupData {
  CoxeterType type;
  AnyCoxeterGroup group;
  std::vector<int> exponents;
  std::vector<ParabolicSummary> parabolics;  // index = K
  LatticeSummary lattice;
  bool lattice_from_cache = false;

  [[nodiscard]] const GroupTable& table() const { return table_of(group); }
  [[nodiscard]] int rank() const { return table().rank; }
  [[nodiscard]] int order() const { return table().order(); }
  [[nodiscard]] int max_exponent() const { return exponents.back(); }
};

/// Builds (or fetches from the in-process cache) the analysis of a type.
/// When the environment variable COXETER_CACHE_DIR names a directory,
/// lattice summaries are also read from and written to versioned,
/// checksummed JSON files there.
std::shared_ptr<const GroupData> analyze(const CoxeterType& type);
std::shared_ptr<const GroupData> analyze(const std::string& type_name);

/// Computes the lattice summary from scratch (no caching).
LatticeSummary compute_lattice_summary(const AnyCoxeterGroup& group);

namespace cache {

constexpr int kFormatVersion = 1;

std::string serialize(const CoxeterType& type, const LatticeSummary& summary);
/// nullopt when the text is malformed, of another version or type, or its
/// checksum does not match.
std::optional<LatticeSummary> deserialize(const CoxeterType& type, const std::string& text);
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace cache

}  // namespace coxshuffle

#endif  // COXSHUFFLE_ANALYSIS_HPP
