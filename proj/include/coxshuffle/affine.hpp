#ifndef COXSHUFFLE_AFFINE_HPP
#define COXSHUFFLE_AFFINE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coxshuffle/root_system.hpp"

namespace coxshuffle {

class NoAffineData : public std::invalid_argument {
 public:
  explicit NoAffineData(const std::string& type) : std::invalid_argument("no affine data for " + type) {}
};

/// Highest root theta, the marks c of the extended base
/// {a0 = -theta, a1, ..., ar} (so c[0] = 1 and c[i] is the coefficient of
/// a_i in theta), and the index of connection f = |det cartan|.
struct AffineData {
  CoxeterType type;
  std::vector<int> highest_root;
  std::vector<int> marks;
  int index_of_connection = 0;

  [[nodiscard]] int extended_size() const { return static_cast<int>(marks.size()); }
};

/// Throws NoAffineData unless the family is A, B, D or G2.
AffineData affine_data(const AnyRootSystem& rs);
AffineData affine_data(const RootSystem<Rational>& rs);

/// Solutions of sum_{a not in S} c_a y_a = x in strictly positive integers.
/// Bit k of S stands for a_k of the extended base (bit 0 is a0).
std::uint64_t p_count(const AffineData& ad, std::uint32_t S, int x);

/// Same count by nested enumeration, for cross-checks on small inputs.
std::uint64_t p_count_brute_force(const AffineData& ad, std::uint32_t S, int x);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_AFFINE_HPP
