#include "coxshuffle/lattice.hpp"

namespace coxshuffle {

std::vector<std::int64_t> coexponents_of(const IntPoly& restricted_char_poly, int max_exponent) {
  auto roots = integer_roots(restricted_char_poly);
  if (!roots || static_cast<int>(roots->size()) != restricted_char_poly.degree()) {
    throw std::logic_error("coexponents: " + restricted_char_poly.str() + " does not split over the integers");
  }
  for (auto b : *roots) {
    if (b > max_exponent) {
      throw std::logic_error("coexponents: root " + std::to_string(b) + " exceeds the largest exponent");
    }
  }
  return *roots;
}

}  // namespace coxshuffle
