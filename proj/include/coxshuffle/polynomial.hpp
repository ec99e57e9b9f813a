#ifndef COXSHUFFLE_POLYNOMIAL_HPP
#define COXSHUFFLE_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxshuffle/rational.hpp"

namespace coxshuffle {

/// Dense integer polynomial, coefficients low-to-high, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coefficients);

  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly monomial(int degree, std::int64_t c = 1);
  /// 1 + t + ... + t^m
  static IntPoly q_integer(int m);
  /// prod (x - root)
  static IntPoly from_roots(const std::vector<std::int64_t>& roots);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::int64_t coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
  }
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  [[nodiscard]] std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] std::int64_t evaluate(std::int64_t x) const;

  /// Exact quotient by d, or nullopt when d does not divide *this over Z.
  [[nodiscard]] std::optional<IntPoly> divide_exact(const IntPoly& d) const;

  [[nodiscard]] std::string str(char var = 'x') const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// All integer roots with multiplicity (ascending), or nullopt if the
/// polynomial does not split into integer linear factors.
std::optional<std::vector<std::int64_t>> integer_roots(const IntPoly& p);

/// Multiset {m_i} with p = prod (1 + t + ... + t^{m_i}) and exactly
/// `factor_count` factors, found by exact division trying small factors
/// first with backtracking.
std::optional<std::vector<int>> factor_q_integers(const IntPoly& p, int factor_count);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_POLYNOMIAL_HPP
