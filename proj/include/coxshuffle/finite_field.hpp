#ifndef COXSHUFFLE_FINITE_FIELD_HPP
#define COXSHUFFLE_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace coxshuffle {

/// The field F_q, q = p^e, with elements coded as integers 0..q-1: the
/// code of c_0 + c_1 t + ... + c_{e-1} t^{e-1} (t a root of the modulus)
/// is sum c_i p^i. Codes 0 and 1 are zero and one; for e = 1 the code is
/// the residue itself. Multiplication goes through log/exp tables built
/// from a primitive element, so q is limited to a few million.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 1 << 22;

  /// F_{p^e} with the first monic irreducible of degree e (in code order)
  /// as modulus.
  explicit FiniteField(int p, int e = 1);
  /// F_{p^e} with an explicit monic modulus (coefficients low to high).
  FiniteField(int p, std::vector<int> modulus);

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int e() const { return e_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

  [[nodiscard]] int add(int a, int b) const;
  [[nodiscard]] int sub(int a, int b) const;
  [[nodiscard]] int neg(int a) const;
  [[nodiscard]] int mul(int a, int b) const;
  [[nodiscard]] int inv(int a) const;
  [[nodiscard]] int pow(int a, std::int64_t k) const;
  [[nodiscard]] int frobenius(int a) const { return pow(a, p_); }

  /// Image of an integer in the prime subfield.
  [[nodiscard]] int from_int(std::int64_t v) const;
  [[nodiscard]] std::vector<int> digits(int a) const;
  [[nodiscard]] int from_digits(const std::vector<int>& d) const;

  [[nodiscard]] int generator() const { return generator_; }
  [[nodiscard]] bool is_generator(int a) const;
  /// Discrete log base generator(); throws std::domain_error for 0.
  [[nodiscard]] int log(int a) const;
  [[nodiscard]] int exp(std::int64_t k) const;

  /// "3" for prime fields, "2t+1" style otherwise.
  [[nodiscard]] std::string str(int a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

  /// Monic irreducible polynomials of degree d over this field, each as a
  /// coefficient vector of length d + 1 (low to high), in code order.
  /// Sieved once per degree and cached.
  [[nodiscard]] const std::vector<std::vector<int>>& irreducibles(int d) const;

 private:
  void build_tables();
  [[nodiscard]] int slow_mul(int a, int b) const;

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  int generator_ = 1;
  std::vector<int> exp_;
  std::vector<int> log_;
  std::vector<int> pow_p_;  // p^i

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<std::vector<int>>> irreducible_cache_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Shared field for q = p^e; throws std::invalid_argument unless q is a
/// prime power within FiniteField::kMaxOrder.
FieldPtr make_field(int q);
FieldPtr make_field(int p, int e);

bool is_prime(std::int64_t n);
/// (p, e) with q = p^e, or throws std::invalid_argument.
std::pair<int, int> prime_power(std::int64_t q);

/// Polynomial over a finite field, coefficients low to high, no trailing
/// zeros (the zero polynomial has no coefficients and degree -1).
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(FieldPtr field, std::vector<int> coeffs);

  static FqPoly constant(FieldPtr field, int c);
  static FqPoly z(FieldPtr field);
  /// z - a
  static FqPoly linear(FieldPtr field, int a);

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] const FiniteField& F() const { return *field_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  [[nodiscard]] int coeff(int i) const;
  [[nodiscard]] const std::vector<int>& coeffs() const { return c_; }

  [[nodiscard]] int eval(int a) const;
  [[nodiscard]] FqPoly monic() const;
  /// f(-z)
  [[nodiscard]] FqPoly negate_variable() const;
  /// Monic associate of f(-z).
  [[nodiscard]] FqPoly conjugate() const { return negate_variable().monic(); }

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  /// Quotient and remainder; throws std::domain_error for division by 0.
  [[nodiscard]] std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return a.divmod(b).second; }

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const FqPoly& a, const FqPoly& b);

  /// "z^3 + 4z + 1" with field elements written by FiniteField::str.
  [[nodiscard]] std::string str() const;

 private:
  void check_same(const FqPoly& o) const;
  void trim();

  FieldPtr field_;
  std::vector<int> c_;
};

/// All monic polynomials of degree d, in code order (c_0 fastest).
std::vector<FqPoly> monic_polynomials(const FieldPtr& field, int d);

/// Index of a monic polynomial in monic_polynomials order.
std::int64_t monic_index(const FqPoly& f);

struct FactorMultiset {
  std::vector<std::pair<FqPoly, int>> factors;  // sorted by operator<

  [[nodiscard]] FqPoly product(const FieldPtr& field) const;
  /// Degrees with multiplicity, largest first.
  [[nodiscard]] std::vector<int> degree_partition() const;
  [[nodiscard]] std::string str() const;
};

/// Complete factorization of a monic polynomial of degree >= 1: trial
/// division by the sieved irreducibles of degree <= deg/2, the remaining
/// cofactor being irreducible. Throws std::invalid_argument otherwise.
FactorMultiset factor(const FqPoly& f);

bool is_irreducible(const FqPoly& f);

/// (1/m) sum_{d | m} mu(d) q^{m/d}
std::int64_t irreducible_count_formula(std::int64_t q, int m);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_FINITE_FIELD_HPP
