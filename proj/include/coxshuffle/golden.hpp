#ifndef COXSHUFFLE_GOLDEN_HPP
#define COXSHUFFLE_GOLDEN_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "coxshuffle/rational.hpp"

namespace coxshuffle {

/// Exact element a + b*phi of Q(sqrt 5), phi = (1 + sqrt 5) / 2.
/// Closed under field operations through phi^2 = phi + 1.
class GoldenRational {
 public:
  GoldenRational() = default;
  template <std::integral I>
  GoldenRational(I value) : a_(value) {}  // NOLINT
  GoldenRational(Rational a) : a_(std::move(a)) {}  // NOLINT
  GoldenRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenRational phi() { return {Rational(0), Rational(1)}; }

  /// Parses "a/b+c/d*phi" (the rational part or the phi part may be omitted).
  static GoldenRational parse(std::string_view text);

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Field norm (a + b phi)(a + b - b phi) = a^2 + ab - b^2.
  [[nodiscard]] Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  [[nodiscard]] GoldenRational conjugate() const { return {a_ + b_, -b_}; }
  [[nodiscard]] double to_double() const;

  /// "a/b+c/d*phi"; the phi coefficient keeps its own sign ("1/1+-1/2*phi").
  [[nodiscard]] std::string str() const;

  GoldenRational& operator+=(const GoldenRational& o) { a_ += o.a_; b_ += o.b_; return *this; }
  GoldenRational& operator-=(const GoldenRational& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  GoldenRational& operator*=(const GoldenRational& o);
  GoldenRational& operator/=(const GoldenRational& o);

  friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
  friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
  friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
  friend GoldenRational operator/(GoldenRational x, const GoldenRational& y) { return x /= y; }
  friend GoldenRational operator-(const GoldenRational& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const GoldenRational& x, const GoldenRational& y) = default;

  friend std::ostream& operator<<(std::ostream& os, const GoldenRational& g);

  [[nodiscard]] std::size_t hash() const { return a_.hash() * 1000003u ^ b_.hash(); }

 private:
  Rational a_;
  Rational b_;
};

/// Sign of a + b*phi under the real embedding, decided by comparing
/// (2a + b)^2 with 5 b^2. No floating point involved.
int golden_sign(const GoldenRational& x);

inline int sign(const GoldenRational& x) { return golden_sign(x); }
inline bool is_zero(const GoldenRational& x) { return x.is_zero(); }
bool operator<(const GoldenRational& x, const GoldenRational& y);

}  // namespace coxshuffle

template <>
struct std::hash<coxshuffle::GoldenRational> {
  std::size_t operator()(const coxshuffle::GoldenRational& g) const { return g.hash(); }
};

#endif  // COXSHUFFLE_GOLDEN_HPP
