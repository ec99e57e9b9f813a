#ifndef COXSHUFFLE_RATIONAL_HPP
#define COXSHUFFLE_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coxshuffle {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class that
/// returns plain values from every operator (no expression templates), so
/// it can be used as an Eigen scalar.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    set(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  }

  Rational(const mpz_class& num, const mpz_class& den) { set(num, den); }
  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class num() const { return value_.get_num(); }
  [[nodiscard]] mpz_class den() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// Always "p/q", including "n/1" for integers.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.value_.get_mpq_t(), a.value_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  void set(const mpz_class& num, const mpz_class& den);
  mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);
inline int sign(const Rational& r) { return r.sign(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Binomial coefficient C(top, k) for rational top and integer k >= 0,
/// as the falling-factorial polynomial top(top-1)...(top-k+1)/k!.
Rational binomial(const Rational& top, int k);

std::size_t hash_mpz(const mpz_class& z);

}  // namespace coxshuffle

template <>
struct std::hash<coxshuffle::Rational> {
  std::size_t operator()(const coxshuffle::Rational& r) const { return r.hash(); }
};

#endif  // COXSHUFFLE_RATIONAL_HPP
