#include "coxshuffle/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace coxshuffle {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty() || (s.size() == 1 && (s[0] == '-' || s[0] == '+'))) {
    throw std::invalid_argument("empty integer in rational literal");
  }
  if (s[0] == '+') s.erase(0, 1);
  for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
  }
  return mpz_class(s, 10);
}

}  // namespace

void Rational::set(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return {parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t Rational::hash() const {
  return hash_mpz(value_.get_num()) * 31u + hash_mpz(value_.get_den());
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Rational binomial(const Rational& top, int k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (int i = 0; i < k; ++i) {
    result *= (top - Rational(i));
    result /= Rational(i + 1);
  }
  return result;
}

}  // namespace coxshuffle
