#include "coxshuffle/golden.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace coxshuffle {

GoldenRational& GoldenRational::operator*=(const GoldenRational& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

GoldenRational& GoldenRational::operator/=(const GoldenRational& o) {
  if (o.is_zero()) throw std::domain_error("golden division by zero");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

double GoldenRational::to_double() const {
  return a_.to_double() + b_.to_double() * (1.0 + std::sqrt(5.0)) / 2.0;
}

std::string GoldenRational::str() const { return a_.str() + "+" + b_.str() + "*phi"; }

GoldenRational GoldenRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const auto star = s.find("*phi");
  if (star == std::string::npos) return GoldenRational(Rational::parse(s));
  // the rational part ends at the last '+' or '-' that is not a leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = star; i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    return {Rational(0), Rational::parse(s.substr(0, star))};
  }
  std::string phi_part = s.substr(split, star - split);
  if (phi_part[0] == '+') phi_part.erase(0, 1);
  return {Rational::parse(s.substr(0, split)), Rational::parse(phi_part)};
}

std::ostream& operator<<(std::ostream& os, const GoldenRational& g) { return os << g.str(); }

int golden_sign(const GoldenRational& x) {
  // value = (u + v sqrt5) / 2 with u = 2a + b, v = b
  const Rational u = Rational(2) * x.a() + x.b();
  const Rational& v = x.b();
  const int su = u.sign();
  const int sv = v.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // u^2 == 5 v^2 has no nonzero rational solution, so the comparison is strict
  return u * u > Rational(5) * v * v ? su : sv;
}

bool operator<(const GoldenRational& x, const GoldenRational& y) {
  return golden_sign(x - y) < 0;
}

}  // namespace coxshuffle
