#include "coxshuffle/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace coxshuffle {

IntPoly::IntPoly(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::q_integer(int m) {
  return IntPoly(std::vector<std::int64_t>(static_cast<std::size_t>(m) + 1, 1));
}

IntPoly IntPoly::from_roots(const std::vector<std::int64_t>& roots) {
  IntPoly p = constant(1);
  for (auto r : roots) p = p * IntPoly({-r, 1});
  return p;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::int64_t IntPoly::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, 0);
  const std::int64_t lead = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const std::int64_t top = rem[static_cast<std::size_t>(k + d.degree())];
    if (top % lead != 0) return std::nullopt;
    const std::int64_t q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * d.coeff(j);
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::string IntPoly::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const std::int64_t c = coeff(k);
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return IntPoly(std::move(out));
}

std::optional<std::vector<std::int64_t>> integer_roots(const IntPoly& p) {
  std::vector<std::int64_t> roots;
  IntPoly rest = p;
  if (rest.is_zero()) return std::nullopt;
  while (rest.degree() > 0) {
    if (rest.coeff(0) == 0) {
      roots.push_back(0);
      rest = *rest.divide_exact(IntPoly({0, 1}));
      continue;
    }
    const std::int64_t c0 = std::llabs(rest.coeff(0));
    bool found = false;
    for (std::int64_t d = 1; d <= c0 && !found; ++d) {
      if (c0 % d != 0) continue;
      for (std::int64_t r : {d, -d}) {
        if (rest.evaluate(r) == 0) {
          roots.push_back(r);
          rest = *rest.divide_exact(IntPoly({-r, 1}));
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  if (rest.leading() != 1 && rest.leading() != -1) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<int>> factor_q_integers(const IntPoly& p, int factor_count) {
  std::vector<int> chosen;
  std::function<bool(const IntPoly&, int, int)> search = [&](const IntPoly& rest, int remaining,
                                                             int min_m) -> bool {
    if (remaining == 0) return rest == IntPoly::constant(1);
    for (int m = min_m; m <= rest.degree(); ++m) {
      auto q = rest.divide_exact(IntPoly::q_integer(m));
      if (!q) continue;
      chosen.push_back(m);
      if (search(*q, remaining - 1, m)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(p, factor_count, 1)) return std::nullopt;
  return chosen;
}

}  // namespace coxshuffle
