#include "coxshuffle/root_system.hpp"

#include <cctype>
#include <string>

namespace coxshuffle {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw UnsupportedType(std::string(whole));
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw UnsupportedType(std::string(whole));
    v = v * 10 + (c - '0');
    if (v > 1000) throw UnsupportedType(std::string(whole));
  }
  return v;
}

template <class Scalar>
Mat<Scalar> chain_gram(int rank, const Scalar& first_bond) {
  Mat<Scalar> g = Mat<Scalar>::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) g(i, i) = Scalar(2);
  for (int i = 0; i + 1 < rank; ++i) {
    g(i, i + 1) = g(i + 1, i) = (i == 0 ? first_bond : Scalar(-1));
  }
  return g;
}

}  // namespace

CoxeterType CoxeterType::parse(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (s.empty()) throw UnsupportedType(std::string(name));
  CoxeterType t;
  if (s.rfind("I2", 0) == 0 && s.size() > 2) {
    t.family = Family::I2;
    t.rank = 2;
    std::string_view rest = std::string_view(s).substr(2);
    if (rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else if (rest.front() == '_') {
      rest = rest.substr(1);
    }
    t.m = parse_int(rest, name);
    return t;
  }
  const std::string_view rank_part = std::string_view(s).substr(1);
  switch (s[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::B; break;  // same Weyl group as B
    case 'D': t.family = Family::D; break;
    case 'G': t.family = Family::G2; break;
    case 'H':
      t.family = parse_int(rank_part, name) == 3 ? Family::H3 : Family::H4;
      break;
    default: throw UnsupportedType(std::string(name));
  }
  t.rank = parse_int(rank_part, name);
  return t;
}

std::string CoxeterType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

void check_supported(const CoxeterType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1 && t.rank <= 5; break;
    case Family::B: ok = t.rank >= 1 && t.rank <= 4; break;
    case Family::D: ok = t.rank == 4; break;
    case Family::G2: ok = t.rank == 2; break;
    case Family::H3: ok = t.rank == 3; break;
    case Family::H4: ok = t.rank == 4; break;
    case Family::I2:
      // realizable over Q or Q(sqrt 5): 4 cos^2(pi/m) must lie in that field
      ok = t.rank == 2 && ((t.m >= 2 && t.m <= 6) || t.m == 10);
      break;
  }
  if (!ok) throw UnsupportedType(t.name());
}

AnyRootSystem build_root_system(const CoxeterType& type) {
  check_supported(type);
  const int r = type.rank;
  switch (type.family) {
    case Family::A:
      return make_root_system<Rational>(type, chain_gram<Rational>(r, Rational(-1)));
    case Family::B: {
      // a_i = e_i - e_{i+1}, a_n = e_n
      Mat<Rational> g = chain_gram<Rational>(r, Rational(-1));
      g(r - 1, r - 1) = Rational(1);
      return make_root_system<Rational>(type, std::move(g));
    }
    case Family::D: {
      Mat<Rational> g = Mat<Rational>::Zero(4, 4);
      for (int i = 0; i < 4; ++i) g(i, i) = Rational(2);
      for (int j : {0, 2, 3}) g(1, j) = g(j, 1) = Rational(-1);
      return make_root_system<Rational>(type, std::move(g));
    }
    case Family::G2: {
      Mat<Rational> g(2, 2);
      g << Rational(2), Rational(-3), Rational(-3), Rational(6);
      return make_root_system<Rational>(type, std::move(g));
    }
    case Family::H3:
    case Family::H4:
      return make_root_system<GoldenRational>(type, chain_gram<GoldenRational>(r, -GoldenRational::phi()));
    case Family::I2: {
      if (type.m == 5) {
        // odd m needs equal root lengths: B(a1, a2) = -2 cos(pi/5) = -phi
        return make_root_system<GoldenRational>(type, chain_gram<GoldenRational>(2, -GoldenRational::phi()));
      }
      if (type.m == 10) {
        // 4 cos^2(pi/10) = phi + 2; unequal lengths keep the form in Q(sqrt 5)
        Mat<GoldenRational> g(2, 2);
        g << GoldenRational(2), GoldenRational(-1), GoldenRational(-1),
            GoldenRational(2) / (GoldenRational::phi() + GoldenRational(2));
        return make_root_system<GoldenRational>(type, std::move(g));
      }
      Mat<Rational> g(2, 2);
      if (type.m == 2) {
        g << Rational(2), Rational(0), Rational(0), Rational(2);
      } else {
        const int four_cos2 = type.m == 3 ? 1 : (type.m == 4 ? 2 : 3);
        g << Rational(2), Rational(-1), Rational(-1), Rational(2, four_cos2);
      }
      return make_root_system<Rational>(type, std::move(g));
    }
  }
  throw UnsupportedType(type.name());
}

std::uint64_t expected_order(const CoxeterType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B: return (std::uint64_t{1} << t.rank) * factorial(t.rank);
    case Family::D: return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case Family::G2: return 12;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::I2: return 2 * static_cast<std::uint64_t>(t.m);
  }
  return 0;
}

}  // namespace coxshuffle
