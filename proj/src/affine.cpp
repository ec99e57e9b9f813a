#include "coxshuffle/affine.hpp"

#include <functional>

namespace coxshuffle {

AffineData affine_data(const AnyRootSystem& rs) {
  if (const auto* rational = std::get_if<RootSystem<Rational>>(&rs)) return affine_data(*rational);
  throw NoAffineData(std::visit([](const auto& r) { return r.type.name(); }, rs));
}

AffineData affine_data(const RootSystem<Rational>& rs) {
  const auto f = rs.type.family;
  if (f != Family::A && f != Family::B && f != Family::D && f != Family::G2) throw NoAffineData(rs.type.name());

  // In a crystallographic system the maximal element of the root poset is
  // the unique root of greatest height.
  const Vec<Rational>* best = nullptr;
  Rational best_height(-1);
  for (const auto& root : rs.positive_roots) {
    Rational height = root.sum();
    if (height > best_height) {
      best_height = height;
      best = &root;
    }
  }
  AffineData ad;
  ad.type = rs.type;
  ad.marks.push_back(1);
  for (Eigen::Index i = 0; i < best->size(); ++i) {
    if (!(*best)(i).is_integer()) throw std::logic_error("affine_data: non-integral highest root");
    const int c = static_cast<int>((*best)(i).num().get_si());
    ad.highest_root.push_back(c);
    ad.marks.push_back(c);
  }
  for (const auto& root : rs.positive_roots) {
    for (Eigen::Index i = 0; i < root.size(); ++i) {
      if ((*best)(i) < root(i)) throw std::logic_error("affine_data: highest root is not maximal");
    }
  }

  // |det| by exact elimination
  Mat<Rational> m = rs.cartan;
  Rational det(1);
  const Eigen::Index r = m.rows();
  for (Eigen::Index col = 0; col < r; ++col) {
    Eigen::Index pivot = col;
    while (pivot < r && m(pivot, col).is_zero()) ++pivot;
    if (pivot == r) {
      det = Rational(0);
      break;
    }
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index row = col + 1; row < r; ++row) {
      const Rational t = m(row, col) / m(col, col);
      m.row(row) -= t * m.row(col);
    }
  }
  ad.index_of_connection = static_cast<int>(abs(det).num().get_si());
  return ad;
}

std::uint64_t p_count(const AffineData& ad, std::uint32_t S, int x) {
  // Substituting y = 1 + z turns this into counting z >= 0 with
  // sum c z = x - sum c, a coin-change count.
  int rest = x;
  std::vector<int> coins;
  for (int k = 0; k < ad.extended_size(); ++k) {
    if (S >> k & 1u) continue;
    coins.push_back(ad.marks[static_cast<std::size_t>(k)]);
    rest -= ad.marks[static_cast<std::size_t>(k)];
  }
  if (coins.empty() || rest < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(rest + 1), 0);
  ways[0] = 1;
  for (int c : coins) {
    for (int v = c; v <= rest; ++v) ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - c)];
  }
  return ways[static_cast<std::size_t>(rest)];
}

std::uint64_t p_count_brute_force(const AffineData& ad, std::uint32_t S, int x) {
  std::vector<int> coins;
  for (int k = 0; k < ad.extended_size(); ++k) {
    if (!(S >> k & 1u)) coins.push_back(ad.marks[static_cast<std::size_t>(k)]);
  }
  if (coins.empty()) return 0;
  std::function<std::uint64_t(std::size_t, int)> go = [&](std::size_t k, int remaining) -> std::uint64_t {
    if (k + 1 == coins.size()) return remaining > 0 && remaining % coins[k] == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (int y = 1; y * coins[k] < remaining; ++y) total += go(k + 1, remaining - y * coins[k]);
    return total;
  };
  return go(0, x);
}

}  // namespace coxshuffle
