#ifndef COXSHUFFLE_LATTICE_HPP
#define COXSHUFFLE_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "coxshuffle/polynomial.hpp"
#include "coxshuffle/root_system.hpp"
#include "coxshuffle/subspace.hpp"

namespace coxshuffle {

using HyperplaneMask = std::uint64_t;

/// Intersection lattice of a central arrangement, ordered by reverse
/// inclusion. Flat 0 is the whole space V. Each flat also records which
/// hyperplanes contain it; X <= Y exactly when mask(X) is a subset of
/// mask(Y), which avoids subspace comparisons in every poset query.
template <class Scalar>
class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  IntersectionLattice(std::vector<Subspace<Scalar>> flats, std::vector<HyperplaneMask> masks, int hyperplanes)
      : flats_(std::move(flats)), masks_(std::move(masks)), hyperplane_count_(hyperplanes) {
    for (std::size_t i = 0; i < flats_.size(); ++i) index_.emplace(flats_[i].key(), static_cast<int>(i));
    mobius_.resize(flats_.size());
  }

  [[nodiscard]] int size() const { return static_cast<int>(flats_.size()); }
  [[nodiscard]] int hyperplane_count() const { return hyperplane_count_; }
  [[nodiscard]] int ambient_dim() const { return flats_.empty() ? 0 : flats_[0].ambient_dim(); }
  [[nodiscard]] const Subspace<Scalar>& flat(int i) const { return flats_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int dim(int i) const { return flat(i).dim(); }
  [[nodiscard]] HyperplaneMask mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }

  /// Index of a flat, or -1.
  [[nodiscard]] int find(const Subspace<Scalar>& s) const {
    auto it = index_.find(s.key());
    return it == index_.end() ? -1 : it->second;
  }

  [[nodiscard]] bool leq(int x, int y) const { return (mask(x) & ~mask(y)) == 0; }

  /// mu(x, .) for every flat (zero where incomparable), memoized per bottom.
  const std::vector<std::int64_t>& mobius_from(int x) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto& row = mobius_[static_cast<std::size_t>(x)];
    if (!row.empty()) return row;
    // Flats are sorted by decreasing dimension, so everything strictly
    // between x and y precedes y.
    row.assign(flats_.size(), 0);
    row[static_cast<std::size_t>(x)] = 1;
    std::vector<int> above;
    for (int y = x + 1; y < size(); ++y) {
      if (!leq(x, y) || dim(y) == dim(x)) continue;
      std::int64_t sum = 0;
      for (int z : above) {
        if (leq(z, y)) sum += row[static_cast<std::size_t>(z)];
      }
      sum += 1;  // z = x
      row[static_cast<std::size_t>(y)] = -sum;
      above.push_back(y);
    }
    return row;
  }

  [[nodiscard]] std::int64_t mobius(int x, int y) const { return mobius_from(x)[static_cast<std::size_t>(y)]; }

 private:
  std::vector<Subspace<Scalar>> flats_;
  std::vector<HyperplaneMask> masks_;
  int hyperplane_count_ = 0;
  std::unordered_map<std::string, int> index_;
  mutable std::vector<std::vector<std::int64_t>> mobius_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
};

/// Lattice of all intersections of the hyperplanes {v : f . v = 0}, one per
/// row of `functionals`. Closure is reached by intersecting every flat with
/// every hyperplane; the result is sorted by (dimension descending, key),
/// so it does not depend on the order of the hyperplanes.
template <class Scalar>
IntersectionLattice<Scalar> build_lattice_from_functionals(const std::vector<RowVec<Scalar>>& functionals,
                                                           int ambient_dim) {
  if (functionals.size() > 64) throw std::invalid_argument("build_lattice: more than 64 hyperplanes");
  std::vector<Subspace<Scalar>> flats{Subspace<Scalar>::full(ambient_dim)};
  std::unordered_map<std::string, int> seen{{flats[0].key(), 0}};
  for (std::size_t k = 0; k < flats.size(); ++k) {
    if (flats[k].dim() == 0) continue;
    for (const auto& f : functionals) {
      Subspace<Scalar> next = intersect_hyperplane(flats[k], f);
      if (next.dim() == flats[k].dim()) continue;
      auto key = next.key();
      if (seen.emplace(std::move(key), static_cast<int>(flats.size())).second) flats.push_back(std::move(next));
    }
  }
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < flats.size(); ++i) order.emplace_back(flats[i].key(), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const int da = flats[a.second].dim();
    const int db = flats[b.second].dim();
    return da != db ? da > db : a.first < b.first;
  });
  std::vector<Subspace<Scalar>> sorted;
  std::vector<HyperplaneMask> masks;
  for (const auto& [key, i] : order) {
    HyperplaneMask m = 0;
    const auto& basis = flats[i].basis();
    for (std::size_t h = 0; h < functionals.size(); ++h) {
      if (all_zero(basis * functionals[h].transpose())) m |= HyperplaneMask{1} << h;
    }
    masks.push_back(m);
    sorted.push_back(std::move(flats[i]));
  }
  return IntersectionLattice<Scalar>(std::move(sorted), std::move(masks), static_cast<int>(functionals.size()));
}

/// Reflection arrangement of a root system: one hyperplane per positive root.
template <class Scalar>
IntersectionLattice<Scalar> build_lattice(const RootSystem<Scalar>& rs) {
  if (rs.positive_roots.size() > 60) throw std::invalid_argument("build_lattice: more than 60 positive roots");
  std::vector<RowVec<Scalar>> functionals;
  for (const auto& root : rs.positive_roots) functionals.push_back(rs.functional(root));
  return build_lattice_from_functionals(functionals, rs.rank());
}

/// sum_{Y >= X} mu(X, Y) x^{dim Y}
template <class Scalar>
IntPoly char_poly(const IntersectionLattice<Scalar>& lat, int x) {
  const auto& mu = lat.mobius_from(x);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(lat.dim(x) + 1), 0);
  for (int y = 0; y < lat.size(); ++y) {
    if (mu[static_cast<std::size_t>(y)] != 0) coeffs[static_cast<std::size_t>(lat.dim(y))] += mu[static_cast<std::size_t>(y)];
  }
  return IntPoly(std::move(coeffs));
}

template <class Scalar>
IntPoly char_poly(const IntersectionLattice<Scalar>& lat, const Subspace<Scalar>& X) {
  const int idx = lat.find(X);
  if (idx < 0) throw std::invalid_argument("char_poly: subspace is not a flat of the lattice");
  return char_poly(lat, idx);
}

/// Integer roots b_i of a restricted characteristic polynomial, checked
/// against the largest exponent. Throws std::logic_error if the
/// polynomial does not split over Z or a root exceeds max_exponent.
std::vector<std::int64_t> coexponents_of(const IntPoly& restricted_char_poly, int max_exponent);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_LATTICE_HPP
