#ifndef COXSHUFFLE_ROOT_SYSTEM_HPP
#define COXSHUFFLE_ROOT_SYSTEM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coxshuffle/dense.hpp"

namespace coxshuffle {

enum class Family { A, B, D, I2, G2, H3, H4 };

/// Which finite Coxeter group: family plus rank (and m for I2(m)).
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral order parameter, I2 only

  /// "A3", "B2", "D4", "G2", "H3", "H4", "I2(5)" (also "I2_5").
  static CoxeterType parse(std::string_view name);
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool crystallographic() const {
    return family == Family::A || family == Family::B || family == Family::D || family == Family::G2;
  }
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

class UnsupportedType : public std::invalid_argument {
 public:
  explicit UnsupportedType(const std::string& what) : std::invalid_argument("unsupported type: " + what) {}
};

/// Throws UnsupportedType unless the (family, rank) pair is built here.
void check_supported(const CoxeterType& type);

/// Simple roots, positive roots and the pairing data of a finite reflection
/// group. All vectors are written in simple-root coordinates; `gram` is the
/// invariant bilinear form on those coordinates and `cartan(i, j)` is
/// 2 B(a_i, a_j) / B(a_i, a_i), so s_i(a_j) = a_j - cartan(i, j) a_i.
template <class Scalar>
struct RootSystem {
  CoxeterType type;
  Mat<Scalar> gram;
  Mat<Scalar> cartan;
  std::vector<Vec<Scalar>> positive_roots;

  [[nodiscard]] int rank() const { return static_cast<int>(gram.rows()); }
  [[nodiscard]] static constexpr ScalarField scalar_field() { return scalar_field_of<Scalar>(); }

  [[nodiscard]] Vec<Scalar> simple_root(int i) const { return Vec<Scalar>::Unit(rank(), i); }

  /// Matrix of s_i acting on simple-root coordinates: I - e_i * cartan.row(i).
  [[nodiscard]] Mat<Scalar> simple_reflection(int i) const {
    Mat<Scalar> s = Mat<Scalar>::Identity(rank(), rank());
    s.row(i) -= cartan.row(i);
    return s;
  }

  /// The linear form v -> B(root, v); its kernel is the reflecting hyperplane.
  [[nodiscard]] RowVec<Scalar> functional(const Vec<Scalar>& root) const {
    return root.transpose() * gram;
  }
};

template <class Scalar>
bool is_nonnegative(const Vec<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (sign(v(i)) < 0) return false;
  }
  return true;
}

/// Fills cartan and positive_roots from a Gram matrix. Positive roots are
/// generated from the simple ones by applying simple reflections and keeping
/// results with nonnegative coordinates, in discovery order.
template <class Scalar>
RootSystem<Scalar> make_root_system(const CoxeterType& type, Mat<Scalar> gram) {
  RootSystem<Scalar> rs;
  rs.type = type;
  const Eigen::Index r = gram.rows();
  rs.cartan = Mat<Scalar>(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) rs.cartan(i, j) = Scalar(2) * gram(i, j) / gram(i, i);
  }
  rs.gram = std::move(gram);
  std::vector<Vec<Scalar>>& roots = rs.positive_roots;
  for (int i = 0; i < r; ++i) roots.push_back(rs.simple_root(i));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      const Scalar pairing = rs.cartan.row(i).dot(roots[k]);
      if (is_zero(pairing)) continue;
      Vec<Scalar> image = roots[k];
      image(i) -= pairing;
      if (!is_nonnegative(image)) continue;
      bool seen = false;
      for (const auto& existing : roots) {
        if (existing == image) {
          seen = true;
          break;
        }
      }
      if (!seen) roots.push_back(std::move(image));
    }
  }
  return rs;
}

using AnyRootSystem = std::variant<RootSystem<Rational>, RootSystem<GoldenRational>>;

/// Root system of a supported type; crystallographic families and the
/// rational dihedral cases use Rational scalars, the rest GoldenRational.
AnyRootSystem build_root_system(const CoxeterType& type);

/// Known group order, used as a consistency check after enumeration.
std::uint64_t expected_order(const CoxeterType& type);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_ROOT_SYSTEM_HPP
