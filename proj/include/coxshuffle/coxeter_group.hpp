#ifndef COXSHUFFLE_COXETER_GROUP_HPP
#define COXSHUFFLE_COXETER_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "coxshuffle/class_label.hpp"
#include "coxshuffle/polynomial.hpp"
#include "coxshuffle/root_system.hpp"

namespace coxshuffle {

using DescentSet = std::uint32_t;  // bit i <-> simple root a_{i+1}

/// Descent set as "{a1,a3}".
std::string descent_str(DescentSet d, int rank);
inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

struct ConjugacyClass {
  ClassLabel label;
  std::vector<int> members;
};

/// Scalar-independent part of an enumerated Coxeter group: element indices
/// with lengths, descent sets, inverses, generator multiplication tables and
/// class labels. Element 0 is the identity; indices follow breadth-first
/// discovery order, so they are stable across runs.
struct GroupTable {
  CoxeterType type;
  int rank = 0;
  std::vector<int> length;
  std::vector<DescentSet> descents;
  std::vector<int> inverse;
  std::vector<int> parent;      // w = parent[w] * s_{parent_gen[w]}
  std::vector<int> parent_gen;
  std::vector<int> right_mul;   // [w * rank + i] = w * s_i
  std::vector<int> left_mul;    // [w * rank + i] = s_i * w
  /// [w * rank + i]: support (in simple roots) of the root w(a_i).
  std::vector<std::uint32_t> column_support;
  int longest = 0;
  bool longest_is_minus_identity = false;
  /// Permutation (family A, on {1..rank+1}) or signed permutation
  /// (family B, on {1..rank}) in one-line form; empty for other families.
  std::vector<std::vector<int>> one_line;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;

  [[nodiscard]] int order() const { return static_cast<int>(length.size()); }
  [[nodiscard]] int identity() const { return 0; }
  [[nodiscard]] DescentSet full_set() const { return (DescentSet{1} << rank) - 1; }
  [[nodiscard]] int times_simple(int w, int i) const { return right_mul[static_cast<std::size_t>(w * rank + i)]; }
  [[nodiscard]] int simple_times(int i, int w) const { return left_mul[static_cast<std::size_t>(w * rank + i)]; }
  [[nodiscard]] std::uint32_t root_support(int w, int i) const {
    return column_support[static_cast<std::size_t>(w * rank + i)];
  }

  /// Reduced word (generator indices, left to right) along the BFS tree.
  [[nodiscard]] std::vector<int> word(int w) const;
  [[nodiscard]] int multiply(int u, int v) const;
  /// Element with the given one-line form (families A and B), or -1.
  [[nodiscard]] int find_one_line(const std::vector<int>& form) const;

  /// Element indices sorted into descent classes.
  [[nodiscard]] std::vector<std::vector<int>> descent_classes() const;

  void index_one_line();

 private:
  std::map<std::vector<int>, int> one_line_index_;
};

/// Enumerated group together with its root system and the exact matrix of
/// every element acting on simple-root coordinates.
template <class Scalar>
struct CoxeterGroup : GroupTable {
  RootSystem<Scalar> root_system;
  std::vector<Mat<Scalar>> matrices;

  [[nodiscard]] int find(const Mat<Scalar>& m) const {
    auto it = buckets_.find(matrix_hash(m));
    if (it == buckets_.end()) return -1;
    for (int idx : it->second) {
      if (matrices[static_cast<std::size_t>(idx)] == m) return idx;
    }
    return -1;
  }

  int insert(Mat<Scalar> m) {
    const int idx = static_cast<int>(matrices.size());
    buckets_[matrix_hash(m)].push_back(idx);
    matrices.push_back(std::move(m));
    return idx;
  }

 private:
  std::unordered_map<std::size_t, std::vector<int>> buckets_;
};

using AnyCoxeterGroup = std::variant<CoxeterGroup<Rational>, CoxeterGroup<GoldenRational>>;

inline const GroupTable& table_of(const AnyCoxeterGroup& g) {
  return std::visit([](const auto& x) -> const GroupTable& { return x; }, g);
}

/// Fills classes/class_of. Family A: cycle type; family B: signed cycle
/// type; otherwise orbits under conjugation by the simple reflections, each
/// labelled by its smallest element index.
void conjugacy_classes(GroupTable& g);

/// Classes by brute-force conjugation orbits, regardless of family.
std::vector<std::vector<int>> brute_force_classes(const GroupTable& g);

/// sum_w t^{l(w)}
IntPoly poincare_polynomial(const GroupTable& g);

/// Exponents m_i from the factorization of the Poincare polynomial into
/// q-integers [m_i + 1]. Throws std::logic_error if it does not factor.
std::vector<int> exponents(const GroupTable& g);

namespace detail {

template <class Scalar>
bool is_negative_root(const Vec<Scalar>& v) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const int s = sign(v(i));
    if (s > 0) return false;
    if (s < 0) nonzero = true;
  }
  return nonzero;
}

void finish_table(GroupTable& g);

}  // namespace detail

/// Breadth-first closure of the simple reflections. Lengths are BFS depths;
/// a_i is a descent of w when w(a_i) has all coordinates <= 0.
template <class Scalar>
CoxeterGroup<Scalar> enumerate_group(const RootSystem<Scalar>& rs) {
  CoxeterGroup<Scalar> g;
  g.type = rs.type;
  g.rank = rs.rank();
  g.root_system = rs;
  const int r = g.rank;
  const auto& C = rs.cartan;

  g.insert(Mat<Scalar>::Identity(r, r));
  g.length.push_back(0);
  g.parent.push_back(-1);
  g.parent_gen.push_back(-1);
  const bool has_one_line = rs.type.family == Family::A || rs.type.family == Family::B;
  if (has_one_line) {
    const int n = rs.type.family == Family::A ? r + 1 : r;
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
    g.one_line.push_back(std::move(id));
  }

  for (std::size_t w = 0; w < g.matrices.size(); ++w) {
    for (int i = 0; i < r; ++i) {
      // w s_i = w - w.col(i) * cartan.row(i)
      Mat<Scalar> next = g.matrices[w] - g.matrices[w].col(i) * C.row(i);
      int idx = g.find(next);
      if (idx < 0) {
        idx = g.insert(std::move(next));
        g.length.push_back(g.length[w] + 1);
        g.parent.push_back(static_cast<int>(w));
        g.parent_gen.push_back(i);
        if (has_one_line) {
          std::vector<int> form = g.one_line[w];
          if (rs.type.family == Family::B && i == r - 1) {
            form.back() = -form.back();
          } else {
            std::swap(form[static_cast<std::size_t>(i)], form[static_cast<std::size_t>(i + 1)]);
          }
          g.one_line.push_back(std::move(form));
        }
      }
      g.right_mul.push_back(idx);
    }
  }

  const std::size_t order = g.matrices.size();
  g.left_mul.resize(order * static_cast<std::size_t>(r));
  g.descents.assign(order, 0);
  g.column_support.resize(order * static_cast<std::size_t>(r));
  for (std::size_t w = 0; w < order; ++w) {
    const Mat<Scalar>& m = g.matrices[w];
    for (int i = 0; i < r; ++i) {
      Mat<Scalar> next = m;
      next.row(i) -= C.row(i) * m;
      const int idx = g.find(next);
      if (idx < 0) throw std::logic_error("enumerate_group: left product escaped the group");
      g.left_mul[w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] = idx;
      const Vec<Scalar> image = m.col(i);
      std::uint32_t support = 0;
      for (int j = 0; j < r; ++j) {
        if (!is_zero(image(j))) support |= 1u << j;
      }
      g.column_support[w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] = support;
      if (detail::is_negative_root(image)) g.descents[w] |= DescentSet{1} << i;
    }
  }
  const Mat<Scalar> minus_id = -Mat<Scalar>::Identity(r, r);
  detail::finish_table(g);
  g.longest_is_minus_identity = g.matrices[static_cast<std::size_t>(g.longest)] == minus_id;
  return g;
}

/// Root system + enumeration for a supported type.
AnyCoxeterGroup build_group(const CoxeterType& type);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_COXETER_GROUP_HPP
