#ifndef COXSHUFFLE_SUBSPACE_HPP
#define COXSHUFFLE_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxshuffle/dense.hpp"

namespace coxshuffle {

/// In-place reduced row echelon form. Pivot entries are 1 and every other
/// entry in a pivot column is 0; zero rows end up at the bottom.
/// Returns the pivot column of each nonzero row.
template <class Scalar>
std::vector<Eigen::Index> rref(Mat<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis (as rows) of {v : constraints * v = 0}.
template <class Scalar>
Mat<Scalar> kernel(Mat<Scalar> constraints, Eigen::Index ambient_dim) {
  if (constraints.rows() == 0) return Mat<Scalar>::Identity(ambient_dim, ambient_dim);
  if (constraints.cols() != ambient_dim) throw std::invalid_argument("kernel: dimension mismatch");
  const auto pivots = rref(constraints);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_dim), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index nullity = ambient_dim - static_cast<Eigen::Index>(pivots.size());
  Mat<Scalar> basis = Mat<Scalar>::Zero(nullity, ambient_dim);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < ambient_dim; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(k, free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(k, pivots[r]) = -constraints(static_cast<Eigen::Index>(r), free);
    }
    ++k;
  }
  return basis;
}

/// A linear subspace of Scalar^n stored by its canonical reduced echelon
/// basis, so equal subspaces have identical representations.
template <class Scalar>
class Subspace {
 public:
  explicit Subspace(int ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(int ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Mat<Scalar>::Identity(ambient_dim, ambient_dim);
    return s;
  }

  /// Wraps rows that are already in canonical form.
  static Subspace from_canonical(Mat<Scalar> rows) {
    Subspace s(static_cast<int>(rows.cols()));
    s.basis_ = std::move(rows);
    return s;
  }

  [[nodiscard]] int ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.rows()); }
  [[nodiscard]] const Mat<Scalar>& basis() const { return basis_; }

  /// v lies in the span iff appending it does not raise the rank.
  [[nodiscard]] bool contains(const Vec<Scalar>& v) const {
    Mat<Scalar> m(dim() + 1, ambient_dim_);
    m.topRows(dim()) = basis_;
    m.row(dim()) = v.transpose();
    return static_cast<int>(rref(m).size()) == dim();
  }

  /// other is a subspace of *this.
  [[nodiscard]] bool contains(const Subspace& other) const {
    for (Eigen::Index r = 0; r < other.basis_.rows(); ++r) {
      if (!contains(Vec<Scalar>(other.basis_.row(r).transpose()))) return false;
    }
    return true;
  }

  [[nodiscard]] std::string key() const { return std::to_string(ambient_dim_) + "|" + matrix_key(basis_); }
  [[nodiscard]] std::size_t hash() const { return matrix_hash(basis_) * 31u + static_cast<std::size_t>(ambient_dim_); }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_dim_ == y.ambient_dim_ && x.basis_.rows() == y.basis_.rows() &&
           x.basis_ == y.basis_;
  }

 private:
  int ambient_dim_;
  Mat<Scalar> basis_;
};

template <class Scalar>
Subspace<Scalar> canonicalize(Mat<Scalar> rows) {
  const auto pivots = rref(rows);
  return Subspace<Scalar>::from_canonical(rows.topRows(static_cast<Eigen::Index>(pivots.size())));
}

/// Canonical span of the given vectors (empty input gives the zero subspace).
template <class Scalar>
Subspace<Scalar> canonicalize(const std::vector<Vec<Scalar>>& vectors, int ambient_dim) {
  Mat<Scalar> rows(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("canonicalize: vector length mismatch");
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return canonicalize(std::move(rows));
}

/// Functionals (as rows) vanishing on s.
template <class Scalar>
Mat<Scalar> annihilator(const Subspace<Scalar>& s) {
  return kernel(s.basis(), s.ambient_dim());
}

/// Common zero set of the given functionals (rows), as a canonical subspace.
template <class Scalar>
Subspace<Scalar> zero_set(const Mat<Scalar>& functionals, int ambient_dim) {
  return canonicalize(kernel(functionals, ambient_dim));
}

template <class Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& s1, const Subspace<Scalar>& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  const Mat<Scalar> a1 = annihilator(s1);
  const Mat<Scalar> a2 = annihilator(s2);
  Mat<Scalar> stacked(a1.rows() + a2.rows(), s1.ambient_dim());
  stacked.topRows(a1.rows()) = a1;
  stacked.bottomRows(a2.rows()) = a2;
  return zero_set(stacked, s1.ambient_dim());
}

/// s intersected with the hyperplane {v : functional . v = 0}.
template <class Scalar>
Subspace<Scalar> intersect_hyperplane(const Subspace<Scalar>& s, const RowVec<Scalar>& functional) {
  const Vec<Scalar> values = s.basis() * functional.transpose();
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!is_zero(values(i))) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return s;
  Mat<Scalar> rows(s.dim() - 1, s.ambient_dim());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (i == pivot) continue;
    const Scalar t = values(i) / values(pivot);
    rows.row(k++) = s.basis().row(i) - t * s.basis().row(pivot);
  }
  return canonicalize(std::move(rows));
}

}  // namespace coxshuffle

template <class Scalar>
struct std::hash<coxshuffle::Subspace<Scalar>> {
  std::size_t operator()(const coxshuffle::Subspace<Scalar>& s) const { return s.hash(); }
};

#endif  // COXSHUFFLE_SUBSPACE_HPP
