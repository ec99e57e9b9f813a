#ifndef COXSHUFFLE_DENSE_HPP
#define COXSHUFFLE_DENSE_HPP

// Eigen glue for the exact scalar types: NumTraits specializations and the
// dense matrix/vector aliases used throughout the library.

#include <cstddef>
#include <string>

#include <Eigen/Core>

#include "coxshuffle/golden.hpp"
#include "coxshuffle/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<coxshuffle::Rational> : GenericNumTraits<coxshuffle::Rational> {
  using Real = coxshuffle::Rational;
  using NonInteger = coxshuffle::Rational;
  using Literal = coxshuffle::Rational;
  using Nested = coxshuffle::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<coxshuffle::GoldenRational> : GenericNumTraits<coxshuffle::GoldenRational> {
  using Real = coxshuffle::GoldenRational;
  using NonInteger = coxshuffle::GoldenRational;
  using Literal = coxshuffle::GoldenRational;
  using Nested = coxshuffle::GoldenRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace coxshuffle {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using RationalMatrix = Mat<Rational>;
using GoldenMatrix = Mat<GoldenRational>;

/// Tag for the two supported scalar fields.
enum class ScalarField { Rational, Golden };

template <class Scalar>
constexpr ScalarField scalar_field_of();
template <>
constexpr ScalarField scalar_field_of<Rational>() { return ScalarField::Rational; }
template <>
constexpr ScalarField scalar_field_of<GoldenRational>() { return ScalarField::Golden; }

inline const char* to_string(ScalarField f) {
  return f == ScalarField::Rational ? "Rational" : "GoldenRational";
}

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Canonical text encoding of a dense exact matrix, used as a hash key.
template <class Derived>
std::string matrix_key(const Eigen::MatrixBase<Derived>& m) {
  std::string key;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key += m(i, j).str();
      key += ';';
    }
  }
  return key;
}

template <class Derived>
std::size_t matrix_hash(const Eigen::MatrixBase<Derived>& m) {
  std::size_t h = static_cast<std::size_t>(m.rows() * 131 + m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      h = h * 1099511628211ULL ^ m(i, j).hash();
    }
  }
  return h;
}

}  // namespace coxshuffle

#endif  // COXSHUFFLE_DENSE_HPP
