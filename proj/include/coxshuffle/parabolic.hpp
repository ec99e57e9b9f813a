#ifndef COXSHUFFLE_PARABOLIC_HPP
#define COXSHUFFLE_PARABOLIC_HPP

#include <vector>

#include "coxshuffle/coxeter_group.hpp"
#include "coxshuffle/subspace.hpp"

namespace coxshuffle {

/// Scalar-free part of the data attached to a standard parabolic W_K.
struct ParabolicInfo {
  DescentSet K = 0;
  int subgroup_order = 1;
  int normalizer_order = 0;
  int lambda_count = 0;        // number of J with W_J conjugate to W_K
  DescentSet conjugacy_rep = 0;  // smallest such J (as a bit mask)
  std::vector<int> elements;   // element indices of W_K, ascending
};

template <class Scalar>
struct ParabolicData {
  ParabolicInfo info;
  Subspace<Scalar> fixed_space;
};

/// Elements of W_K by closure under right multiplication by s_i, i in K.
std::vector<int> parabolic_elements(const GroupTable& g, DescentSet K);

/// w W_K w^{-1} = W_K, tested on the reflections w s_i w^{-1} (i in K):
/// each lies in W_K exactly when the root w(a_i) lies in the span of K.
bool normalizes(const GroupTable& g, int w, DescentSet K);

/// Some w maps W_K into W_J by conjugation (equality once orders match).
bool parabolics_conjugate(const GroupTable& g, DescentSet K, DescentSet J);

/// ParabolicInfo for every K, indexed by the mask K. Normalizers and
/// conjugacy between standard parabolics are found by brute force over W.
std::vector<ParabolicInfo> all_parabolics(const GroupTable& g);

/// Common fixed space of the reflections s_i, i in K: the intersection of
/// their reflecting hyperplanes.
template <class Scalar>
Subspace<Scalar> fixed_space(const RootSystem<Scalar>& rs, DescentSet K) {
  const int r = rs.rank();
  Mat<Scalar> functionals(popcount(K), r);
  Eigen::Index row = 0;
  for (int i = 0; i < r; ++i) {
    if (K >> i & 1u) functionals.row(row++) = rs.functional(rs.simple_root(i));
  }
  return zero_set(functionals, r);
}

template <class Scalar>
ParabolicData<Scalar> parabolic_data(const CoxeterGroup<Scalar>& g, DescentSet K) {
  return {all_parabolics(g)[K], fixed_space(g.root_system, K)};
}

}  // namespace coxshuffle

#endif  // COXSHUFFLE_PARABOLIC_HPP
