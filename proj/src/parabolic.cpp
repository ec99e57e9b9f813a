#include "coxshuffle/parabolic.hpp"

#include <algorithm>

namespace coxshuffle {

std::vector<int> parabolic_elements(const GroupTable& g, DescentSet K) {
  std::vector<int> members{0};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int i = 0; i < g.rank; ++i) {
      if (!(K >> i & 1u)) continue;
      const int next = g.times_simple(members[k], i);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

bool maps_into(const GroupTable& g, int w, DescentSet K, DescentSet J) {
  for (int i = 0; i < g.rank; ++i) {
    if ((K >> i & 1u) && (g.root_support(w, i) & ~J) != 0) return false;
  }
  return true;
}

}  // namespace

bool normalizes(const GroupTable& g, int w, DescentSet K) { return maps_into(g, w, K, K); }

bool parabolics_conjugate(const GroupTable& g, DescentSet K, DescentSet J) {
  if (popcount(K) != popcount(J)) return false;
  for (int w = 0; w < g.order(); ++w) {
    if (maps_into(g, w, K, J)) return true;
  }
  return false;
}

std::vector<ParabolicInfo> all_parabolics(const GroupTable& g) {
  const std::size_t count = std::size_t{1} << g.rank;
  std::vector<ParabolicInfo> out(count);
  for (std::size_t K = 0; K < count; ++K) {
    auto& info = out[K];
    info.K = static_cast<DescentSet>(K);
    info.elements = parabolic_elements(g, info.K);
    info.subgroup_order = static_cast<int>(info.elements.size());
    info.normalizer_order = 0;
    for (int w = 0; w < g.order(); ++w) info.normalizer_order += normalizes(g, w, info.K);
  }
  // Conjugacy classes of standard parabolics, each class found once.
  std::vector<int> class_rep(count, -1);
  for (std::size_t K = 0; K < count; ++K) {
    if (class_rep[K] >= 0) continue;
    std::vector<std::size_t> members{K};
    for (std::size_t J = K + 1; J < count; ++J) {
      if (class_rep[J] >= 0 || out[J].subgroup_order != out[K].subgroup_order) continue;
      if (parabolics_conjugate(g, static_cast<DescentSet>(K), static_cast<DescentSet>(J))) members.push_back(J);
    }
    for (std::size_t J : members) {
      class_rep[J] = static_cast<int>(K);
      out[J].conjugacy_rep = static_cast<DescentSet>(K);
      out[J].lambda_count = static_cast<int>(members.size());
    }
  }
  return out;
}

}  // namespace coxshuffle
