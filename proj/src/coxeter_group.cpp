#include "coxshuffle/coxeter_group.hpp"

#include <algorithm>
#include <numeric>

namespace coxshuffle {

std::string descent_str(DescentSet d, int rank) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    if (!(d >> i & 1u)) continue;
    if (!first) s += ',';
    s += "a" + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::vector<int> GroupTable::word(int w) const {
  std::vector<int> letters;
  for (int cur = w; cur != 0; cur = parent[static_cast<std::size_t>(cur)]) {
    letters.push_back(parent_gen[static_cast<std::size_t>(cur)]);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

int GroupTable::multiply(int u, int v) const {
  int result = u;
  for (int i : word(v)) result = times_simple(result, i);
  return result;
}

int GroupTable::find_one_line(const std::vector<int>& form) const {
  auto it = one_line_index_.find(form);
  return it == one_line_index_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> GroupTable::descent_classes() const {
  std::vector<std::vector<int>> out(std::size_t{1} << rank);
  for (int w = 0; w < order(); ++w) out[descents[static_cast<std::size_t>(w)]].push_back(w);
  return out;
}

void GroupTable::index_one_line() {
  one_line_index_.clear();
  for (std::size_t w = 0; w < one_line.size(); ++w) one_line_index_.emplace(one_line[w], static_cast<int>(w));
}

std::vector<std::vector<int>> brute_force_classes(const GroupTable& g) {
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int start = 0; start < n; ++start) {
    if (owner[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> members{start};
    owner[static_cast<std::size_t>(start)] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int i = 0; i < g.rank; ++i) {
        const int conj = g.simple_times(i, g.times_simple(members[k], i));
        if (owner[static_cast<std::size_t>(conj)] < 0) {
          owner[static_cast<std::size_t>(conj)] = id;
          members.push_back(conj);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

void conjugacy_classes(GroupTable& g) {
  std::vector<std::vector<int>> orbits = brute_force_classes(g);
  g.classes.clear();
  g.class_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ConjugacyClass cls;
    const int rep = orbits[c].front();
    switch (g.type.family) {
      case Family::A:
        cls.label = ClassLabel::partition(cycle_type(g.one_line[static_cast<std::size_t>(rep)]));
        break;
      case Family::B: {
        auto [lambda, mu] = signed_cycle_type(g.one_line[static_cast<std::size_t>(rep)]);
        cls.label = ClassLabel::signed_partition(std::move(lambda), std::move(mu));
        break;
      }
      default:
        cls.label.kind = ClassLabel::Kind::Opaque;
        cls.label.index = static_cast<int>(c);
        break;
    }
    cls.label.representative = rep;
    for (int w : orbits[c]) g.class_of[static_cast<std::size_t>(w)] = static_cast<int>(c);
    cls.members = std::move(orbits[c]);
    g.classes.push_back(std::move(cls));
  }
}

IntPoly poincare_polynomial(const GroupTable& g) {
  const int top = *std::max_element(g.length.begin(), g.length.end());
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(top + 1), 0);
  for (int l : g.length) ++coeffs[static_cast<std::size_t>(l)];
  return IntPoly(std::move(coeffs));
}

std::vector<int> exponents(const GroupTable& g) {
  auto found = factor_q_integers(poincare_polynomial(g), g.rank);
  if (!found) throw std::logic_error("exponents: Poincare polynomial of " + g.type.name() + " does not factor");
  std::sort(found->begin(), found->end());
  return *found;
}

namespace detail {

void finish_table(GroupTable& g) {
  const std::size_t n = g.length.size();
  g.inverse.assign(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    const int p = g.parent[w];
    g.inverse[w] = g.simple_times(g.parent_gen[w], g.inverse[static_cast<std::size_t>(p)]);
  }
  g.longest = static_cast<int>(std::max_element(g.length.begin(), g.length.end()) - g.length.begin());
  g.index_one_line();
  conjugacy_classes(g);
}

}  // namespace detail

AnyCoxeterGroup build_group(const CoxeterType& type) {
  return std::visit(
      [&](const auto& rs) -> AnyCoxeterGroup {
        auto g = enumerate_group(rs);
        if (static_cast<std::uint64_t>(g.order()) != expected_order(type)) {
          throw std::logic_error("enumerate_group: wrong order for " + type.name());
        }
        return g;
      },
      build_root_system(type));
}

}  // namespace coxshuffle
