#include "coxshuffle/class_label.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace coxshuffle {

Partition make_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition cycle_type(const std::vector<int>& one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> seen(n, false);
  std::vector<int> parts;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(one_line[k] - 1)) {
      seen[k] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return make_partition(std::move(parts));
}

std::pair<Partition, Partition> signed_cycle_type(const std::vector<int>& one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> seen(n, false);
  std::vector<int> positive;
  std::vector<int> negative;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    int negatives = 0;
    for (std::size_t k = start; !seen[k];) {
      seen[k] = true;
      ++len;
      if (one_line[k] < 0) ++negatives;
      k = static_cast<std::size_t>(std::abs(one_line[k]) - 1);
    }
    (negatives % 2 == 0 ? positive : negative).push_back(len);
  }
  return {make_partition(std::move(positive)), make_partition(std::move(negative))};
}

std::string ClassLabel::str() const {
  switch (kind) {
    case Kind::Partition: return partition_str(lambda);
    case Kind::SignedPartition: return partition_str(lambda) + "|" + partition_str(mu);
    case Kind::Opaque: return "C" + std::to_string(index);
  }
  return "?";
}

}  // namespace coxshuffle
