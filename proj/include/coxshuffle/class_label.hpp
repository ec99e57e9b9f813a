#ifndef COXSHUFFLE_CLASS_LABEL_HPP
#define COXSHUFFLE_CLASS_LABEL_HPP

#include <compare>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace coxshuffle {

/// Integer partition, parts in non-increasing order.
using Partition = std::vector<int>;

Partition make_partition(std::vector<int> parts);
std::string partition_str(const Partition& p);

/// Cycle type of a permutation given in one-line form on {1..n}.
Partition cycle_type(const std::vector<int>& one_line);

/// (positive-cycle lengths, negative-cycle lengths) of a signed permutation
/// in one-line form: entry k is +-w(k). A cycle is negative when it carries
/// an odd number of sign changes.
std::pair<Partition, Partition> signed_cycle_type(const std::vector<int>& one_line);

/// Conjugacy class label. Family A uses a partition (cycle type), family B
/// a pair of partitions, every other family an opaque index with a
/// representative element.
struct ClassLabel {
  enum class Kind { Partition, SignedPartition, Opaque };

  Kind kind = Kind::Opaque;
  Partition lambda;
  Partition mu;
  int index = -1;
  int representative = -1;

  static ClassLabel partition(Partition p) { return {Kind::Partition, std::move(p), {}, -1, -1}; }
  static ClassLabel signed_partition(Partition lambda, Partition mu) {
    return {Kind::SignedPartition, std::move(lambda), std::move(mu), -1, -1};
  }

  /// "(2 1)" for A, "(1)|(1)" for B, "C3" for opaque classes.
  [[nodiscard]] std::string str() const;

  /// Partition labels compare by shape only; opaque labels by index.
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) { return a.order_key() == b.order_key(); }
  friend auto operator<=>(const ClassLabel& a, const ClassLabel& b) { return a.order_key() <=> b.order_key(); }

 private:
  [[nodiscard]] std::tuple<int, Partition, Partition, int> order_key() const {
    return {static_cast<int>(kind), lambda, mu, kind == Kind::Opaque ? index : -1};
  }
};

}  // namespace coxshuffle

#endif  // COXSHUFFLE_CLASS_LABEL_HPP
