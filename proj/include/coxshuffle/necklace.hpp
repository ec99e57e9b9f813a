#ifndef COXSHUFFLE_NECKLACE_HPP
#define COXSHUFFLE_NECKLACE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coxshuffle/class_label.hpp"
#include "coxshuffle/enumeration.hpp"
#include "coxshuffle/measures.hpp"

namespace coxshuffle {

using ZWord = std::vector<int>;

/// plain: rotations. twisted: the cyclic group of order 2m generated by
/// (a_1..a_m) -> (a_2..a_m, -a_1). blinking: rotations together with
/// negating every entry.
enum class NecklaceKind { Plain, Twisted, Blinking };

NecklaceKind parse_necklace_kind(const std::string& name);

struct CanonicalNecklace {
  ZWord word;       // lexicographic minimum of the orbit
  bool primitive;   // plain, blinking: no rotation fixes it; twisted: free orbit
  int orbit_size;
};

CanonicalNecklace canonicalize_necklace(NecklaceKind kind, const ZWord& word);

int max_abs(const ZWord& w);
std::string word_str(const ZWord& w);

/// A set of primitive twisted necklaces with a multiset of primitive
/// blinking necklaces, each stored by canonical word and kept sorted.
struct SignedOrnament {
  std::vector<ZWord> twisted;
  std::vector<ZWord> blinking;

  [[nodiscard]] int size() const;
  [[nodiscard]] int max_entry() const;
  /// (blinking sizes, twisted sizes): the class label of B_n it is matched with.
  [[nodiscard]] ClassLabel type() const;
  [[nodiscard]] std::string str() const;
  void normalize();

  friend auto operator<=>(const SignedOrnament&, const SignedOrnament&) = default;
  friend bool operator==(const SignedOrnament&, const SignedOrnament&) = default;
};

/// All signed ornaments of size n with entries in [-(q-1)/2, (q-1)/2],
/// in a fixed order. There are q^n of them; throws EnumerationBoundError
/// when q^n exceeds `bound`, std::invalid_argument for even q.
std::vector<SignedOrnament> enumerate_signed_ornaments(int n, int q, std::int64_t bound = 1'000'000);

/// C((q-1)/2 + n - d(w), n) with d the number of descents of w in B_n.
std::int64_t s_vector_count(const GroupData& bn, int w, int q);

/// Direct count of (q-1)/2 >= s_1 >= ... >= s_n >= s_{n+1} = 0 with
/// s_i > s_{i+1} for each descent position i.
std::int64_t s_vector_count_brute_force(const GroupData& bn, int w, int q);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_NECKLACE_HPP
