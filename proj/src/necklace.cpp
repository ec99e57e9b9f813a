#include "coxshuffle/necklace.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace coxshuffle {

NecklaceKind parse_necklace_kind(const std::string& name) {
  if (name == "plain") return NecklaceKind::Plain;
  if (name == "twisted") return NecklaceKind::Twisted;
  if (name == "blinking") return NecklaceKind::Blinking;
  throw std::invalid_argument("unknown necklace kind: " + name);
}

CanonicalNecklace canonicalize_necklace(NecklaceKind kind, const ZWord& word) {
  if (word.empty()) throw std::invalid_argument("necklace must be nonempty");
  const std::size_t m = word.size();
  std::vector<ZWord> orbit;
  ZWord cur = word;
  bool primitive = true;
  switch (kind) {
    case NecklaceKind::Plain:
    case NecklaceKind::Blinking:
      for (std::size_t k = 0; k < m; ++k) {
        orbit.push_back(cur);
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (k + 1 < m && cur == word) primitive = false;
      }
      if (kind == NecklaceKind::Blinking) {
        const std::size_t half = orbit.size();
        for (std::size_t k = 0; k < half; ++k) {
          ZWord neg = orbit[k];
          for (auto& a : neg) a = -a;
          orbit.push_back(std::move(neg));
        }
      }
      break;
    case NecklaceKind::Twisted:
      for (std::size_t k = 0; k < 2 * m; ++k) {
        orbit.push_back(cur);
        const int first = cur.front();
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        cur.back() = -first;
        if (k + 1 < 2 * m && cur == word) primitive = false;
      }
      break;
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return {orbit.front(), primitive, static_cast<int>(orbit.size())};
}

int max_abs(const ZWord& w) {
  int m = 0;
  for (int a : w) m = std::max(m, std::abs(a));
  return m;
}

std::string word_str(const ZWord& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << ")";
  return os.str();
}

int SignedOrnament::size() const {
  int s = 0;
  for (const auto& w : twisted) s += static_cast<int>(w.size());
  for (const auto& w : blinking) s += static_cast<int>(w.size());
  return s;
}

int SignedOrnament::max_entry() const {
  int m = 0;
  for (const auto& w : twisted) m = std::max(m, max_abs(w));
  for (const auto& w : blinking) m = std::max(m, max_abs(w));
  return m;
}

ClassLabel SignedOrnament::type() const {
  Partition lambda;
  Partition mu;
  for (const auto& w : blinking) lambda.push_back(static_cast<int>(w.size()));
  for (const auto& w : twisted) mu.push_back(static_cast<int>(w.size()));
  return ClassLabel::signed_partition(make_partition(lambda), make_partition(mu));
}

std::string SignedOrnament::str() const {
  std::string out = "twisted{";
  for (const auto& w : twisted) out += word_str(w);
  out += "} blinking{";
  for (const auto& w : blinking) out += word_str(w);
  return out + "}";
}

void SignedOrnament::normalize() {
  std::sort(twisted.begin(), twisted.end());
  std::sort(blinking.begin(), blinking.end());
}

namespace {

// Canonical primitive necklaces of the given kind and size with entries in [-h, h].
std::vector<ZWord> primitive_necklaces(NecklaceKind kind, int m, int h) {
  std::vector<ZWord> out;
  ZWord w(static_cast<std::size_t>(m), -h);
  while (true) {
    const auto c = canonicalize_necklace(kind, w);
    if (c.primitive && c.word == w) out.push_back(w);
    int k = 0;
    while (k < m && w[static_cast<std::size_t>(k)] == h) w[static_cast<std::size_t>(k++)] = -h;
    if (k == m) break;
    ++w[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

std::vector<SignedOrnament> enumerate_signed_ornaments(int n, int q, std::int64_t bound) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("signed ornaments need an odd q");
  if (n < 1) throw std::invalid_argument("signed ornaments need n >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > bound) throw EnumerationBoundError("signed ornaments of size " + std::to_string(n), total, bound);
  }
  const int h = (q - 1) / 2;
  struct Atom {
    bool twisted;
    ZWord word;
  };
  std::vector<Atom> atoms;
  for (int m = 1; m <= n; ++m) {
    for (auto& w : primitive_necklaces(NecklaceKind::Twisted, m, h)) atoms.push_back({true, std::move(w)});
    for (auto& w : primitive_necklaces(NecklaceKind::Blinking, m, h)) atoms.push_back({false, std::move(w)});
  }
  std::vector<SignedOrnament> out;
  SignedOrnament cur;
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      out.back().normalize();
      return;
    }
    if (i == atoms.size()) return;
    const auto& atom = atoms[i];
    const int sz = static_cast<int>(atom.word.size());
    const int max_copies = atom.twisted ? std::min(1, remaining / sz) : remaining / sz;
    auto& bucket = atom.twisted ? cur.twisted : cur.blinking;
    for (int c = 0; c <= max_copies; ++c) {
      place(i + 1, remaining - c * sz);
      bucket.push_back(atom.word);
    }
    bucket.resize(bucket.size() - static_cast<std::size_t>(max_copies) - 1);
  };
  place(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::int64_t binomial(std::int64_t top, int k) {
  if (top < k || k < 0) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

void check_bn(const GroupData& bn, int q) {
  if (bn.type.family != Family::B) throw std::invalid_argument("s-vector counts need a type B group");
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("s-vector counts need an odd q");
}

}  // namespace

std::int64_t s_vector_count(const GroupData& bn, int w, int q) {
  check_bn(bn, q);
  const int n = bn.rank();
  const int d = popcount(bn.table().descents[static_cast<std::size_t>(w)]);
  return binomial((q - 1) / 2 + n - d, n);
}

std::int64_t s_vector_count_brute_force(const GroupData& bn, int w, int q) {
  check_bn(bn, q);
  const int n = bn.rank();
  const auto& form = bn.table().one_line[static_cast<std::size_t>(w)];
  // Lambda order: +1 < ... < +n < (n+1) < -n < ... < -1
  auto rank = [n](int v) { return v > 0 ? v : 2 * n + 2 + v; };
  std::vector<bool> strict(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int next = i + 1 < n ? form[static_cast<std::size_t>(i + 1)] : n + 1;
    strict[static_cast<std::size_t>(i)] = rank(form[static_cast<std::size_t>(i)]) > rank(next);
  }
  const int h = (q - 1) / 2;
  std::int64_t count = 0;
  // s[i] for i = 0..n-1, s[n] = 0
  std::function<void(int, int)> rec = [&](int i, int upper) {
    if (i == n) {
      ++count;
      return;
    }
    for (int v = 0; v <= upper; ++v) {
      if (i == n - 1 && strict[static_cast<std::size_t>(i)] && v == 0) continue;
      const int next_upper = i + 1 < n && strict[static_cast<std::size_t>(i)] ? v - 1 : v;
      if (next_upper < 0 && i + 1 < n) continue;
      rec(i + 1, next_upper);
    }
  };
  rec(0, h);
  return count;
}

}  // namespace coxshuffle
