#include "coxshuffle/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxshuffle {

std::vector<int> gessel_reutenauer(const std::vector<ZWord>& necklaces) {
  struct Entry {
    std::size_t necklace;
    std::size_t pos;
  };
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < necklaces.size(); ++j) {
    if (necklaces[j].empty()) throw std::invalid_argument("gessel_reutenauer: empty necklace");
    for (std::size_t i = 0; i < necklaces[j].size(); ++i) entries.push_back({j, i});
  }
  if (entries.empty()) throw std::invalid_argument("gessel_reutenauer: no entries");
  // two periodic words agreeing on their first (period sum) letters are equal
  auto less = [&](const Entry& a, const Entry& b) {
    const auto& wa = necklaces[a.necklace];
    const auto& wb = necklaces[b.necklace];
    const std::size_t len = wa.size() + wb.size();
    for (std::size_t k = 0; k < len; ++k) {
      const int x = wa[(a.pos + k) % wa.size()];
      const int y = wb[(b.pos + k) % wb.size()];
      if (x != y) return x < y;
    }
    if (a.necklace != b.necklace) return a.necklace < b.necklace;
    return a.pos < b.pos;
  };
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return less(entries[x], entries[y]); });
  std::vector<int> rank(entries.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;

  std::vector<int> one_line(entries.size());
  std::size_t base = 0;
  for (const auto& w : necklaces) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int from = rank[base + i];
      const int to = rank[base + (i + 1) % w.size()];
      one_line[static_cast<std::size_t>(from - 1)] = to;
    }
    base += w.size();
  }
  return one_line;
}

std::string cycle_string(const std::vector<int>& one_line) {
  std::vector<bool> seen(one_line.size(), false);
  std::ostringstream os;
  for (std::size_t start = 0; start < one_line.size(); ++start) {
    if (seen[start]) continue;
    os << "(";
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      os << (first ? "" : " ") << cur + 1;
      first = false;
      cur = static_cast<std::size_t>(one_line[cur] - 1);
    }
    os << ")";
  }
  return os.str();
}

std::vector<ZWord> parse_necklace_list(const std::string& text) {
  std::vector<ZWord> out;
  std::stringstream all(text);
  std::string chunk;
  while (std::getline(all, chunk, ',')) {
    chunk.erase(std::remove_if(chunk.begin(), chunk.end(), [](char c) { return c == '(' || c == ')'; }), chunk.end());
    const auto b = chunk.find_first_not_of(' ');
    if (b == std::string::npos) throw std::invalid_argument("empty necklace in list");
    chunk = chunk.substr(b, chunk.find_last_not_of(' ') - b + 1);
    ZWord w;
    if (chunk.find(' ') != std::string::npos) {
      std::stringstream ss(chunk);
      int v;
      while (ss >> v) w.push_back(v);
      if (!ss.eof()) throw std::invalid_argument("bad necklace entry in '" + chunk + "'");
    } else {
      for (char c : chunk) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad necklace entry in '" + chunk + "'");
        w.push_back(c - '0');
      }
    }
    out.push_back(std::move(w));
  }
  if (out.empty()) throw std::invalid_argument("no necklaces given");
  return out;
}

// ---------------------------------------------------------------- field helpers

namespace {

void require_prime_field(const FqPoly& f, const char* what) {
  if (f.F().e() != 1) throw std::invalid_argument(std::string(what) + " needs a polynomial over a prime field");
}

bool is_z(const FqPoly& f) { return f.degree() == 1 && f.coeff(0) == 0 && f.coeff(1) == 1; }

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = a % m;
  while (a1 != 0) {
    const std::int64_t t = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - t * a1);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1) throw std::invalid_argument("element not invertible");
  return ((x % m) + m) % m;
}

// Rank over F_p of the given vectors.
int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const int inv = static_cast<int>(mod_inverse(pr[c], p));
    for (auto& v : pr) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> conjugate_digits(const FiniteField& F, int alpha) {
  std::vector<std::vector<int>> out;
  int a = alpha;
  for (int j = 0; j < F.e(); ++j) {
    out.push_back(F.digits(a));
    a = F.frobenius(a);
  }
  return out;
}

int symmetric(int c, int q) { return c > q / 2 ? c - q : c; }

}  // namespace

int root_in_extension(const FqPoly& phi, const FiniteField& ext) {
  require_prime_field(phi, "root_in_extension");
  if (phi.F().p() != ext.p()) throw std::invalid_argument("root_in_extension: characteristic mismatch");
  for (int x = 0; x < ext.q(); ++x) {
    int acc = 0;
    for (int i = phi.degree(); i >= 0; --i) acc = ext.add(ext.mul(acc, x), phi.coeff(i));
    if (acc == 0) return x;
  }
  throw std::invalid_argument("root_in_extension: " + phi.str() + " has no root in F_" + std::to_string(ext.q()));
}

ZWord golomb_encode(const FqPoly& phi, int beta) {
  require_prime_field(phi, "golomb_encode");
  if (is_z(phi.monic())) throw std::invalid_argument("golomb_encode: z has no discrete logarithm");
  if (!is_irreducible(phi)) throw std::invalid_argument("golomb_encode: " + phi.str() + " is reducible");
  const int p = phi.F().p();
  const int i = phi.degree();
  const auto ext = make_field(p, i);
  if (!ext->is_generator(beta)) throw std::invalid_argument("golomb_encode: beta does not generate the unit group");
  const int root = root_in_extension(phi, *ext);
  const std::int64_t order = ext->q() - 1;
  std::int64_t x = ext->log(root) * mod_inverse(ext->log(beta), order) % order;
  ZWord digits(static_cast<std::size_t>(i));
  for (auto& d : digits) {
    d = static_cast<int>(x % p);
    x /= p;
  }
  return canonicalize_necklace(NecklaceKind::Plain, digits).word;
}

ZWord golomb_encode(const FqPoly& phi) {
  require_prime_field(phi, "golomb_encode");
  return golomb_encode(phi, make_field(phi.F().p(), std::max(1, phi.degree()))->generator());
}

int normal_basis(int q, int m) {
  if (!is_prime(q)) throw std::invalid_argument("normal_basis: only prime q is supported");
  if (m < 1) throw std::invalid_argument("normal_basis: m must be >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < m; ++i) {
    size *= q;
    if (size > 100'000) throw std::invalid_argument("normal_basis: q^m exceeds 10^5");
  }
  const auto F = make_field(q, m);
  for (int alpha = 1; alpha < F->q(); ++alpha) {
    if (rank_mod_p(conjugate_digits(*F, alpha), q) == m) return alpha;
  }
  throw std::logic_error("normal_basis: no normal element found");
}

std::vector<int> normal_coordinates(const FiniteField& field, int alpha, int x) {
  const int p = field.p();
  const int m = field.e();
  const auto conj = conjugate_digits(field, alpha);
  // augmented system: column j = digits of alpha^{p^j}
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m) + 1));
  const auto rhs = field.digits(x);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = conj[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = rhs[static_cast<std::size_t>(r)];
  }
  for (int c = 0; c < m; ++c) {
    int pivot = c;
    while (pivot < m && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == m) throw std::invalid_argument("normal_coordinates: alpha is not a normal element");
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(c)]);
    auto& pr = a[static_cast<std::size_t>(c)];
    const int inv = static_cast<int>(mod_inverse(pr[static_cast<std::size_t>(c)], p));
    for (auto& v : pr) v = v * inv % p;
    for (int r = 0; r < m; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const int f = row[static_cast<std::size_t>(c)];
      if (r == c || f == 0) continue;
      for (int k = 0; k <= m; ++k) row[static_cast<std::size_t>(k)] = ((row[static_cast<std::size_t>(k)] - f * pr[static_cast<std::size_t>(k)]) % p + p) % p;
    }
  }
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) c[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)];
  return c;
}

namespace {

// Normal-basis coordinates of a root of phi in F_{q^deg phi}.
std::vector<int> root_coordinates(const FqPoly& phi) {
  const int q = phi.F().p();
  const int d = phi.degree();
  const int alpha = normal_basis(q, d);
  const auto ext = make_field(q, d);
  return normal_coordinates(*ext, alpha, root_in_extension(phi, *ext));
}

}  // namespace

SignedOrnament ornament_from_polynomial(const FqPoly& f) {
  require_prime_field(f, "ornament_from_polynomial");
  const int q = f.F().p();
  if (q == 2) throw std::invalid_argument("ornament_from_polynomial: q must be odd");
  if (!f.is_monic() || f.degree() < 2 || f.degree() % 2 != 0 || !(f.negate_variable() == f)) {
    throw std::invalid_argument("ornament_from_polynomial: " + f.str() + " is not a monic even polynomial");
  }
  SignedOrnament o;
  for (const auto& [g, k] : factor(f).factors) {
    if (is_z(g)) {
      for (int i = 0; i < k / 2; ++i) o.blinking.push_back({0});
      continue;
    }
    const FqPoly star = g.conjugate();
    if (!(star == g) && star < g) continue;  // handled with its partner
    auto c = root_coordinates(g);
    for (auto& v : c) v = symmetric(v, q);
    if (star == g) {
      const std::size_t m = c.size() / 2;
      for (std::size_t j = 0; j < m; ++j) {
        if (c[j + m] != -c[j]) throw std::logic_error("ornament_from_polynomial: coordinates are not twisted");
      }
      if (k % 2 == 1) {
        o.twisted.push_back(canonicalize_necklace(NecklaceKind::Twisted, ZWord(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m))).word);
      }
      for (int i = 0; i < k / 2; ++i) o.blinking.push_back(canonicalize_necklace(NecklaceKind::Blinking, c).word);
    } else {
      for (int i = 0; i < k; ++i) o.blinking.push_back(canonicalize_necklace(NecklaceKind::Blinking, c).word);
    }
  }
  o.normalize();
  return o;
}

RefineMode parse_refine_mode(const std::string& name) {
  if (name == "golomb") return RefineMode::Golomb;
  if (name == "normal_basis") return RefineMode::NormalBasis;
  throw std::invalid_argument("unknown refinement mode: " + name);
}

ZWord encode_irreducible(const FqPoly& phi, RefineMode mode, bool extend_z) {
  require_prime_field(phi, "encode_irreducible");
  if (mode == RefineMode::Golomb) {
    if (is_z(phi)) {
      if (!extend_z) throw std::invalid_argument("golomb mode needs a nonzero constant term");
      return {phi.F().p() - 1};
    }
    return golomb_encode(phi);
  }
  return canonicalize_necklace(NecklaceKind::Plain, root_coordinates(phi)).word;
}

std::vector<int> refine_phi_A(const FqPoly& f, RefineMode mode, bool extend_z) {
  require_prime_field(f, "refine_phi_A");
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("refine_phi_A needs a monic polynomial");
  std::vector<ZWord> necklaces;
  for (const auto& [g, k] : factor(f).factors) {
    const auto w = encode_irreducible(g, mode, extend_z);
    for (int i = 0; i < k; ++i) necklaces.push_back(w);
  }
  return gessel_reutenauer(necklaces);
}

std::map<std::vector<int>, std::int64_t> refine_census(int n, int p, RefineMode mode) {
  if (!is_prime(p)) throw std::invalid_argument("refine_census needs a prime p");
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& f : monic_polynomials(make_field(p), n)) ++out[refine_phi_A(f, mode, true)];
  return out;
}

int permutation_descents(const std::vector<int>& one_line) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < one_line.size(); ++i) d += one_line[i] > one_line[i + 1] ? 1 : 0;
  return d;
}

std::vector<int> inverse_permutation(const std::vector<int>& one_line) {
  std::vector<int> inv(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i) inv[static_cast<std::size_t>(one_line[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

}  // namespace coxshuffle
