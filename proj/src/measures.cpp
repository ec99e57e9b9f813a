#include "coxshuffle/measures.hpp"

#include <numeric>

#include "coxshuffle/affine.hpp"

namespace coxshuffle {

Method parse_method(const std::string& name) {
  if (name == "definition") return Method::Definition;
  if (name == "os_sign") return Method::OsSign;
  if (name == "closed_form") return Method::ClosedForm;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Definition: return "definition";
    case Method::OsSign: return "os_sign";
    case Method::ClosedForm: return "closed_form";
  }
  return "?";
}

Rational WMeasure::total() const {
  Rational s;
  for (const auto& v : values) s += v;
  return s;
}

std::optional<std::vector<Rational>> WMeasure::by_descent() const {
  const GroupTable& t = group->table();
  std::vector<Rational> out(std::size_t{1} << t.rank);
  std::vector<char> seen(out.size(), 0);
  for (int w = 0; w < t.order(); ++w) {
    const auto d = t.descents[static_cast<std::size_t>(w)];
    if (!seen[d]) {
      out[d] = values[static_cast<std::size_t>(w)];
      seen[d] = 1;
    } else if (out[d] != values[static_cast<std::size_t>(w)]) {
      return std::nullopt;
    }
  }
  return out;
}

WMeasure WMeasure::from_descent_values(std::shared_ptr<const GroupData> g, const std::vector<Rational>& by_descent) {
  WMeasure m;
  const GroupTable& t = g->table();
  m.values.reserve(static_cast<std::size_t>(t.order()));
  for (auto d : t.descents) m.values.push_back(by_descent[d]);
  m.group = std::move(g);
  return m;
}

WMeasure WMeasure::point_mass(std::shared_ptr<const GroupData> g, int w) {
  WMeasure m;
  m.values.assign(static_cast<std::size_t>(g->order()), Rational(0));
  m.values[static_cast<std::size_t>(w)] = Rational(1);
  m.group = std::move(g);
  return m;
}

Rational FaceWeights::total(const GroupData& g) const {
  Rational s;
  for (std::size_t K = 0; K < v.size(); ++K) s += Rational(g.order() / g.parabolics[K].info.subgroup_order) * v[K];
  return s;
}

namespace {

void require_nonzero(const Rational& x) {
  if (x.is_zero()) throw std::invalid_argument("H_{W,x} needs x != 0");
}

Rational product_shifted(const std::vector<int>& ms, const Rational& x, int sign) {
  Rational p(1);
  for (int m : ms) p *= x + Rational(sign * m);
  return p;
}

Rational poly_value(std::initializer_list<int> shifts, const Rational& x) {
  Rational p(1);
  for (int s : shifts) p *= x + Rational(s);
  return p;
}

}  // namespace

FaceWeights face_weights_definition(const GroupData& g, const Rational& x) {
  require_nonzero(x);
  FaceWeights fw;
  const Rational xr = pow(x, g.rank());
  for (const auto& p : g.parabolics) {
    const Rational num = Rational(p.info.subgroup_order) * p.chi.evaluate(x);
    fw.v.push_back(num / (xr * Rational(p.info.normalizer_order) * Rational(p.info.lambda_count)));
  }
  return fw;
}

FaceWeights face_weights_os_sign(const GroupData& g, const Rational& x) {
  require_nonzero(x);
  FaceWeights fw;
  const Rational xr = pow(x, g.rank());
  for (const auto& p : g.parabolics) {
    const int sign = (g.rank() - popcount(p.info.K)) % 2 == 0 ? 1 : -1;
    const Rational at_minus_one = p.chi.evaluate(Rational(-1));
    fw.v.push_back(Rational(sign) * p.chi.evaluate(x) / (xr * at_minus_one));
  }
  return fw;
}

WMeasure measure_from_face_weights(std::shared_ptr<const GroupData> g, const FaceWeights& fw) {
  const DescentSet full = g->table().full_set();
  std::vector<Rational> by_descent(std::size_t{full} + 1);
  for (DescentSet D = 0; D <= full; ++D) {
    const DescentSet allowed = full & ~D;
    // all subsets K of `allowed`
    for (DescentSet K = allowed;; K = (K - 1) & allowed) {
      by_descent[D] += fw.v[K];
      if (K == 0) break;
    }
  }
  return WMeasure::from_descent_values(std::move(g), by_descent);
}

Rational closed_form_value(const GroupData& g, DescentSet des, const Rational& x) {
  require_nonzero(x);
  const int r = g.rank();
  const int d = popcount(des);
  switch (g.type.family) {
    case Family::A: {
      const int n = r + 1;
      return binomial(x + Rational(n - 1 - d), n) / pow(x, n);
    }
    case Family::B: {
      const int n = r;
      Rational num(1);
      for (int j = 1; j <= n; ++j) num *= x + Rational(2 * j - 1 - 2 * d);
      mpz_class fact = 1;
      for (int j = 2; j <= n; ++j) fact *= j;
      const Rational den = pow(x, n) * Rational(mpz_class(mpz_class(1) << n) * fact, mpz_class(1));
      return num / den;
    }
    case Family::H3: {
      const Rational den = Rational(120) * pow(x, 3);
      switch (d) {
        case 0: return poly_value({9, 5, 1}, x) / den;
        case 1: return poly_value({5, 1, -1}, x) / den;
        case 2: return poly_value({1, -1, -5}, x) / den;
        default: return poly_value({-1, -5, -9}, x) / den;
      }
    }
    case Family::H4: {
      const Rational den = Rational(14400) * pow(x, 4);
      const Rational pm = poly_value({1, -1}, x);
      const DescentSet a34 = 0b1100;
      switch (d) {
        case 0: return poly_value({29, 19, 11, 1}, x) / den;
        case 1:
          if (des == 0b0001 || des == 0b0010) return pm * (x * x + Rational(30) * x + Rational(149)) / den;
          return pm * (x * x + Rational(30) * x + Rational(269)) / den;
        case 2:
          if (des == a34) return pm * pm / den;
          return poly_value({11, 1, -1, -11}, x) / den;
        case 3: return poly_value({1, -1, -11, -19}, x) / den;
        default: return poly_value({-1, -11, -19, -29}, x) / den;
      }
    }
    default:
      throw std::invalid_argument("no closed form for " + g.type.name());
  }
}

WMeasure h_measure(std::shared_ptr<const GroupData> g, const Rational& x, Method method) {
  require_nonzero(x);
  WMeasure m;
  switch (method) {
    case Method::Definition: m = measure_from_face_weights(g, face_weights_definition(*g, x)); break;
    case Method::OsSign: m = measure_from_face_weights(g, face_weights_os_sign(*g, x)); break;
    case Method::ClosedForm: {
      std::vector<Rational> by_descent(std::size_t{1} << g->rank());
      for (DescentSet D = 0; D < by_descent.size(); ++D) by_descent[D] = closed_form_value(*g, D, x);
      m = WMeasure::from_descent_values(g, by_descent);
      break;
    }
  }
  m.x = x;
  return m;
}

std::pair<Rational, Rational> longshort_values(const GroupData& g, const Rational& x) {
  require_nonzero(x);
  const Rational den = pow(x, g.rank()) * Rational(g.order());
  return {product_shifted(g.exponents, x, -1) / den, product_shifted(g.exponents, x, 1) / den};
}

SommersCheck sommers_identity_check(std::shared_ptr<const GroupData> g, int x) {
  const auto ad = affine_data(std::visit([](const auto& grp) { return AnyRootSystem(grp.root_system); }, g->group));
  SommersCheck c;
  c.hypothesis_holds = x >= 1;
  for (int mark : ad.marks) c.hypothesis_holds = c.hypothesis_holds && std::gcd(mark, x) == 1;
  std::uint64_t sum = 0;
  const std::uint32_t full = (1u << ad.extended_size()) - 1;
  for (std::uint32_t S = 0; S < full; ++S) sum += p_count(ad, S, x);
  c.lhs = Rational(mpz_class(std::to_string(sum)), mpz_class(1));
  c.rhs = Rational(ad.index_of_connection) * product_shifted(g->exponents, Rational(x), 1) / Rational(g->order());
  c.identity_holds = c.lhs == c.rhs;
  c.identity_value = h_measure(g, Rational(x), Method::Definition)(0);
  c.chain_holds = c.lhs / (Rational(ad.index_of_connection) * pow(Rational(x), g->rank())) == c.identity_value;
  return c;
}

namespace {

void require_total_one(const GroupData& g, const FaceWeights& fw) {
  if (fw.v.size() != std::size_t{1} << g.rank()) throw std::invalid_argument("face weights: wrong number of types");
  if (fw.total(g) != Rational(1)) throw std::invalid_argument("face weights do not sum to 1 over all faces");
}

// Cosets uW_K as lists of element indices, each coset listed once.
std::vector<std::vector<int>> cosets(const GroupData& g, DescentSet K) {
  const GroupTable& t = g.table();
  std::vector<int> owner(static_cast<std::size_t>(t.order()), -1);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < t.order(); ++u) {
    if (owner[static_cast<std::size_t>(u)] >= 0) continue;
    std::vector<int> coset{u};
    owner[static_cast<std::size_t>(u)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < coset.size(); ++k) {
      for (int i = 0; i < t.rank; ++i) {
        if (!(K >> i & 1u)) continue;
        const int next = t.times_simple(coset[k], i);
        if (owner[static_cast<std::size_t>(next)] < 0) {
          owner[static_cast<std::size_t>(next)] = static_cast<int>(out.size());
          coset.push_back(next);
        }
      }
    }
    out.push_back(std::move(coset));
  }
  return out;
}

// Element v of the coset nearest to the start chamber, i.e. minimising l(start^{-1} v).
int project(const GroupTable& t, int start_inverse, const std::vector<int>& coset) {
  int best = -1;
  int best_distance = 0;
  bool tie = false;
  for (int v : coset) {
    const int distance = t.length[static_cast<std::size_t>(t.multiply(start_inverse, v))];
    if (best < 0 || distance < best_distance) {
      best = v;
      best_distance = distance;
      tie = false;
    } else if (distance == best_distance) {
      tie = true;
    }
  }
  if (tie) throw std::logic_error("bhr: nearest chamber of a face is not unique");
  return best;
}

}  // namespace

WMeasure bhr_step(std::shared_ptr<const GroupData> g, const FaceWeights& fw) {
  require_total_one(*g, fw);
  const GroupTable& t = g->table();
  WMeasure m;
  m.values.assign(static_cast<std::size_t>(t.order()), Rational(0));
  for (DescentSet K = 0; K < fw.v.size(); ++K) {
    if (fw.v[K].is_zero()) continue;
    for (const auto& coset : cosets(*g, K)) {
      int best = coset.front();
      for (int v : coset) {
        if (t.length[static_cast<std::size_t>(v)] < t.length[static_cast<std::size_t>(best)]) best = v;
      }
      for (int v : coset) {
        if (v != best && t.length[static_cast<std::size_t>(v)] == t.length[static_cast<std::size_t>(best)]) {
          throw std::logic_error("bhr_step: coset without a unique shortest element");
        }
      }
      m.values[static_cast<std::size_t>(best)] += fw.v[K];
    }
  }
  m.group = std::move(g);
  return m;
}

Mat<Rational> transition_matrix(const GroupData& g, const FaceWeights& fw, int max_order) {
  const GroupTable& t = g.table();
  if (t.order() > max_order) {
    throw std::invalid_argument("transition_matrix: group of order " + std::to_string(t.order()) + " exceeds " +
                                std::to_string(max_order));
  }
  if (fw.v.size() != std::size_t{1} << t.rank) throw std::invalid_argument("face weights: wrong number of types");
  const Eigen::Index n = t.order();
  Mat<Rational> M = Mat<Rational>::Zero(n, n);
  for (DescentSet K = 0; K < fw.v.size(); ++K) {
    if (fw.v[K].is_zero()) continue;
    const auto all = cosets(g, K);
    for (int u = 0; u < t.order(); ++u) {
      const int u_inv = t.inverse[static_cast<std::size_t>(u)];
      for (const auto& coset : all) M(u, project(t, u_inv, coset)) += fw.v[K];
    }
  }
  return M;
}

bool spectrum_identity_holds(const Mat<Rational>& M, const Rational& x, int rank) {
  const Eigen::Index n = M.rows();
  Mat<Rational> P = Mat<Rational>::Identity(n, n);
  Rational eigen(1);
  for (int i = 0; i <= rank; ++i) {
    Mat<Rational> factor = M;
    for (Eigen::Index k = 0; k < n; ++k) factor(k, k) -= eigen;
    P = (P * factor).eval();
    eigen /= x;
  }
  return all_zero(P);
}

bool rows_sum_to_one(const Mat<Rational>& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Rational s;
    for (Eigen::Index j = 0; j < M.cols(); ++j) s += M(i, j);
    if (s != Rational(1)) return false;
  }
  return true;
}

WMeasure convolve(const WMeasure& m1, const WMeasure& m2) {
  if (m1.group.get() != m2.group.get() && m1.group->type != m2.group->type) {
    throw std::invalid_argument("convolve: measures live on different groups");
  }
  const GroupTable& t = m1.group->table();
  std::vector<std::pair<int, Rational>> left;
  std::vector<std::pair<int, std::vector<int>>> right;  // element with its word
  for (int u = 0; u < t.order(); ++u) {
    if (!m1(u).is_zero()) left.emplace_back(u, m1(u));
  }
  WMeasure out;
  out.group = m1.group;
  out.values.assign(static_cast<std::size_t>(t.order()), Rational(0));
  for (int v = 0; v < t.order(); ++v) {
    if (m2(v).is_zero()) continue;
    const auto word = t.word(v);
    for (const auto& [u, value] : left) {
      int uv = u;
      for (int i : word) uv = t.times_simple(uv, i);
      out.values[static_cast<std::size_t>(uv)] += value * m2(v);
    }
  }
  if (m1.x && m2.x) out.x = *m1.x * *m2.x;
  return out;
}

ClassMeasure pushforward_classes(const WMeasure& m) {
  const GroupTable& t = m.group->table();
  ClassMeasure out;
  for (const auto& c : t.classes) {
    Rational s;
    for (int w : c.members) s += m(w);
    out[c.label] = s;
  }
  return out;
}

}  // namespace coxshuffle
