#include "coxshuffle/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxshuffle {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<int, int> prime_power(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<int>(p), e};
}

namespace {

// Raw arithmetic on coefficient vectors over the prime field F_p.
std::vector<int> prime_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;  // m monic
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = a[static_cast<std::size_t>(i)] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      auto& t = a[static_cast<std::size_t>(i - dm + j)];
      t = ((t - c * m[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(std::min<int>(dm, static_cast<int>(a.size()))));
  return a;
}

bool prime_field_irreducible(const std::vector<int>& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<int> g(static_cast<std::size_t>(k + 1), 0);
      std::int64_t c = code;
      for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      g[static_cast<std::size_t>(k)] = 1;
      const auto r = prime_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> first_irreducible(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("field degree must be >= 1");
  std::int64_t count = 1;
  for (int i = 0; i < e; ++i) {
    count *= p;
    if (count > FiniteField::kMaxOrder) throw std::invalid_argument("field too large");
  }
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<int> f(static_cast<std::size_t>(e + 1), 0);
    std::int64_t c = code;
    for (int i = 0; i < e; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    f[static_cast<std::size_t>(e)] = 1;
    if (prime_field_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FiniteField::FiniteField(int p, int e) : FiniteField(p, e == 1 ? std::vector<int>{0, 1} : first_irreducible(p, e)) {}

FiniteField::FiniteField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  for (auto& c : modulus_) {
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  e_ = static_cast<int>(modulus_.size()) - 1;
  std::int64_t q = 1;
  for (int i = 0; i < e_; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field too large");
  }
  q_ = static_cast<int>(q);
  if (e_ > 1 && !prime_field_irreducible(modulus_, p)) throw std::invalid_argument("modulus is reducible");
  pow_p_.resize(static_cast<std::size_t>(e_) + 1);
  pow_p_[0] = 1;
  for (int i = 1; i <= e_; ++i) pow_p_[static_cast<std::size_t>(i)] = pow_p_[static_cast<std::size_t>(i - 1)] * p;
  build_tables();
}

std::vector<int> FiniteField::digits(int a) const {
  std::vector<int> d(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    d[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return d;
}

int FiniteField::from_digits(const std::vector<int>& d) const {
  int a = 0;
  for (int i = std::min<int>(e_, static_cast<int>(d.size())) - 1; i >= 0; --i) {
    a = a * p_ + ((d[static_cast<std::size_t>(i)] % p_) + p_) % p_;
  }
  return a;
}

int FiniteField::slow_mul(int a, int b) const {
  if (e_ == 1) return static_cast<int>(static_cast<std::int64_t>(a) * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) {
      auto& t = prod[static_cast<std::size_t>(i + j)];
      t = (t + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
    }
  }
  return from_digits(prime_mod(prod, modulus_, p_));
}

void FiniteField::build_tables() {
  const int n = q_ - 1;
  exp_.assign(static_cast<std::size_t>(n), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);
  for (int g = 1; g < q_; ++g) {
    int x = 1;
    int order = 0;
    do {
      exp_[static_cast<std::size_t>(order++)] = x;
      x = slow_mul(x, g);
    } while (x != 1 && order < n);
    if (x == 1 && order == n) {
      generator_ = g;
      for (int k = 0; k < n; ++k) log_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(k)])] = k;
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

int FiniteField::add(int a, int b) const {
  if (e_ == 1) return (a + b) % p_;
  int out = 0;
  for (int i = 0; i < e_; ++i) {
    const int s = (a % p_ + b % p_) % p_;
    out += s * pow_p_[static_cast<std::size_t>(i)];
    a /= p_;
    b /= p_;
  }
  return out;
}

int FiniteField::neg(int a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  int out = 0;
  for (int i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[static_cast<std::size_t>(i)];
    a /= p_;
  }
  return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<int>(static_cast<std::int64_t>(a) * b % p_);
  const int k = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
  return exp_[static_cast<std::size_t>(k % (q_ - 1))];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  const int k = log_[static_cast<std::size_t>(a)];
  return exp_[static_cast<std::size_t>((q_ - 1 - k) % (q_ - 1))];
}

int FiniteField::pow(int a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t t = ((log_[static_cast<std::size_t>(a)] * (k % n)) % n + n) % n;
  return exp_[static_cast<std::size_t>(t)];
}

int FiniteField::from_int(std::int64_t v) const { return static_cast<int>(((v % p_) + p_) % p_); }

bool FiniteField::is_generator(int a) const {
  if (a <= 0 || a >= q_) return false;
  if (q_ == 2) return true;
  const int k = log_[static_cast<std::size_t>(a)];
  int x = k;
  int y = q_ - 1;
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  return x == 1;
}

int FiniteField::log(int a) const {
  if (a <= 0 || a >= q_) throw std::domain_error("discrete log of zero or out-of-range element");
  return log_[static_cast<std::size_t>(a)];
}

int FiniteField::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::string FiniteField::str(int a) const {
  if (e_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    const int c = d[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const std::vector<std::vector<int>>& FiniteField::irreducibles(int d) const {
  if (d < 1) throw std::invalid_argument("irreducible degree must be >= 1");
  {
    std::lock_guard lock(cache_mutex_);
    auto it = irreducible_cache_.find(d);
    if (it != irreducible_cache_.end()) return it->second;
  }
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q_;
    if (count > (std::int64_t{1} << 26)) throw std::invalid_argument("irreducible sieve too large");
  }
  std::vector<char> composite(static_cast<std::size_t>(count), 0);
  std::vector<int> prod(static_cast<std::size_t>(d) + 1);
  for (int k = 1; 2 * k <= d; ++k) {
    const auto& lower = irreducibles(k);
    std::int64_t cofactors = 1;
    for (int i = 0; i < d - k; ++i) cofactors *= q_;
    std::vector<int> h(static_cast<std::size_t>(d - k) + 1, 0);
    h.back() = 1;
    for (const auto& g : lower) {
      std::fill(h.begin(), h.end() - 1, 0);
      for (std::int64_t code = 0; code < cofactors; ++code) {
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] == 0) continue;
          for (std::size_t j = 0; j < h.size(); ++j) prod[i + j] = add(prod[i + j], mul(g[i], h[j]));
        }
        std::int64_t index = 0;
        for (int i = d - 1; i >= 0; --i) index = index * q_ + prod[static_cast<std::size_t>(i)];
        composite[static_cast<std::size_t>(index)] = 1;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {  // next cofactor
          if (++h[i] < q_) break;
          h[i] = 0;
        }
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (std::int64_t index = 0; index < count; ++index) {
    if (composite[static_cast<std::size_t>(index)]) continue;
    std::vector<int> f(static_cast<std::size_t>(d) + 1);
    std::int64_t c = index;
    for (int i = 0; i < d; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % q_);
      c /= q_;
    }
    f[static_cast<std::size_t>(d)] = 1;
    out.push_back(std::move(f));
  }
  std::lock_guard lock(cache_mutex_);
  return irreducible_cache_.emplace(d, std::move(out)).first->second;
}

FieldPtr make_field(int p, int e) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, FieldPtr> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[{p, e}];
  if (!slot) slot = std::make_shared<const FiniteField>(p, e);
  return slot;
}

FieldPtr make_field(int q) {
  const auto [p, e] = prime_power(q);
  return make_field(p, e);
}

// ---------------------------------------------------------------- FqPoly

FqPoly::FqPoly(FieldPtr field, std::vector<int> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  for (auto& c : c_) {
    if (c < 0 || c >= field_->q()) throw std::invalid_argument("coefficient outside the field");
  }
  trim();
}

FqPoly FqPoly::constant(FieldPtr field, int c) { return FqPoly(std::move(field), {c}); }
FqPoly FqPoly::z(FieldPtr field) { return FqPoly(std::move(field), {0, 1}); }
FqPoly FqPoly::linear(FieldPtr field, int a) {
  const int c = field->neg(a);
  return FqPoly(std::move(field), {c, 1});
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FqPoly::check_same(const FqPoly& o) const {
  if (field_ != o.field_ && !(field_ && o.field_ && *field_ == *o.field_)) {
    throw std::invalid_argument("polynomials over different fields");
  }
}

int FqPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
}

int FqPoly::eval(int a) const {
  int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, a), *it);
  return acc;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no monic associate");
  const int s = field_->inv(c_.back());
  std::vector<int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], s);
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::negate_variable() const {
  std::vector<int> out = c_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = field_->neg(out[i]);
  return FqPoly(field_, std::move(out));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  std::vector<int> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.F().add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(a.field_, std::move(out));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  std::vector<int> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.F().sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(a.field_, std::move(out));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field_, {});
  std::vector<int> out(a.c_.size() + b.c_.size() - 1, 0);
  const auto& F = a.F();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return FqPoly(a.field_, std::move(out));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = *field_;
  std::vector<int> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {FqPoly(field_, {}), *this};
  std::vector<int> quo(static_cast<std::size_t>(degree() - dd + 1), 0);
  const int lead_inv = F.inv(d.c_.back());
  for (int i = degree(); i >= dd; --i) {
    const int c = F.mul(r[static_cast<std::size_t>(i)], lead_inv);
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto& t = r[static_cast<std::size_t>(i - dd + j)];
      t = F.sub(t, F.mul(c, d.c_[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(dd));
  return {FqPoly(field_, std::move(quo)), FqPoly(field_, std::move(r))};
}

bool operator<(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FqPoly::str() const {
  if (is_zero()) return "0";
  const bool prime = field_->e() == 1;
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const int c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_->str(c);
    if (!prime && cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
    if (i == 0 || c != 1) out += cs;
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<FqPoly> monic_polynomials(const FieldPtr& field, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const int q = field->q();
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q;
    if (count > 50'000'000) throw std::invalid_argument("too many polynomials to list");
  }
  std::vector<FqPoly> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
  c.back() = 1;
  for (std::int64_t k = 0; k < count; ++k) {
    out.emplace_back(field, c);
    for (int i = 0; i < d; ++i) {
      if (++c[static_cast<std::size_t>(i)] < q) break;
      c[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

std::int64_t monic_index(const FqPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("monic_index needs a monic polynomial");
  std::int64_t index = 0;
  for (int i = f.degree() - 1; i >= 0; --i) index = index * f.F().q() + f.coeff(i);
  return index;
}

// ---------------------------------------------------------------- factoring

FqPoly FactorMultiset::product(const FieldPtr& field) const {
  FqPoly acc = FqPoly::constant(field, 1);
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) acc = acc * g;
  }
  return acc;
}

std::vector<int> FactorMultiset::degree_partition() const {
  std::vector<int> parts;
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) parts.push_back(g.degree());
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string FactorMultiset::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, m] : factors) {
    if (!first) os << " * ";
    first = false;
    os << "(" << g.str() << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

FactorMultiset factor(const FqPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("factor needs a monic polynomial of degree >= 1");
  FactorMultiset out;
  FqPoly rest = f;
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    for (const auto& coeffs : f.F().irreducibles(k)) {
      if (2 * k > rest.degree()) break;
      const FqPoly g(f.field(), coeffs);
      int m = 0;
      while (rest.degree() >= k) {
        auto [quo, rem] = rest.divmod(g);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++m;
      }
      if (m > 0) out.factors.emplace_back(g, m);
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  const auto fm = factor(f.monic());
  return fm.factors.size() == 1 && fm.factors[0].second == 1;
}

std::int64_t irreducible_count_formula(std::int64_t q, int m) {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  std::int64_t total = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::int64_t power = 1;
    for (int i = 0; i < m / d; ++i) power *= q;
    total += mobius(d) * power;
  }
  return total / m;
}

}  // namespace coxshuffle
