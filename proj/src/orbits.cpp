#include "coxshuffle/orbits.hpp"

#include <algorithm>
#include <thread>

namespace coxshuffle {

OrbitFamily OrbitFamily::parse(const std::string& tag, int n, int q) {
  OrbitFamily fam;
  if (tag == "A") {
    fam.tag = Tag::A;
  } else if (tag == "B") {
    fam.tag = Tag::B;
  } else {
    throw std::invalid_argument("orbit family must be A or B, got " + tag);
  }
  if (n < (fam.tag == Tag::A ? 2 : 1)) throw std::invalid_argument("orbit family: n too small");
  prime_power(q);
  fam.n = n;
  fam.q = q;
  return fam;
}

std::int64_t OrbitFamily::count() const {
  std::int64_t c = 1;
  for (int i = 0; i < rank(); ++i) c *= q;
  return c;
}

bool OrbitFamily::very_good() const {
  const int p = prime_power(q).first;
  return tag == Tag::A ? n % p != 0 : p != 2;
}

CoxeterType OrbitFamily::group_type() const {
  return tag == Tag::A ? CoxeterType{Family::A, n - 1, 0} : CoxeterType{Family::B, n, 0};
}

std::vector<int> OrbitFamily::exponents() const {
  std::vector<int> m;
  for (int i = 1; i <= rank(); ++i) m.push_back(tag == Tag::A ? i : 2 * i - 1);
  return m;
}

std::string OrbitFamily::name() const {
  return std::string(tag == Tag::A ? "A" : "B") + " n=" + std::to_string(n) + " q=" + std::to_string(q);
}

namespace {

// Coefficient slots that vary over the family, low to high.
std::vector<int> free_slots(const OrbitFamily& fam) {
  std::vector<int> slots;
  if (fam.tag == OrbitFamily::Tag::A) {
    for (int i = 0; i + 1 < fam.n; ++i) slots.push_back(i);
  } else {
    for (int i = 0; i < fam.n; ++i) slots.push_back(2 * i);
  }
  return slots;
}

int degree_of(const OrbitFamily& fam) { return fam.tag == OrbitFamily::Tag::A ? fam.n : 2 * fam.n; }

FqPoly representative(const OrbitFamily& fam, const FieldPtr& F, const std::vector<int>& slots, std::int64_t code) {
  std::vector<int> c(static_cast<std::size_t>(degree_of(fam)) + 1, 0);
  c.back() = 1;
  for (int s : slots) {
    c[static_cast<std::size_t>(s)] = static_cast<int>(code % fam.q);
    code /= fam.q;
  }
  return FqPoly(F, std::move(c));
}

}  // namespace

std::vector<FqPoly> enumerate_orbits(const OrbitFamily& fam, std::int64_t bound) {
  const std::int64_t total = fam.count();
  if (total > bound) throw EnumerationBoundError("orbit enumeration for " + fam.name(), total, bound);
  const auto F = make_field(fam.q);
  const auto slots = free_slots(fam);
  std::vector<FqPoly> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t code = 0; code < total; ++code) out.push_back(representative(fam, F, slots, code));
  return out;
}

bool in_family(const OrbitFamily& fam, const FqPoly& f) {
  if (!f.is_monic() || f.degree() != degree_of(fam) || f.F().q() != fam.q) return false;
  if (fam.tag == OrbitFamily::Tag::A) return f.coeff(fam.n - 1) == 0;
  for (int i = 1; i < f.degree(); i += 2) {
    if (f.coeff(i) != 0) return false;
  }
  return true;
}

ClassLabel phi_map(const OrbitFamily& fam, const FqPoly& f) {
  if (!in_family(fam, f)) throw std::invalid_argument("phi_map: " + f.str() + " is not a representative of " + fam.name());
  const auto fm = factor(f);
  if (fam.tag == OrbitFamily::Tag::A) return ClassLabel::partition(fm.degree_partition());

  if (fam.q % 2 == 0) throw std::invalid_argument("phi_map: family B needs odd characteristic");
  std::vector<int> lambda;
  std::vector<int> mu;
  std::map<FqPoly, int, std::less<>> mult;
  for (const auto& [g, m] : fm.factors) mult.emplace(g, m);
  for (const auto& [g, m] : fm.factors) {
    const FqPoly star = g.conjugate();
    if (star == g) {
      const int r = m / 2;
      const int s = m % 2;
      for (int i = 0; i < r; ++i) lambda.push_back(g.degree());
      if (s == 1) {
        if (g.degree() % 2 != 0) throw std::logic_error("phi_map: odd self-conjugate factor with odd multiplicity");
        mu.push_back(g.degree() / 2);
      }
    } else if (g < star) {  // count each pair once
      auto it = mult.find(star);
      if (it == mult.end() || it->second != m) throw std::logic_error("phi_map: unbalanced conjugate pair");
      for (int i = 0; i < m; ++i) lambda.push_back(g.degree());
    }
  }
  return ClassLabel::signed_partition(make_partition(lambda), make_partition(mu));
}

TypeVector type_vector(const ClassLabel& label, int n) {
  TypeVector tv{std::vector<int>(static_cast<std::size_t>(n) + 1, 0), std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int part : label.lambda) ++tv.lambda.at(static_cast<std::size_t>(part));
  for (int part : label.mu) ++tv.mu.at(static_cast<std::size_t>(part));
  return tv;
}

std::map<ClassLabel, std::int64_t> orbit_class_counts(const OrbitFamily& fam, int jobs) {
  const auto reps = enumerate_orbits(fam);
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  std::vector<std::map<ClassLabel, std::int64_t>> partial(workers);
  auto run = [&](std::size_t worker) {
    for (std::size_t i = worker; i < reps.size(); i += workers) ++partial[worker][phi_map(fam, reps[i])];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::map<ClassLabel, std::int64_t> total;
  for (const auto& part : partial) {
    for (const auto& [label, c] : part) total[label] += c;
  }
  return total;
}

std::map<ClassLabel, Rational> orbit_class_distribution(const OrbitFamily& fam, int jobs) {
  const Rational denom(fam.count());
  std::map<ClassLabel, Rational> out;
  for (const auto& [label, c] : orbit_class_counts(fam, jobs)) out[label] = Rational(c) / denom;
  return out;
}

ClassLabel identity_label(const OrbitFamily& fam) {
  if (fam.tag == OrbitFamily::Tag::A) return ClassLabel::partition(Partition(static_cast<std::size_t>(fam.n), 1));
  return ClassLabel::signed_partition(Partition(static_cast<std::size_t>(fam.n), 1), {});
}

Rational identity_prediction(const OrbitFamily& fam) {
  Rational out(1);
  for (int m : fam.exponents()) out *= Rational(fam.q + m, 1 + m);
  return out;
}

SplitCensus split_census_constant_one(int n, int q) {
  if (n < 1) throw std::invalid_argument("split census: n must be >= 1");
  const auto F = make_field(q);
  SplitCensus out;
  out.n = n;
  out.q = q;
  for (const auto& f : monic_polynomials(F, n)) {
    if (f.coeff(0) != 1) continue;
    const auto fm = factor(f);
    if (std::all_of(fm.factors.begin(), fm.factors.end(), [](const auto& pr) { return pr.first.degree() == 1; })) {
      ++out.census;
    }
  }
  out.prediction = Rational(1);
  for (int i = 1; i < n; ++i) out.prediction *= Rational(q + i, 1 + i);
  return out;
}

TranslationReport translation_invariance_check(int n, int q) {
  TranslationReport out;
  if (!is_prime(q)) throw std::invalid_argument("translation check needs a prime q");
  if (n < 1) throw std::invalid_argument("translation check: n must be >= 1");
  if (n % q == 0) {
    out.reason = "hypothesis violated: p divides n";
    return out;
  }
  out.applicable = true;
  const auto F = make_field(q);
  out.fibers.assign(static_cast<std::size_t>(q), {});
  for (const auto& f : monic_polynomials(F, n)) {
    ++out.fibers[static_cast<std::size_t>(f.coeff(n - 1))][factor(f).degree_partition()];
  }
  out.invariant = std::all_of(out.fibers.begin(), out.fibers.end(), [&](const auto& fib) { return fib == out.fibers[0]; });
  return out;
}

}  // namespace coxshuffle
