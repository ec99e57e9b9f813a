#ifndef COXSHUFFLE_ORBITS_HPP
#define COXSHUFFLE_ORBITS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxshuffle/class_label.hpp"
#include "coxshuffle/enumeration.hpp"
#include "coxshuffle/finite_field.hpp"
#include "coxshuffle/rational.hpp"
#include "coxshuffle/root_system.hpp"

namespace coxshuffle {

/// Semisimple orbits of SL(n) (tag A: monic degree-n polynomials with no
/// z^{n-1} term) or of Spin(2n+1) (tag B: monic even polynomials of degree
/// 2n), over F_q.
struct OrbitFamily {
  enum class Tag { A, B };

  Tag tag = Tag::A;
  int n = 2;
  int q = 2;

  static OrbitFamily parse(const std::string& tag, int n, int q);

  [[nodiscard]] int rank() const { return tag == Tag::A ? n - 1 : n; }
  [[nodiscard]] std::int64_t count() const;
  /// A: p does not divide n. B: p odd.
  [[nodiscard]] bool very_good() const;
  [[nodiscard]] CoxeterType group_type() const;
  /// Exponents of the Weyl group: 1..n-1 for A, 1,3,..,2n-1 for B.
  [[nodiscard]] std::vector<int> exponents() const;
  [[nodiscard]] std::string name() const;
};

std::vector<FqPoly> enumerate_orbits(const OrbitFamily& fam, std::int64_t bound = 1'000'000);

/// True when f is one of the family's representatives.
bool in_family(const OrbitFamily& fam, const FqPoly& f);

/// Class label of f. A: the partition of n given by the degrees of the
/// irreducible factors, with multiplicity. B: (lambda, mu), where every
/// pair {phi, phi*} with phi* the monic associate of phi(-z) contributes
/// its multiplicity to lambda at deg phi, and a self-conjugate phi of
/// multiplicity 2r + s (s in {0,1}) contributes r to lambda at deg phi and s
/// to mu at deg phi / 2. Throws std::invalid_argument when f is not a
/// representative, or for family B in characteristic 2.
ClassLabel phi_map(const OrbitFamily& fam, const FqPoly& f);

/// (lambda_i) and (mu_i) vectors of a type B label, indexed from 1.
struct TypeVector {
  std::vector<int> lambda;
  std::vector<int> mu;
};
TypeVector type_vector(const ClassLabel& label, int n);

/// Representatives per class; `jobs` threads share the enumeration.
std::map<ClassLabel, std::int64_t> orbit_class_counts(const OrbitFamily& fam, int jobs = 1);

/// Uniform measure on the q^rank representatives pushed through phi_map.
std::map<ClassLabel, Rational> orbit_class_distribution(const OrbitFamily& fam, int jobs = 1);

/// Label of the identity class: (1^n) for A, ((1^n), ()) for B.
ClassLabel identity_label(const OrbitFamily& fam);

/// prod (q + m_i) / (1 + m_i) over the exponents m_i.
Rational identity_prediction(const OrbitFamily& fam);

struct SplitCensus {
  int n = 0;
  int q = 0;
  std::int64_t census = 0;   // monic, split into linear factors, f(0) = 1
  Rational prediction;       // prod (q + i) / (1 + i), i = 1..n-1
  [[nodiscard]] bool mismatch() const { return Rational(census) != prediction; }
};
SplitCensus split_census_constant_one(int n, int q);

struct TranslationReport {
  bool applicable = false;
  std::string reason;
  /// Per value of the z^{n-1} coefficient: factorization type -> count.
  std::vector<std::map<Partition, std::int64_t>> fibers;
  bool invariant = false;
};
/// Needs q prime; not applicable when p divides n.
TranslationReport translation_invariance_check(int n, int q);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_ORBITS_HPP
