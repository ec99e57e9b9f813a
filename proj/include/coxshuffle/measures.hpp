#ifndef COXSHUFFLE_MEASURES_HPP
#define COXSHUFFLE_MEASURES_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxshuffle/analysis.hpp"

namespace coxshuffle {

enum class Method { Definition, OsSign, ClosedForm };

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Exact signed measure on the elements of a group. `x` records the
/// shuffle parameter when the measure is some H_{W,x}.
struct WMeasure {
  std::shared_ptr<const GroupData> group;
  std::optional<Rational> x;
  std::vector<Rational> values;  // indexed by element

  [[nodiscard]] const Rational& operator()(int w) const { return values[static_cast<std::size_t>(w)]; }
  [[nodiscard]] Rational total() const;

  /// Values per descent set (indexed by mask), or nullopt when the measure
  /// is not constant on some descent class. Empty classes hold 0.
  [[nodiscard]] std::optional<std::vector<Rational>> by_descent() const;

  static WMeasure from_descent_values(std::shared_ptr<const GroupData> g, const std::vector<Rational>& by_descent);
  static WMeasure point_mass(std::shared_ptr<const GroupData> g, int w);
};

/// A weight v_K applied to every face wW_K of the Coxeter complex.
struct FaceWeights {
  std::vector<Rational> v;  // indexed by K

  /// sum_K (|W| / |W_K|) v_K
  [[nodiscard]] Rational total(const GroupData& g) const;
};

/// v_K = |W_K| chi_K(x) / (x^r |N_W(W_K)| |lambda(K)|)
FaceWeights face_weights_definition(const GroupData& g, const Rational& x);
/// v_K = (-1)^{r-|K|} chi_K(x) / (x^r chi_K(-1))
FaceWeights face_weights_os_sign(const GroupData& g, const Rational& x);

/// H(w) = sum over K contained in the complement of Des(w) of v_K.
WMeasure measure_from_face_weights(std::shared_ptr<const GroupData> g, const FaceWeights& fw);

/// H_{W,x} by the chosen method. Throws std::invalid_argument for x = 0 and
/// for a closed form requested outside families A, B, H3, H4.
WMeasure h_measure(std::shared_ptr<const GroupData> g, const Rational& x, Method method);

/// Closed-form value for a descent set (families A, B, H3, H4).
Rational closed_form_value(const GroupData& g, DescentSet des, const Rational& x);

/// (prod (x - m_i), prod (x + m_i)) / (x^r |W|): predicted H(w0) and H(id).
std::pair<Rational, Rational> longshort_values(const GroupData& g, const Rational& x);

struct SommersCheck {
  bool hypothesis_holds = false;  // x coprime to every mark
  Rational lhs;                   // sum over proper S of p(S, x)
  Rational rhs;                   // f prod (x + m_i) / |W|
  bool identity_holds = false;
  Rational identity_value;        // H_{W,x}(id) computed by the definition method
  bool chain_holds = false;       // lhs / (f x^r) == H(id)
};
SommersCheck sommers_identity_check(std::shared_ptr<const GroupData> g, int x);

/// One BHR step from the identity chamber: each face uW_K is drawn with
/// weight v_K and the walk moves to the chamber of uW_K nearest the
/// identity, found by minimising length over the coset.
WMeasure bhr_step(std::shared_ptr<const GroupData> g, const FaceWeights& fw);

/// M[u][w] = chance that one step from chamber u lands at w. Limited to
/// groups of order at most `max_order`.
Mat<Rational> transition_matrix(const GroupData& g, const FaceWeights& fw, int max_order = 2000);

/// prod_{i=0}^{r} (M - x^{-i} I) == 0
bool spectrum_identity_holds(const Mat<Rational>& M, const Rational& x, int rank);

bool rows_sum_to_one(const Mat<Rational>& M);

/// Group-algebra product: out(uv) += m1(u) m2(v), skipping zero entries.
WMeasure convolve(const WMeasure& m1, const WMeasure& m2);

using ClassMeasure = std::map<ClassLabel, Rational>;

ClassMeasure pushforward_classes(const WMeasure& m);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_MEASURES_HPP
