#ifndef COXSHUFFLE_BIJECTIONS_HPP
#define COXSHUFFLE_BIJECTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxshuffle/finite_field.hpp"
#include "coxshuffle/necklace.hpp"

namespace coxshuffle {

/// Permutation of {1..n} from a multiset of necklaces. Every entry is
/// replaced by the rank of the infinite word read from it; ties between
/// equal infinite words go to the earlier necklace in `necklaces`, then to
/// the earlier position. Returns the one-line form: each necklace becomes a
/// cycle r_0 -> r_1 -> ... of the ranks of its entries.
std::vector<int> gessel_reutenauer(const std::vector<ZWord>& necklaces);

/// "(1 3)(2 4)(5)": cycles from their smallest entry, by smallest entry.
std::string cycle_string(const std::vector<int>& one_line);

/// Parses "12,12,2,23,23233" or "1 2,1 2,2" (entries separated by spaces
/// when any is wider than one digit).
std::vector<ZWord> parse_necklace_list(const std::string& text);

/// Digits (base p, least significant first) of the discrete log, base
/// `beta`, of a root of phi in F_{p^i}, as a canonical plain necklace.
/// Throws std::invalid_argument when phi = z, phi is reducible, or beta
/// does not generate the multiplicative group.
ZWord golomb_encode(const FqPoly& phi, int beta);
/// Same, with the field's own generator of F_{p^deg phi}.
ZWord golomb_encode(const FqPoly& phi);

/// First element (in code order) of F_{q^m} whose Frobenius conjugates
/// alpha, alpha^q, .., alpha^{q^{m-1}} form a basis over F_q. q must be
/// prime, q^m at most 10^5.
int normal_basis(int q, int m);

/// Coordinates of x over the normal basis generated by alpha in `field`
/// (c_j is the coefficient of alpha^{p^j}).
std::vector<int> normal_coordinates(const FiniteField& field, int alpha, int x);

/// A root of phi in the extension F_{p^deg phi}, found by search.
int root_in_extension(const FqPoly& phi, const FiniteField& ext);

/// Signed ornament of an even monic polynomial over F_q (q odd prime),
/// built from normal-basis coordinates of roots of its irreducible factors,
/// with entries taken in [-(q-1)/2, (q-1)/2].
SignedOrnament ornament_from_polynomial(const FqPoly& f);

enum class RefineMode { Golomb, NormalBasis };
RefineMode parse_refine_mode(const std::string& name);

/// Necklace of an irreducible factor under the chosen encoding. In Golomb
/// mode z has no discrete log; with `extend_z` it is sent to the one-entry
/// necklace (p-1), which no other polynomial reaches.
ZWord encode_irreducible(const FqPoly& phi, RefineMode mode, bool extend_z = false);

/// Factor f, encode each irreducible factor (repeated by multiplicity) and
/// apply gessel_reutenauer. Golomb mode needs f(0) != 0 unless extend_z.
std::vector<int> refine_phi_A(const FqPoly& f, RefineMode mode, bool extend_z = false);

/// Number of monic degree-n polynomials over F_p sent to each permutation
/// (one-line form) by refine_phi_A.
std::map<std::vector<int>, std::int64_t> refine_census(int n, int p, RefineMode mode);

/// Number of descents of a permutation in one-line form.
int permutation_descents(const std::vector<int>& one_line);
std::vector<int> inverse_permutation(const std::vector<int>& one_line);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_BIJECTIONS_HPP
