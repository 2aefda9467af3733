#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glab/fq.hpp"
#include "glab/parse.hpp"
#include "glab/poly.hpp"
#include "glab/rational.hpp"

namespace glab {

/// A place of the rational function field F_q(x): a monic irreducible of
/// F_q[x], or the place at infinity (degree 1).
struct Place {
  FqFieldPtr field;
  bool infinite = false;
  Poly<FqElem> prime;  // monic irreducible; empty iff infinite

  int degree() const { return infinite ? 1 : prime.degree(); }
  std::string str() const;
};

Place make_place(const Poly<FqElem>& prime);
Place infinite_place(const FqFieldPtr& field);

/// All places of degree <= bound, ordered by degree, then monic index within
/// a degree (constant coefficient fastest); infinity last among degree 1.
std::vector<Place> places_up_to(const FqFieldPtr& field, int bound);

/// Residue degrees of the places above P in the extension defined by a monic
/// separable f(y) over F_q(x), via factoring f mod P in the residue field.
/// `ramified` is set (and degrees left empty) when f mod P is not squarefree.
struct SplittingPattern {
  Place place;
  bool ramified = false;
  std::vector<int> degrees;  // sorted ascending
  std::string str() const;
};

SplittingPattern splitting_pattern(const Poly<Poly<FqElem>>& f, const Place& p,
                                   uint64_t seed = 0);

/// Compare the splitting behavior of two extensions place by place through
/// the given degree bound.  The witness is the first unramified place where
/// the patterns disagree; places ramified for either field are collected
/// separately and excluded from the comparison.
struct SplittingComparison {
  bool equivalent = true;
  std::optional<Place> witness;
  std::vector<int> witness_degrees_f, witness_degrees_g;
  std::vector<Place> ramified;
  uint64_t places_compared = 0;
  std::string text() const;
};

SplittingComparison splitting_equivalent(const Poly<Poly<FqElem>>& f,
                                         const Poly<Poly<FqElem>>& g, int bound,
                                         uint64_t seed = 0);

/// Zeta data of a smooth projective curve of genus 0 or 1 over F_q, rebuilt
/// from point counts N_i over F_{q^i}.  The numerator P(T) is derived from
/// N_1; any further supplied counts are checked against it, and the
/// functional equation and positivity constraints are enforced.
struct ZetaData {
  uint64_t q = 0;
  int genus = 0;
  Poly<BigInt> numerator;
  std::vector<BigInt> place_counts;  // b_1 .. b_bound
  BigInt class_number;
  std::string text() const;
};

ZetaData zeta_from_counts(const std::vector<uint64_t>& counts, uint64_t q, int genus,
                          int bound = 6);

/// L-polynomial of the quadratic character attached to squarefree f, i.e. the
/// numerator contribution of the extension y^2 = f(x) (q odd).  Computed from
/// point counts via Newton's identities plus the functional equation, then
/// cross-checked against the truncated Euler product over places of degree
/// <= euler_bound (0 picks 2g+2).
Poly<BigInt> quad_lfun(const Poly<FqElem>& f, int euler_bound = 0);

/// Quadratic-character value of f at a place (+1 split, -1 inert, 0 ramified).
int quad_character(const Poly<FqElem>& f, const Place& p);

/// The biquadratic field K' = F_q(x, sqrt(f1), sqrt(f2)) and its quadratic
/// subfields: zeta_{K'} factors through the three quadratic characters, so
/// the L-function of the induced character on the compositum side equals
/// quad_lfun(f1) * quad_lfun(squarefree_part(f1*f2)), with pole orders 1 and
/// 0 at T = 1/q for the two sides of the induction identity.
struct MotivatingReport {
  Poly<BigInt> l_f1, l_f2, l_f1f2;
  Poly<BigInt> induced_product;  // l_f1 * l_f1f2
  int pole_order_zeta = 1;       // Ind contains the trivial character once
  int pole_order_lfun = 0;       // the nontrivial pieces are pole-free
  bool zeta_numerators_equal = false;
  std::string text() const;
};

MotivatingReport motivating_example_check(const Poly<FqElem>& f1, const Poly<FqElem>& f2,
                                          int euler_bound = 0);

/// Order of the ray class group of conductor T*infinity for F_q(x) with class
/// number h: h * (q^T - 1)/(q - 1) * ... reduced to the exact divisibility
/// statement used by the construction: the full order is h*(q^T - 1)/(q - 1).
struct RayClassOrder {
  BigInt order;
  uint64_t modulus_degree = 0;
  uint64_t ell = 0;
  bool divisible = false;
  std::string text() const;
};

RayClassOrder ray_class_order(uint64_t h, uint64_t q, unsigned t_degree, uint64_t ell = 0);

/// Smallest odd prime l coprime to the characteristic, to q - 1, to the
/// Galois group order, and to the class number, together with the congruence
/// on the conductor degree that forces l to divide the ray class order.
struct ParameterChoice {
  uint64_t ell = 0;
  uint64_t t_degree_multiple = 0;  // T must be a multiple of this (= l - 1)
  std::string text() const;
};

ParameterChoice choose_parameters(uint64_t p, uint64_t q, uint64_t group_order, uint64_t h);

/// First place of the given degree (in canonical order) at which f splits
/// completely; throws not_found when the scan is exhausted.
Place find_split_prime(const Poly<Poly<FqElem>>& f, int degree);

}  // namespace glab
