#pragma once

#include <cstdint>
#include <string>

#include "glab/poly.hpp"
#include "glab/rational.hpp"

namespace glab {

/// n-th cyclotomic polynomial over Q (computed once, cached).
const Poly<Rat>& cyclotomic_poly(uint64_t n);

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n reduced mod the n-th cyclotomic polynomial.  Conductors grow by
/// lcm under mixed arithmetic; representations at a fixed conductor are
/// unique, so equality is decidable exactly.
class CycloNum {
 public:
  CycloNum() = default;  // zero, conductor 1

  static CycloNum rational(Rat r);
  static CycloNum integer(int64_t v) { return rational(Rat(v)); }
  /// zeta_n^k (k may be negative)
  static CycloNum root_of_unity(uint64_t n, int64_t k = 1);

  uint64_t conductor() const { return n_; }
  const Poly<Rat>& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat to_rational() const;  // throws unsupported when irrational
  /// All power-basis coordinates are integers, i.e. the value lies in
  /// Z[zeta_n] (an algebraic integer, since the power basis is integral).
  bool is_integral() const;

  /// Image under zeta_n -> zeta_m, n | m.
  CycloNum promoted(uint64_t m) const;

  /// Complex conjugate (zeta -> zeta^{-1}).
  CycloNum conj() const;
  /// |z|^2 = z * conj(z); always a totally real cyclotomic number.
  CycloNum abs2() const { return *this * conj(); }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

  CycloNum scaled(const Rat& k) const;
  CycloNum divided(const Rat& k) const;  // throws division_by_zero on k = 0

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Polynomial in z, e.g. "0", "-1/2", "2 + z", "z^2 + 1/3*z"; z stands for
  /// a primitive root of unity of order conductor().
  std::string str() const;

 private:
  CycloNum(uint64_t n, Poly<Rat> rep) : n_(n), rep_(std::move(rep)) {}

  uint64_t n_ = 1;
  Poly<Rat> rep_;
};

/// Arbitrary but deterministic total order compatible with equality; used to
/// canonicalize lists of cyclotomic values.
bool cyclo_less(const CycloNum& a, const CycloNum& b);

}  // namespace glab
