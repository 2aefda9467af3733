#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "glab/error.hpp"
#include "glab/fq.hpp"
#include "glab/numutil.hpp"
#include "glab/poly.hpp"

namespace glab {

/// y^2 = x^3 + ax + b with coefficients in F_q (C = FqElem) or in F_q[t]
/// (C = Poly<FqElem>, denominators cleared).  Characteristic > 3 throughout.
template <class C>
struct WeierstrassCurve {
  FqFieldPtr field;
  C a, b;
};

using EllipticCurve = WeierstrassCurve<FqElem>;
using FqtCurve = WeierstrassCurve<Poly<FqElem>>;

/// Validates p > 3 and nonsingularity (4a^3 + 27b^2 != 0).
EllipticCurve make_elliptic(const FqElem& a, const FqElem& b);
FqtCurve make_fqt_curve(const FqFieldPtr& field, Poly<FqElem> a, Poly<FqElem> b);

/// #E(F_{q^i}) by direct quadratic-character counting; for i >= 2 the result
/// is also checked against the Weil prediction from N_1.
uint64_t point_count(const EllipticCurve& e, int i = 1);

/// Invariant factors of E(F_q) = Z/d1 x Z/d2 with d1 | d2 (and d1 | q - 1).
struct AbelianGroupShape {
  uint64_t d1 = 1, d2 = 1;
  uint64_t order() const { return d1 * d2; }
  std::string str() const;
};

AbelianGroupShape group_structure(const EllipticCurve& e);

/// j = 1728 * 4a^3 / (4a^3 + 27b^2).
FqElem j_invariant(const EllipticCurve& e);

namespace detail {

template <class C>
C curve_scalar(const WeierstrassCurve<C>& e, int64_t v) {
  if constexpr (std::is_same_v<C, FqElem>)
    return e.field->from_int(v);
  else
    return C::constant(e.field->from_int(v));
}

}  // namespace detail

/// The l-division polynomial in x-form: psi_2^2 = 4(x^3 + ax + b) eliminates
/// y, so for odd l the roots are exactly the x-coordinates of the nonzero
/// l-torsion.  Degree (l^2 - 1)/2.
template <class C>
Poly<C> division_poly(const WeierstrassCurve<C>& e, int l) {
  if (l < 3 || l % 2 == 0 || !is_prime(static_cast<uint64_t>(l)) ||
      static_cast<int64_t>(l) == e.field->p())
    throw error(errc::bad_prime, "division polynomial needs an odd prime l distinct from p");
  auto scalar = [&](int64_t v) { return detail::curve_scalar(e, v); };
  auto cpoly = [&](std::vector<C> v) { return Poly<C>(std::move(v)); };
  const C a = e.a, b = e.b;
  const C zero = scalar(0);
  Poly<C> f = cpoly({b, a, zero, scalar(1)});  // x^3 + ax + b
  Poly<C> f2 = f * f;
  std::vector<Poly<C>> psi(static_cast<std::size_t>(l) + 1);
  psi[1] = cpoly({scalar(1)});
  psi[2] = cpoly({scalar(2)});
  psi[3] = cpoly({zero - a * a, scalar(12) * b, scalar(6) * a, zero, scalar(3)});
  if (l >= 5)
    psi[4] = cpoly({scalar(-32) * (b * b) - scalar(4) * (a * a * a), scalar(-16) * (a * b),
                    scalar(-20) * (a * a), scalar(80) * b, scalar(20) * a, zero,
                    scalar(4)});
  const C half = detail::curve_scalar(
      e, [&] {
        // 2^{-1} mod p lifted into the domain
        int64_t p = e.field->p();
        return (p + 1) / 2;
      }());
  for (int n = 5; n <= l; ++n) {
    std::size_t un = static_cast<std::size_t>(n);
    if (n % 2) {
      std::size_t m = un / 2;
      Poly<C> lead = psi[m + 2] * psi[m] * psi[m] * psi[m];
      Poly<C> tail = psi[m - 1] * psi[m + 1] * psi[m + 1] * psi[m + 1];
      psi[un] = (m % 2 == 0) ? f2 * lead - tail : lead - f2 * tail;
    } else {
      std::size_t m = un / 2;
      Poly<C> inner =
          psi[m + 2] * psi[m - 1] * psi[m - 1] - psi[m - 2] * psi[m + 1] * psi[m + 1];
      psi[un] = (psi[m] * inner).scaled(half);
    }
  }
  Poly<C>& out = psi[static_cast<std::size_t>(l)];
  if (out.degree() != (l * l - 1) / 2)
    throw error(errc::unsupported, "division polynomial degree check failed");
  return out;
}

/// R(t, y) = Res_x(psi_l, y^2 - (x^3 + ax + b)) over F_q[t]; outer variable y,
/// inner t.  deg_y R = l^2 - 1.  Separability is certified by exhibiting a
/// specialization t = t0 with squarefree R(t0, y) of full degree; when no
/// such t0 exists in F_q the result is reported inseparable, not fatal.
struct TorsionResultant {
  Poly<Poly<FqElem>> r;
  int degree_y = 0;
  bool separable = false;
  std::optional<FqElem> witness_t;
  std::string text() const;
};

TorsionResultant torsion_field_resultant(const FqtCurve& e, int l);

/// Constant-field part of the l-torsion extension of F_q(t): the subgroup
/// H = <q mod l> of F_l^*.  Trivial H (q = 1 mod l) gives geometric Galois
/// group SL_2(F_l), and PSL_2(F_l) after the +-1 quotient.
struct IgusaReport {
  uint64_t q = 0, l = 0;
  std::vector<uint64_t> subgroup;
  bool trivial = false;
  std::string text() const;
};

IgusaReport igusa_criterion(uint64_t q, uint64_t l);

}  // namespace glab
