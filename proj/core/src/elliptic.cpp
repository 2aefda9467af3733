#include "glab/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "glab/fqpoly.hpp"
#include "glab/numutil.hpp"
#include "glab/resultant.hpp"

namespace glab {

namespace {

constexpr uint64_t kCountGuard = 1000000;
// group_structure does O(tau(N) log N) curve additions per point
constexpr uint64_t kGroupGuard = 10000;

Poly<FqElem> first_irreducible(const FqFieldPtr& field, int d) {
  FqElem sample = field->zero();
  uint64_t total = checked_pow(field->q(), static_cast<unsigned>(d));
  for (uint64_t k = 0; k < total; ++k) {
    Poly<FqElem> f = monic_poly_by_index(sample, d, k);
    if (is_irreducible(f)) return f;
  }
  throw error(errc::not_found, "no irreducible polynomial found");  // unreachable
}

void check_characteristic(const FqFieldPtr& field) {
  if (!field) throw error(errc::mixed_fields, "curve needs a base field");
  if (field->p() <= 3)
    throw error(errc::bad_prime, "short Weierstrass form needs characteristic > 3");
}

/// Affine point or the point at infinity (nullopt).
using Pt = std::optional<std::pair<FqElem, FqElem>>;

Pt pt_add(const EllipticCurve& e, const Pt& p, const Pt& q) {
  if (!p) return q;
  if (!q) return p;
  const auto& [x1, y1] = *p;
  const auto& [x2, y2] = *q;
  if (x1 == x2 && (y1 + y2).is_zero()) return std::nullopt;
  FqElem lam;
  if (x1 == x2 && y1 == y2)
    lam = (e.field->from_int(3) * x1 * x1 + e.a) * (e.field->from_int(2) * y1).inv();
  else
    lam = (y2 - y1) * (x2 - x1).inv();
  FqElem x3 = lam * lam - x1 - x2;
  return std::make_pair(x3, lam * (x1 - x3) - y1);
}

Pt pt_scale(const EllipticCurve& e, uint64_t k, Pt p) {
  Pt r = std::nullopt;
  while (k) {
    if (k & 1) r = pt_add(e, r, p);
    p = pt_add(e, p, p);
    k >>= 1;
  }
  return r;
}

}  // namespace

EllipticCurve make_elliptic(const FqElem& a, const FqElem& b) {
  if (!a.field() || !b.field() || !a.field()->same(*b.field()))
    throw error(errc::mixed_fields, "curve coefficients from different fields");
  FqFieldPtr field = a.field();
  check_characteristic(field);
  FqElem disc = field->from_int(4) * a * a * a + field->from_int(27) * b * b;
  if (disc.is_zero()) throw error(errc::singular_curve, "4a^3 + 27b^2 = 0");
  return EllipticCurve{std::move(field), a, b};
}

FqtCurve make_fqt_curve(const FqFieldPtr& field, Poly<FqElem> a, Poly<FqElem> b) {
  check_characteristic(field);
  for (const Poly<FqElem>* c : {&a, &b})
    for (const FqElem& v : c->coeffs())
      if (!v.field() || !v.field()->same(*field))
        throw error(errc::mixed_fields, "curve coefficients from different fields");
  Poly<FqElem> four = Poly<FqElem>::constant(field->from_int(4));
  Poly<FqElem> t27 = Poly<FqElem>::constant(field->from_int(27));
  Poly<FqElem> disc = four * a * a * a + t27 * b * b;
  if (disc.is_zero())
    throw error(errc::singular_curve, "4a^3 + 27b^2 = 0 in F_q[t]");
  return FqtCurve{field, std::move(a), std::move(b)};
}

uint64_t point_count(const EllipticCurve& e, int i) {
  if (i < 1) throw error(errc::unsupported, "point count needs i >= 1");
  const FqFieldPtr& field = e.field;
  const uint64_t q = field->q();
  const uint64_t big = checked_pow(q, static_cast<unsigned>(i));
  if (big > kCountGuard)
    throw error(errc::enumeration_bound_exceeded, "point count field too large");
  uint64_t n = 1;  // the point at infinity
  if (i == 1) {
    for (uint64_t idx = 0; idx < q; ++idx) {
      FqElem x = field->from_index(idx);
      FqElem v = (x * x + e.a) * x + e.b;
      if (v.is_zero())
        n += 1;
      else if (v.pow((q - 1) / 2).is_one())
        n += 2;
    }
    return n;
  }
  auto ext = ExtField<FqElem>::make(first_irreducible(field, i), false);
  ExtElem<FqElem> sample = ext->zero();
  ExtElem<FqElem> ea = ext->embed(e.a), eb = ext->embed(e.b);
  for (uint64_t idx = 0; idx < big; ++idx) {
    ExtElem<FqElem> x = field_traits<ExtElem<FqElem>>::element(sample, idx);
    ExtElem<FqElem> v = (x * x + ea) * x + eb;
    if (v == sample)
      n += 1;
    else if (v.pow((big - 1) / 2) == ext->one())
      n += 2;
  }
  // N_i must match the Weil prediction from N_1 (power sums of the two
  // Frobenius eigenvalues: s_k = s_1 s_{k-1} - q s_{k-2}).
  const int64_t s1 =
      static_cast<int64_t>(q) + 1 - static_cast<int64_t>(point_count(e, 1));
  int64_t sm2 = 2, sm1 = s1;
  for (int k = 2; k <= i; ++k) {
    int64_t s = s1 * sm1 - static_cast<int64_t>(q) * sm2;
    sm2 = sm1;
    sm1 = s;
  }
  if (static_cast<int64_t>(big) + 1 - sm1 != static_cast<int64_t>(n))
    throw error(errc::functional_equation_violated,
                "extension point count disagrees with the Weil prediction");
  return n;
}

std::string AbelianGroupShape::str() const {
  std::ostringstream os;
  if (d1 == 1)
    os << "Z/" << d2;
  else
    os << "Z/" << d1 << " x Z/" << d2;
  return os.str();
}

AbelianGroupShape group_structure(const EllipticCurve& e) {
  const FqFieldPtr& field = e.field;
  const uint64_t q = field->q();
  if (q > kGroupGuard)
    throw error(errc::enumeration_bound_exceeded, "group structure field too large");
  // y -> y^2 lookup so the point enumeration stays linear in q
  std::vector<std::vector<uint64_t>> roots(q);
  for (uint64_t idx = 0; idx < q; ++idx) {
    FqElem y = field->from_index(idx);
    roots[(y * y).index()].push_back(idx);
  }
  std::vector<Pt> pts;
  pts.push_back(std::nullopt);
  for (uint64_t idx = 0; idx < q; ++idx) {
    FqElem x = field->from_index(idx);
    FqElem v = (x * x + e.a) * x + e.b;
    for (uint64_t yi : roots[v.index()])
      pts.emplace_back(std::make_pair(x, field->from_index(yi)));
  }
  const uint64_t n = pts.size();
  std::vector<uint64_t> divs;
  for (uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  uint64_t expo = 1;
  for (const Pt& p : pts) {
    if (!p) continue;
    for (uint64_t d : divs)
      if (!pt_scale(e, d, p)) {
        expo = std::lcm(expo, d);
        break;
      }
    if (expo == n) break;
  }
  AbelianGroupShape shape;
  shape.d2 = expo;
  shape.d1 = n / expo;
  if (shape.d1 * shape.d2 != n || shape.d2 % shape.d1 != 0)
    throw error(errc::unsupported, "group is not of rank <= 2");
  if ((q - 1) % shape.d1 != 0)
    throw error(errc::unsupported, "d1 does not divide q - 1");
  return shape;
}

FqElem j_invariant(const EllipticCurve& e) {
  const FqFieldPtr& field = e.field;
  FqElem four_a3 = field->from_int(4) * e.a * e.a * e.a;
  FqElem disc = four_a3 + field->from_int(27) * e.b * e.b;
  if (disc.is_zero())
    throw error(errc::singular_curve, "j-invariant of a singular curve");
  return field->from_int(1728) * four_a3 * disc.inv();
}

std::string TorsionResultant::text() const {
  std::ostringstream os;
  os << "deg_y R = " << degree_y << "\n";
  if (separable) {
    os << "separable: yes";
    if (witness_t) os << " (squarefree specialization at t = " << witness_t->str() << ")";
  } else {
    os << "separable: no certificate found over the base field";
  }
  os << "\n";
  return os.str();
}

TorsionResultant torsion_field_resultant(const FqtCurve& e, int l) {
  using TPoly = Poly<FqElem>;
  using YPoly = Poly<TPoly>;
  using XPoly = Poly<YPoly>;
  const FqFieldPtr& field = e.field;
  Poly<TPoly> psi = division_poly(e, l);
  std::vector<YPoly> lifted;
  lifted.reserve(psi.coeffs().size());
  for (const TPoly& c : psi.coeffs()) lifted.push_back(YPoly::constant(c));
  XPoly psix(std::move(lifted));
  const TPoly t_one = TPoly::constant(field->one());
  const YPoly neg_one = YPoly::constant(TPoly::constant(field->from_int(-1)));
  // g = y^2 - x^3 - ax - b as a cubic in x over F_q[t][y]
  YPoly g0(std::vector<TPoly>{-e.b, TPoly(), t_one});
  XPoly g(std::vector<YPoly>{g0, YPoly::constant(-e.a), YPoly(), neg_one});
  // Res_x(psi, g): deg psi = (l^2-1)/2 is divisible by 4, so swapping the
  // arguments costs no sign, and reducing psi mod g (lc -1, a unit) leaves
  // lc(g)^{deg psi - deg r} Res(g, r) = (-1)^{deg r} Res(g, r).
  Poly<YPoly> r = poly_divrem_unit(psix, g, neg_one).second;
  if (r.is_zero())
    throw error(errc::unsupported, "torsion resultant degenerated to zero");
  YPoly res = det_bareiss(sylvester_matrix(g, r), YPoly::constant(t_one));
  if (r.degree() % 2 == 1) res = -res;
  TorsionResultant out;
  out.r = std::move(res);
  out.degree_y = out.r.degree();
  if (out.degree_y != l * l - 1)
    throw error(errc::unsupported, "torsion resultant degree check failed");
  for (uint64_t idx = 0; idx < field->q(); ++idx) {
    FqElem t0 = field->from_index(idx);
    std::vector<FqElem> spec;
    spec.reserve(out.r.coeffs().size());
    for (const TPoly& c : out.r.coeffs()) spec.push_back(c.eval(t0));
    Poly<FqElem> ry(std::move(spec));
    if (ry.degree() != out.degree_y) continue;
    if (poly_gcd(ry, ry.derivative()).degree() != 0) continue;
    out.separable = true;
    out.witness_t = t0;
    break;
  }
  return out;
}

std::string IgusaReport::text() const {
  std::ostringstream os;
  os << "H = <" << q % l << "> = {";
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    os << (i ? ", " : "") << subgroup[i];
  os << "} in F_" << l << "^*\n";
  if (trivial)
    os << "trivial constant-field subgroup: geometric Galois group SL_2(F_" << l
       << "), PSL_2(F_" << l << ") after the sign quotient\n";
  else
    os << "nontrivial constant-field subgroup of order " << subgroup.size() << "\n";
  return os.str();
}

IgusaReport igusa_criterion(uint64_t q, uint64_t l) {
  if (l < 3 || !is_prime(l))
    throw error(errc::bad_prime, "l must be an odd prime");
  if (q < 2) throw error(errc::bad_prime, "q must be a prime power");
  uint64_t p0 = 0;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p0 = d;
      break;
    }
  if (p0 == 0) p0 = q;
  uint64_t rest = q;
  while (rest % p0 == 0) rest /= p0;
  if (rest != 1) throw error(errc::bad_prime, "q must be a prime power");
  if (q % l == 0) throw error(errc::bad_prime, "l must not divide q");
  IgusaReport rep;
  rep.q = q;
  rep.l = l;
  const uint64_t x = q % l;
  uint64_t cur = x;
  do {
    rep.subgroup.push_back(cur);
    cur = cur * x % l;
  } while (cur != x);
  std::sort(rep.subgroup.begin(), rep.subgroup.end());
  rep.trivial = (x == 1);
  return rep;
}

}  // namespace glab
