#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "glab/error.hpp"
#include "glab/numutil.hpp"
#include "glab/poly.hpp"
#include "glab/traits.hpp"

namespace glab {

// ---------------------------------------------------------------------------
// Generic algorithms over a field element type E (field_traits<E> required).
// ---------------------------------------------------------------------------

template <class E>
std::pair<Poly<E>, Poly<E>> poly_divrem(const Poly<E>& a, const Poly<E>& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by 0");
  if (a.degree() < b.degree()) return {Poly<E>(), a};
  const E zero = domain_traits<E>::zero_like(b.lc());
  const E lcinv = field_traits<E>::inv(b.lc());
  std::vector<E> rem(a.coeffs());
  std::vector<E> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, zero);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const std::size_t top = k + static_cast<std::size_t>(b.degree());
    if (domain_traits<E>::is_zero(rem[top])) continue;
    E q = rem[top] * lcinv;
    for (int i = 0; i <= b.degree(); ++i)
      rem[k + static_cast<std::size_t>(i)] =
          rem[k + static_cast<std::size_t>(i)] - q * b[static_cast<std::size_t>(i)];
    quo[k] = std::move(q);
  }
  return {Poly<E>(std::move(quo)), Poly<E>(std::move(rem))};
}

template <class E>
Poly<E> poly_mod(const Poly<E>& a, const Poly<E>& b) {
  return poly_divrem(a, b).second;
}

template <class E>
Poly<E> monic(const Poly<E>& f) {
  if (f.is_zero()) return f;
  return f.scaled(field_traits<E>::inv(f.lc()));
}

template <class E>
Poly<E> poly_gcd(Poly<E> a, Poly<E> b) {
  while (!b.is_zero()) {
    Poly<E> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class E>
Poly<E> poly_mulmod(const Poly<E>& a, const Poly<E>& b, const Poly<E>& m) {
  return poly_mod(a * b, m);
}

template <class E>
Poly<E> poly_powmod(Poly<E> base, uint64_t e, const Poly<E>& m) {
  Poly<E> r = Poly<E>::constant(domain_traits<E>::one_like(m.lc()));
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

template <class E>
Poly<E> poly_x(const E& sample_one) {
  return Poly<E>::monomial(domain_traits<E>::one_like(sample_one), 1);
}

/// Rabin test: f irreducible over F_q iff x^{q^d} = x (mod f) and
/// gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d.
template <class E>
bool is_irreducible(const Poly<E>& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  const int d = f.degree();
  if (d == 1) return true;
  const uint64_t q = field_traits<E>::cardinality(f.lc());
  const Poly<E> fm = monic(f);
  const Poly<E> x = poly_x(f.lc());
  std::vector<Poly<E>> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = poly_mod(x, fm);
  for (int k = 1; k <= d; ++k) frob[static_cast<std::size_t>(k)] =
      poly_powmod(frob[static_cast<std::size_t>(k - 1)], q, fm);
  if (frob[static_cast<std::size_t>(d)] != poly_mod(x, fm)) return false;
  for (auto [r, e] : factorize(static_cast<uint64_t>(d))) {
    const int k = d / static_cast<int>(r);
    Poly<E> g = poly_gcd(frob[static_cast<std::size_t>(k)] - x, fm);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// Coefficient-wise p-th root of f(x) = g(x^p); requires all exponents with
/// nonzero coefficient divisible by p.
template <class E>
Poly<E> poly_pth_root(const Poly<E>& f) {
  const int64_t p = field_traits<E>::characteristic(f.lc());
  std::vector<E> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    c.push_back(field_traits<E>::pth_root(f[static_cast<std::size_t>(i)]));
  for (int i = 0; i <= f.degree(); ++i)
    if (i % p != 0 && !domain_traits<E>::is_zero(f[static_cast<std::size_t>(i)]))
      throw error(errc::unsupported, "polynomial is not a p-th power");
  return Poly<E>(std::move(c));
}

/// Squarefree decomposition in characteristic p (Yun's algorithm with the
/// p-th power descent).  Returns monic pairwise-coprime squarefree g_i with
/// f = unit * prod g_i^{m_i}, m_i strictly increasing.
template <class E>
std::vector<std::pair<Poly<E>, int>> squarefree_decomposition(const Poly<E>& f0) {
  if (f0.is_zero()) throw error(errc::zero_polynomial, "squarefree decomposition of 0");
  std::vector<std::pair<Poly<E>, int>> out;
  const int64_t p = field_traits<E>::characteristic(f0.lc());
  const Poly<E> f = monic(f0);
  if (f.degree() == 0) return out;
  Poly<E> fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(poly_pth_root(f)))
      out.emplace_back(std::move(g), m * static_cast<int>(p));
    return out;
  }
  Poly<E> c = poly_gcd(f, fp);
  Poly<E> w = poly_exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly<E> y = poly_gcd(w, c);
    Poly<E> z = poly_exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    ++i;
    c = poly_exact_div(c, y);
    w = std::move(y);
  }
  if (c.degree() > 0)
    for (auto& [g, m] : squarefree_decomposition(poly_pth_root(c)))
      out.emplace_back(std::move(g), m * static_cast<int>(p));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

template <class E>
Poly<E> squarefree_part(const Poly<E>& f) {
  Poly<E> r = Poly<E>::constant(domain_traits<E>::one_like(f.lc()));
  for (const auto& [g, m] : squarefree_decomposition(f)) r = r * g;
  return r;
}

/// Distinct-degree factorization of a monic squarefree f: returns pairs
/// (d, product of all irreducible factors of degree d), d ascending.
template <class E>
std::vector<std::pair<int, Poly<E>>> distinct_degree(const Poly<E>& f0) {
  std::vector<std::pair<int, Poly<E>>> out;
  Poly<E> f = monic(f0);
  const uint64_t q = field_traits<E>::cardinality(f.lc());
  Poly<E> x = poly_x(f.lc());
  Poly<E> h = poly_mod(x, f);
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = poly_powmod(h, q, f);
    Poly<E> g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = poly_exact_div(f, g);
      h = poly_mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  return out;
}

template <class E, class Rng>
Poly<E> random_poly_below(const E& sample, int deg_bound, Rng& rng) {
  std::vector<E> c;
  for (int i = 0; i < deg_bound; ++i)
    c.push_back(field_traits<E>::random(sample, rng));
  return Poly<E>(std::move(c));
}

/// Cantor–Zassenhaus split of a monic product of irreducibles all of degree d.
template <class E, class Rng>
void equal_degree(const Poly<E>& f, int d, Rng& rng, std::vector<Poly<E>>& out) {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const uint64_t q = field_traits<E>::cardinality(f.lc());
  const int64_t p = field_traits<E>::characteristic(f.lc());
  const Poly<E> one = Poly<E>::constant(domain_traits<E>::one_like(f.lc()));
  for (;;) {
    Poly<E> u = random_poly_below(f.lc(), f.degree(), rng);
    if (u.is_zero()) continue;
    Poly<E> g = poly_gcd(u, f);
    if (g.degree() == 0) {
      if (p == 2) {
        // trace map over F_2: sum of u^{2^i}, i < log2(q^d)
        uint64_t qd = checked_pow(q, static_cast<unsigned>(d));
        Poly<E> t = poly_mod(u, f), s = t;
        for (uint64_t c = 2; c < qd; c *= 2) {
          s = poly_mulmod(s, s, f);
          t = t + s;
        }
        g = poly_gcd(t, f);
      } else {
        uint64_t e = (checked_pow(q, static_cast<unsigned>(d)) - 1) / 2;
        Poly<E> s = poly_powmod(u, e, f);
        g = poly_gcd(s - one, f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(poly_exact_div(f, g), d, rng, out);
      return;
    }
  }
}

template <class E>
struct FactorList {
  E unit;
  std::vector<std::pair<Poly<E>, int>> factors;  // monic irreducible, multiplicity
};

template <class E>
uint64_t poly_content_seed(const Poly<E>& f) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(field_traits<E>::cardinality(f.lc()));
  for (int i = 0; i <= f.degree(); ++i)
    mix(field_traits<E>::index_of(f[static_cast<std::size_t>(i)]) + 0x9e3779b97f4a7c15ULL);
  return h;
}

/// Complete factorization over F_q.  Deterministic: the internal randomness is
/// seeded from the input polynomial (xor the caller's seed).
template <class E>
FactorList<E> poly_factor(const Poly<E>& f, uint64_t seed = 0) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "factor(0)");
  FactorList<E> out{f.lc(), {}};
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(poly_content_seed(f) ^ (seed * 0x9e3779b97f4a7c15ULL));
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& [d, prod] : distinct_degree(g)) {
      std::vector<Poly<E>> irr;
      equal_degree(prod, d, rng, irr);
      for (auto& h : irr) out.factors.emplace_back(std::move(h), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_order_less(a.first, b.first);
    return a.second < b.second;
  });
  Poly<E> check = Poly<E>::constant(out.unit);
  for (const auto& [g, m] : out.factors)
    check = check * g.pow(static_cast<uint64_t>(m));
  if (check != f) throw error(errc::unsupported, "factorization self-check failed");
  return out;
}

/// k-th monic polynomial of degree d in enumeration order (constant
/// coefficient varies fastest through the field's element indexing).
template <class E>
Poly<E> monic_poly_by_index(const E& sample, int d, uint64_t k) {
  const uint64_t q = field_traits<E>::cardinality(sample);
  std::vector<E> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) {
    c.push_back(field_traits<E>::element(sample, k % q));
    k /= q;
  }
  if (k != 0) throw error(errc::enumeration_bound_exceeded, "monic index out of range");
  c.push_back(domain_traits<E>::one_like(sample));
  return Poly<E>(std::move(c));
}

// ---------------------------------------------------------------------------
// Field extension K[z]/(P) for a field element type E, P monic irreducible.
// Used for residue fields of places and point counts over F_{q^i}.
// ---------------------------------------------------------------------------

template <class E>
class ExtField;
template <class E>
using ExtFieldPtr = std::shared_ptr<const ExtField<E>>;

template <class E>
class ExtElem {
 public:
  ExtElem() = default;

  const ExtFieldPtr<E>& field() const { return f_; }
  const Poly<E>& rep() const { return r_; }

  bool is_zero() const { return r_.is_zero(); }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    return ExtElem(a.f_, a.r_ + b.r_);
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    return ExtElem(a.f_, a.r_ - b.r_);
  }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    return ExtElem(a.f_, poly_mod(a.r_ * b.r_, a.f_->modulus()));
  }
  ExtElem operator-() const { return ExtElem(f_, -r_); }

  ExtElem pow(uint64_t e) const;
  ExtElem inv() const;

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.r_ == b.r_ && a.f_ && b.f_ && a.f_->same(*b.f_);
  }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }
  friend bool operator<(const ExtElem& a, const ExtElem& b) {
    return poly_order_less(a.r_, b.r_);
  }

  uint64_t index() const {
    const uint64_t qb = field_traits<E>::cardinality(one_coeff());
    uint64_t v = 0;
    for (int i = r_.degree(); i >= 0; --i)
      v = v * qb + field_traits<E>::index_of(r_[static_cast<std::size_t>(i)]);
    return v;
  }

 private:
  friend class ExtField<E>;
  ExtElem(ExtFieldPtr<E> f, Poly<E> r) : f_(std::move(f)), r_(std::move(r)) {}
  void check(const ExtElem& b) const {
    if (!f_ || !b.f_ || !f_->same(*b.f_))
      throw error(errc::mixed_fields, "extension-field elements from different fields");
  }
  E one_coeff() const { return domain_traits<E>::one_like(f_->modulus().lc()); }

  ExtFieldPtr<E> f_;
  Poly<E> r_;
};

template <class E>
class ExtField : public std::enable_shared_from_this<ExtField<E>> {
 public:
  static ExtFieldPtr<E> make(Poly<E> modulus, bool verify = true) {
    if (modulus.is_zero() || modulus.degree() < 1)
      throw error(errc::bad_prime, "extension modulus must have degree >= 1");
    modulus = monic(modulus);
    if (verify && !is_irreducible(modulus))
      throw error(errc::not_irreducible, "extension modulus is reducible");
    return ExtFieldPtr<E>(new ExtField(std::move(modulus)));
  }

  int degree() const { return mod_.degree(); }
  const Poly<E>& modulus() const { return mod_; }
  int64_t characteristic() const { return field_traits<E>::characteristic(mod_.lc()); }
  uint64_t cardinality() const {
    return checked_pow(field_traits<E>::cardinality(mod_.lc()),
                       static_cast<unsigned>(degree()));
  }

  ExtElem<E> zero() const { return ExtElem<E>(this->shared_from_this(), Poly<E>()); }
  ExtElem<E> one() const {
    return from_poly(Poly<E>::constant(domain_traits<E>::one_like(mod_.lc())));
  }
  /// Class of the variable z (a root of the modulus).
  ExtElem<E> root() const { return from_poly(poly_x(mod_.lc())); }
  ExtElem<E> embed(const E& c) const { return from_poly(Poly<E>::constant(c)); }
  ExtElem<E> from_poly(Poly<E> r) const {
    return ExtElem<E>(this->shared_from_this(), poly_mod(r, mod_));
  }

  bool same(const ExtField& o) const { return mod_ == o.mod_; }

 private:
  explicit ExtField(Poly<E> m) : mod_(std::move(m)) {}
  Poly<E> mod_;
};

template <class E>
ExtElem<E> ExtElem<E>::pow(uint64_t e) const {
  ExtElem r = f_->one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <class E>
ExtElem<E> ExtElem<E>::inv() const {
  if (is_zero()) throw error(errc::division_by_zero, "inverse of 0");
  return pow(f_->cardinality() - 2);
}

template <class E>
struct domain_traits<ExtElem<E>> {
  static constexpr bool is_field = true;
  static ExtElem<E> zero_like(const ExtElem<E>& s) { return s.field()->zero(); }
  static ExtElem<E> one_like(const ExtElem<E>& s) { return s.field()->one(); }
  static bool is_zero(const ExtElem<E>& a) { return a.is_zero(); }
  static ExtElem<E> exact_div(const ExtElem<E>& a, const ExtElem<E>& b) {
    return a * b.inv();
  }
  static ExtElem<E> scale_int(const ExtElem<E>& a, int64_t k) {
    return a * a.field()->embed(
                   domain_traits<E>::scale_int(domain_traits<E>::one_like(a.field()->modulus().lc()), k));
  }
};

template <class E>
struct field_traits<ExtElem<E>> {
  static ExtElem<E> inv(const ExtElem<E>& a) { return a.inv(); }
  static int64_t characteristic(const ExtElem<E>& s) {
    return s.field()->characteristic();
  }
  static uint64_t cardinality(const ExtElem<E>& s) { return s.field()->cardinality(); }
  static ExtElem<E> pth_root(const ExtElem<E>& a) {
    return a.pow(a.field()->cardinality() /
                 static_cast<uint64_t>(a.field()->characteristic()));
  }
  template <class Rng>
  static ExtElem<E> random(const ExtElem<E>& sample, Rng& rng) {
    const auto& F = *sample.field();
    const E base_one = domain_traits<E>::one_like(F.modulus().lc());
    std::vector<E> c;
    for (int i = 0; i < F.degree(); ++i)
      c.push_back(field_traits<E>::random(base_one, rng));
    return F.from_poly(Poly<E>(std::move(c)));
  }
  static uint64_t index_of(const ExtElem<E>& a) { return a.index(); }
  static ExtElem<E> element(const ExtElem<E>& sample, uint64_t idx) {
    const auto& F = *sample.field();
    const E base_one = domain_traits<E>::one_like(F.modulus().lc());
    const uint64_t qb = field_traits<E>::cardinality(base_one);
    std::vector<E> c;
    for (int i = 0; i < F.degree(); ++i) {
      c.push_back(field_traits<E>::element(base_one, idx % qb));
      idx /= qb;
    }
    return F.from_poly(Poly<E>(std::move(c)));
  }
};

}  // namespace glab
