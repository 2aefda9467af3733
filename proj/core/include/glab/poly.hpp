#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glab/error.hpp"
#include "glab/traits.hpp"

namespace glab {

/// Dense univariate polynomial over an exact coefficient domain T.
/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
/// deg 0 is represented as -1.  Coefficient index = exponent.
template <class T>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Poly zero() { return Poly(); }

  static Poly constant(T v) {
    Poly r;
    if (!domain_traits<T>::is_zero(v)) r.c_.push_back(std::move(v));
    return r;
  }

  /// coef * x^k
  static Poly monomial(T coef, int k) {
    Poly r;
    if (domain_traits<T>::is_zero(coef)) return r;
    r.c_.resize(static_cast<std::size_t>(k), domain_traits<T>::zero_like(coef));
    r.c_.push_back(std::move(coef));
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  const T& lc() const {
    if (c_.empty()) throw error(errc::zero_polynomial, "leading coefficient of 0");
    return c_.back();
  }

  const T& operator[](std::size_t i) const { return c_[i]; }

  T coeff_or(std::size_t i, const T& zero) const {
    return i < c_.size() ? c_[i] : zero;
  }

  bool is_one() const {
    return c_.size() == 1 && c_[0] == domain_traits<T>::one_like(c_[0]);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const T zero = domain_traits<T>::zero_like(a.c_[0]);
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), zero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<T> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const T zero = domain_traits<T>::zero_like(a.c_[0]);
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const T& k) const {
    if (domain_traits<T>::is_zero(k)) return Poly();
    std::vector<T> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * k);
    return Poly(std::move(c));
  }

  /// * x^k
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> c(c_.size() + static_cast<std::size_t>(k),
                     domain_traits<T>::zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(c));
  }

  Poly derivative() const {
    std::vector<T> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(domain_traits<T>::scale_int(c_[i], static_cast<int64_t>(i)));
    return Poly(std::move(c));
  }

  T eval(const T& x) const {
    if (is_zero()) return domain_traits<T>::zero_like(x);
    T acc = c_.back();
    for (std::size_t i = c_.size(); i-- > 1;) acc = acc * x + c_[i - 1];
    return acc;
  }

  /// Horner evaluation in any target domain; lift maps a coefficient into it.
  template <class U, class F>
  U eval_mapped(const U& x, F lift) const {
    U acc = domain_traits<U>::zero_like(x);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

  template <class F>
  auto map(F fn) const -> Poly<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    std::vector<U> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(fn(x));
    return Poly<U>(std::move(c));
  }

  Poly pow(uint64_t e) const {
    if (e == 0) {
      if (is_zero()) throw error(errc::zero_polynomial, "0^0");
      return Poly::constant(domain_traits<T>::one_like(c_[0]));
    }
    Poly r, b = *this;
    bool started = false;
    while (e) {
      if (e & 1) r = started ? r * b : (started = true, b);
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && domain_traits<T>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Exact division in D[x] for an integral domain D; throws if not divisible.
template <class T>
Poly<T> poly_exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by 0");
  if (a.is_zero()) return Poly<T>();
  if (a.degree() < b.degree())
    throw error(errc::unsupported, "inexact polynomial division");
  const T zero = domain_traits<T>::zero_like(a.lc());
  std::vector<T> rem(a.coeffs());
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, zero);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const std::size_t top = k + static_cast<std::size_t>(b.degree());
    if (domain_traits<T>::is_zero(rem[top])) continue;
    T q = domain_traits<T>::exact_div(rem[top], b.lc());
    for (int i = 0; i <= b.degree(); ++i)
      rem[k + static_cast<std::size_t>(i)] =
          rem[k + static_cast<std::size_t>(i)] - q * b[static_cast<std::size_t>(i)];
    quo[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (!domain_traits<T>::is_zero(r))
      throw error(errc::unsupported, "inexact polynomial division");
  return Poly<T>(std::move(quo));
}

/// domain_traits for nested polynomials: Poly<T> as a coefficient domain.
template <class T>
struct domain_traits<Poly<T>> {
  static constexpr bool is_field = false;
  static Poly<T> zero_like(const Poly<T>&) { return Poly<T>(); }
  static Poly<T> one_like(const Poly<T>& s) {
    if (s.is_zero())
      throw error(errc::zero_polynomial, "one_like needs a nonzero sample");
    return Poly<T>::constant(domain_traits<T>::one_like(s.lc()));
  }
  static bool is_zero(const Poly<T>& a) { return a.is_zero(); }
  static Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    return poly_exact_div(a, b);
  }
  static Poly<T> scale_int(const Poly<T>& a, int64_t k) {
    return a.map([k](const T& c) { return domain_traits<T>::scale_int(c, k); });
  }
};

/// Deterministic ordering: degree first, then coefficients from the constant
/// term upward using T's ordering.  Used to canonicalize output lists.
template <class T>
bool poly_order_less(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace glab
