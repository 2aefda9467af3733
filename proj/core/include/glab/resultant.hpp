#pragma once

#include <utility>
#include <vector>

#include "glab/error.hpp"
#include "glab/poly.hpp"
#include "glab/traits.hpp"

namespace glab {

/// Sylvester matrix of f (degree m) and g (degree n): (m+n) x (m+n).
/// Rows 0..n-1 carry f's coefficients (leading first), shifted right by the
/// row number; rows n..n+m-1 carry g's the same way.  det = Res(f, g).
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() || g.is_zero())
    throw error(errc::zero_polynomial, "sylvester matrix of a zero polynomial");
  int m = f.degree(), n = g.degree();
  int size = m + n;
  T zero = domain_traits<T>::zero_like(f.lc());
  std::vector<std::vector<T>> a(size, std::vector<T>(size, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g[static_cast<std::size_t>(n - k)];
  return a;
}

/// Fraction-free Bareiss determinant over an integral domain.  Every division
/// performed is exact in the domain; `one` supplies the multiplicative
/// identity (needed because entries may all be zero-valued samples).
template <class T>
T det_bareiss(std::vector<std::vector<T>> a, const T& one) {
  std::size_t n = a.size();
  if (n == 0) return one;
  for (auto& row : a)
    if (row.size() != n) throw error(errc::unsupported, "determinant of a non-square matrix");
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (domain_traits<T>::is_zero(a[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && domain_traits<T>::is_zero(a[pivot][k])) ++pivot;
      if (pivot == n) return domain_traits<T>::zero_like(one);
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = domain_traits<T>::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  if (negate) det = domain_traits<T>::scale_int(det, -1);
  return det;
}

/// Cofactor-expansion determinant; exponential, kept as an oracle for the
/// Bareiss routine on small matrices.
template <class T>
T det_cofactor(const std::vector<std::vector<T>>& a, const T& one) {
  std::size_t n = a.size();
  if (n == 0) return one;
  if (n == 1) return a[0][0];
  T zero = domain_traits<T>::zero_like(one);
  T acc = zero;
  for (std::size_t c = 0; c < n; ++c) {
    if (domain_traits<T>::is_zero(a[0][c])) continue;
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    T term = a[0][c] * det_cofactor(minor, one);
    if (c % 2) term = domain_traits<T>::scale_int(term, -1);
    acc = acc + term;
  }
  return acc;
}

/// Res(f, g) over any integral domain via Sylvester + Bareiss.
template <class T>
T resultant(const Poly<T>& f, const Poly<T>& g) {
  T one = domain_traits<T>::one_like(f.is_zero() ? g.lc() : f.lc());
  if (f.is_zero() || g.is_zero())
    throw error(errc::zero_polynomial, "resultant of a zero polynomial");
  return det_bareiss(sylvester_matrix(f, g), one);
}

/// Division with remainder requiring only that lc(b) be a unit; `lc_inv`
/// supplies its inverse.  Works over non-field coefficient domains.
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divrem_unit(const Poly<T>& a, const Poly<T>& b,
                                             const T& lc_inv) {
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  Poly<T> q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    T c = r.lc() * lc_inv;
    int shift = r.degree() - b.degree();
    Poly<T> term = Poly<T>::monomial(c, shift);
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

/// Res(f, g) for field coefficients via the Euclidean remainder sequence.
template <class E>
E resultant_euclid(Poly<E> f, Poly<E> g) {
  if (f.is_zero() || g.is_zero())
    throw error(errc::zero_polynomial, "resultant of a zero polynomial");
  E one = domain_traits<E>::one_like(f.lc());
  E acc = one;
  bool negate = false;
  while (g.degree() > 0) {
    Poly<E> r = poly_divrem_unit(f, g, field_traits<E>::inv(g.lc())).second;
    if (r.is_zero()) return domain_traits<E>::zero_like(one);
    if ((f.degree() % 2) && (g.degree() % 2)) negate = !negate;
    E lg = g.lc();
    for (int k = 0; k < f.degree() - r.degree(); ++k) acc = acc * lg;
    f = g;
    g = r;
  }
  // Res(f, c) = c^{deg f}
  E c = g[0];
  for (int k = 0; k < f.degree(); ++k) acc = acc * c;
  return negate ? domain_traits<E>::scale_int(acc, -1) : acc;
}

}  // namespace glab
