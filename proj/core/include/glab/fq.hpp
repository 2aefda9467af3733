#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "glab/error.hpp"
#include "glab/traits.hpp"

namespace glab {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// Element of F_{p^m} in the polynomial basis 1, w, ..., w^{m-1} over F_p,
/// where w is the class of the variable modulo the field's defining modulus.
class FqElem {
 public:
  FqElem() = default;  // detached element, usable only as a placeholder

  const FqFieldPtr& field() const { return f_; }
  const std::vector<int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
  FqElem& operator-=(const FqElem& b) { return *this = *this - b; }
  FqElem& operator*=(const FqElem& b) { return *this = *this * b; }

  FqElem inv() const;
  FqElem pow(uint64_t e) const;

  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  /// Deterministic ordering by index(); used for canonical output orderings,
  /// not for any algebraic meaning.
  friend bool operator<(const FqElem& a, const FqElem& b);

  /// Integer encoding sum c_i p^i; inverse of FqField::from_index.
  uint64_t index() const;

  std::string str() const;  // canonical text, e.g. "4", "w + 4", "2*w^2 + 1"

 private:
  friend class FqField;
  FqElem(FqFieldPtr f, std::vector<int64_t> c) : f_(std::move(f)), c_(std::move(c)) {}

  FqFieldPtr f_;
  std::vector<int64_t> c_;
};

/// F_{p^m} = F_p[w]/(modulus).  Immutable; create through make().
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  /// Default modulus: first monic irreducible of degree m in the ordering
  /// induced by the coefficient encoding c_0 + c_1 p + ... (constant term
  /// fastest).  m = 1 uses the modulus w.
  static FqFieldPtr make(int64_t p, int m = 1);
  /// Explicit monic modulus of degree m (coefficients c_0..c_m, c_m = 1),
  /// verified irreducible over F_p.
  static FqFieldPtr make(int64_t p, std::vector<int64_t> modulus);

  int64_t p() const { return p_; }
  int m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<int64_t>& modulus() const { return mod_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem w() const;  // class of the variable; equals from_int for m = 1 only via modulus root
  FqElem from_int(int64_t v) const;
  FqElem from_coeffs(std::vector<int64_t> c) const;  // length <= m, reduced mod p
  FqElem from_index(uint64_t idx) const;             // base-p digits, c_0 first

  /// Smallest multiplicative generator in element-index order; cached.
  FqElem generator() const;

  FqElem frobenius(const FqElem& a) const { return a.pow(static_cast<uint64_t>(p_)); }

  /// All q elements in index order (0, 1, ..., p-1, w, w+1, ...).
  std::vector<FqElem> elements() const;

  bool same(const FqField& o) const {
    return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
  }

  std::string str() const;  // "F_7", "F_49 = F_7[w]/(w^2 + 6*w + 3)"

 private:
  FqField(int64_t p, int m, std::vector<int64_t> mod);

  int64_t p_;
  int m_;
  uint64_t q_;
  std::vector<int64_t> mod_;  // monic, length m_+1

  mutable std::once_flag gen_once_;
  mutable std::optional<FqElem> gen_;
};

inline bool same_field(const FqElem& a, const FqElem& b) {
  return a.field() && b.field() && a.field()->same(*b.field());
}

template <>
struct domain_traits<FqElem> {
  static constexpr bool is_field = true;
  static FqElem zero_like(const FqElem& s) { return s.field()->zero(); }
  static FqElem one_like(const FqElem& s) { return s.field()->one(); }
  static bool is_zero(const FqElem& a) { return a.is_zero(); }
  static FqElem exact_div(const FqElem& a, const FqElem& b) { return a * b.inv(); }
  static FqElem scale_int(const FqElem& a, int64_t k) {
    return a * a.field()->from_int(k);
  }
};

template <>
struct field_traits<FqElem> {
  static FqElem inv(const FqElem& a) { return a.inv(); }
  static int64_t characteristic(const FqElem& s) { return s.field()->p(); }
  static uint64_t cardinality(const FqElem& s) { return s.field()->q(); }
  /// a ↦ the unique b with b^p = a (inverse Frobenius: a^{q/p}).
  static FqElem pth_root(const FqElem& a) {
    uint64_t e = a.field()->q() / static_cast<uint64_t>(a.field()->p());
    return a.pow(e);
  }
  template <class Rng>
  static FqElem random(const FqElem& sample, Rng& rng) {
    const auto& F = *sample.field();
    std::vector<int64_t> c(static_cast<std::size_t>(F.m()));
    for (auto& x : c) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(F.p()));
    return F.from_coeffs(std::move(c));
  }
  static uint64_t index_of(const FqElem& a) { return a.index(); }
  static FqElem element(const FqElem& sample, uint64_t idx) {
    return sample.field()->from_index(idx);
  }
};

}  // namespace glab
