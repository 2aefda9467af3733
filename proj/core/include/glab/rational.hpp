#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "glab/error.hpp"
#include "glab/traits.hpp"

namespace glab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <>
struct domain_traits<BigInt> {
  static constexpr bool is_field = false;
  static BigInt zero_like(const BigInt&) { return BigInt(0); }
  static BigInt one_like(const BigInt&) { return BigInt(1); }
  static bool is_zero(const BigInt& a) { return a == 0; }
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a) throw error(errc::unsupported, "inexact integer division");
    return q;
  }
  static BigInt scale_int(const BigInt& a, int64_t k) { return a * k; }
};

template <>
struct domain_traits<Rat> {
  static constexpr bool is_field = true;
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
  static Rat scale_int(const Rat& a, int64_t k) { return a * k; }
};

/// Only the operations polynomial division needs; Q has no cardinality.
template <>
struct field_traits<Rat> {
  static Rat inv(const Rat& a) { return 1 / a; }
};

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt rat_to_int(const Rat& r) { return numerator(r) / denominator(r); }

inline BigInt bigint_pow(const BigInt& b, unsigned e) {
  BigInt r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace glab
