#include "glab/numutil.hpp"

#include <algorithm>

#include "glab/error.hpp"

namespace glab {

int64_t mod_pow(int64_t base, uint64_t exp, int64_t m) {
  base %= m;
  if (base < 0) base += m;
  __int128 acc = 1, b = base;
  while (exp) {
    if (exp & 1) acc = acc * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int64_t>(acc);
}

int64_t mod_inv(int64_t a, int64_t m) {
  a %= m;
  if (a < 0) a += m;
  if (a == 0) throw error(errc::division_by_zero, "inverse of 0 mod " + std::to_string(m));
  return mod_pow(a, static_cast<uint64_t>(m - 2), m);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

uint64_t checked_pow(uint64_t p, unsigned e) {
  uint64_t r = 1;
  while (e--) {
    if (p != 0 && r > UINT64_MAX / 2 / p)
      throw error(errc::unsupported, "power overflows 64-bit range");
    r *= p;
  }
  return r;
}

}  // namespace glab
