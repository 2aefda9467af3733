#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace glab {

int64_t mod_pow(int64_t base, uint64_t exp, int64_t m);
int64_t mod_inv(int64_t a, int64_t m);  // m prime

bool is_prime(uint64_t n);

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);  // ascending

int mobius(uint64_t n);
uint64_t euler_phi(uint64_t n);

/// p^e with overflow check; throws errc::unsupported on overflow.
uint64_t checked_pow(uint64_t p, unsigned e);

}  // namespace glab
