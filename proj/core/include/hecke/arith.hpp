#pragma once

#include <cstdint>
#include <vector>

#include "hecke/complex.hpp"
#include "hecke/precision.hpp"

namespace hecke {

/// Primes <= n by Eratosthenes sieve.
std::vector<long> primes_upto(long n);

/// Prime factorization (p, e) pairs by trial division.
std::vector<std::pair<long, int>> factorize(long n);

/// d(n): number of divisors.
long divisor_count(long n);

/// All divisors of n, ascending.
std::vector<long> divisors_of(long n);

/// sigma_alpha(n) = sum_{d|n} d^alpha for complex alpha.
Complex sigma_power(long n, const Complex& alpha, const PrecisionContext& ctx);

/// Modular inverse of a mod m (m >= 1, gcd(a, m) = 1).
long mod_inverse(long a, long m);

/// Kloosterman sum S(m, n; ell) = sum_{a mod ell, (a,ell)=1} e((m a + n a^-1)/ell).
/// The a <-> -a pairing makes the sum real; the imaginary part is exactly 0.
Complex kloosterman_sum(long m, long n, long ell, const PrecisionContext& ctx);

} // namespace hecke
