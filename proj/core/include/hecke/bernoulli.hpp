#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "hecke/real.hpp"

namespace hecke {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached, thread-safe.
const BigRat& bernoulli_rational(unsigned n);

/// B_n rounded to the given binary precision.
Real bernoulli_real(unsigned n, mpfr_prec_t prec);

BigInt factorial_int(unsigned n);
BigInt binomial_int(long n, long k);

Real to_real(const BigRat& q, mpfr_prec_t prec);
Real to_real(const BigInt& z, mpfr_prec_t prec);

} // namespace hecke
