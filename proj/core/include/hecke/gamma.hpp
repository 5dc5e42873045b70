#pragma once

#include "hecke/complex.hpp"
#include "hecke/precision.hpp"

namespace hecke {

/// Principal-branch log Gamma. Recurses upward until the Stirling series
/// certifies the requested tolerance, then sums it with a Bernoulli tail
/// bound. Throws PoleError at non-positive integers.
///
/// acc_digits (0 = ctx.digits) caps the accuracy actually needed; quadrature
/// inner loops pass their own tolerance so the recursion depth and tail
/// length scale with what the surrounding integral can use.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx, int acc_digits = 0);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma_fn(const Complex& z, const PrecisionContext& ctx, int acc_digits = 0);

/// Gamma(a)/Gamma(b) via log-gamma differences. Zeros of 1/Gamma at
/// non-positive integer b give an exact 0; poles of the numerator throw.
Complex gamma_quotient(const Complex& a, const Complex& b, const PrecisionContext& ctx,
                       int acc_digits = 0);

/// Gamma(s+iu)/Gamma(1-s+iu) for real u.
Complex gamma_ratio(const Complex& s, const Real& u, const PrecisionContext& ctx);

/// Two-term Stirling approximation of Gamma(sigma+it) for t >= 10:
/// modulus sqrt(2 pi) t^(sigma-1/2) e^(-pi t/2), phase
/// t log t - t + pi(sigma-1/2)/2 plus the first 1/t correction.
/// Relative deviation from the exact value is O(t^-2).
struct ModulusPhase {
    Real modulus;
    Real phase;
};
ModulusPhase stirling_phase(const Real& sigma, const Real& t, const PrecisionContext& ctx);

/// True if z is within tol of a non-positive integer.
bool near_nonpositive_integer(const Complex& z, const Real& tol);

} // namespace hecke
