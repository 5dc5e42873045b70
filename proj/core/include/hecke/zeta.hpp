#pragma once

#include "hecke/complex.hpp"
#include "hecke/precision.hpp"

namespace hecke {

struct ZetaPair {
    Complex value;
    Complex deriv;
};

/// Riemann zeta by Euler-Maclaurin, valid on and near the critical line
/// (|Im s| <= 1e4 at default precision). Throws PoleError at s = 1.
Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx);

/// zeta(s) and zeta'(s) from the same term-wise differentiated expansion.
ZetaPair riemann_zeta_with_deriv(const Complex& s, const PrecisionContext& ctx);

/// Hurwitz zeta(s, a) for 0 < a <= 1, continued by Euler-Maclaurin.
Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx);

/// Twisted zeta E(s; e(h/k)) = sum_j e(jh/k) k^-s zeta(s, j/k), 1 <= h <= k,
/// k >= 2. Entire for k not dividing h; the Hurwitz representation still has
/// a removable singularity at s = 1, which is rejected.
Complex lerch_twisted_zeta(const Complex& s, long h, long k, const PrecisionContext& ctx);

/// Right-hand side of the reflection identity the twisted zeta satisfies:
/// Gamma(1-s)/(2 pi)^(1-s) { e^{i pi (1-s)/2} zeta(1-s, h/k)
///                         + e^{i pi (s-1)/2} zeta(1-s, 1-h/k) }, for h < k.
Complex lerch_functional_rhs(const Complex& s, long h, long k, const PrecisionContext& ctx);

/// e(x) = exp(2 pi i x).
Complex unit_exp(const Real& x);

} // namespace hecke
