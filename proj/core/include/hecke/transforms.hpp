#pragma once

#include <vector>

#include "hecke/hstar.hpp"

namespace hecke {

/// Evaluation route for the spectral kernel transform psi_hat.
enum class PsiHatRoute {
    Direct,   ///< real-line quadrature against Gamma(z/2+iu)Gamma(z/2-iu) u h(u) sinh(pi u)
    ViaHStar, ///< i 2^z h*(z/2) / cos(pi z/2); rejected near the cosine zeros
};

/// psi_hat(z) for Re z > 0.
Complex psi_hat(const Complex& z, const GaussianWeight& w, const PrecisionContext& ctx,
                PsiHatRoute route = PsiHatRoute::Direct, double rel_tol = 0);

/// Derivatives psi_hat^(m)(1), m = 0..m_max (<= 6), by a Cauchy circle of the
/// given radius around z = 1. The circle must stay inside Re z > 0.
std::vector<Complex> psi_hat_derivatives_at_1(int m_max, const GaussianWeight& w,
                                              const PrecisionContext& ctx,
                                              double rel_tol = 0, double radius = 0.1);

/// Holomorphic-weight transform g(k) for even k >= 12 (vertical line Re w = delta).
Complex transform_g_k(long k, const GaussianWeight& w, const PrecisionContext& ctx,
                      double delta = 0.125, double rel_tol = 0,
                      const HStarCache* cache = nullptr);

/// Oscillatory companion transforms of the discrete spectrum.
Complex transform_h0(const Real& r, const GaussianWeight& w, const PrecisionContext& ctx,
                     double delta = 0.125, double rel_tol = 0,
                     const HStarCache* cache = nullptr);
Complex transform_h1(const Real& r, const GaussianWeight& w, const PrecisionContext& ctx,
                     double delta = 0.125, double rel_tol = 0,
                     const HStarCache* cache = nullptr);

/// Divisor-sum kernels Psi^+-(x; h) on the line Re s = beta, -3/2 < beta < 1/2,
/// beta at least 1e-3 away from {0, -1/2, -1}.
Complex psi_plus(const Real& x, const GaussianWeight& w, const Real& beta,
                 const PrecisionContext& ctx, double rel_tol = 0,
                 const HStarCache* cache = nullptr);
Complex psi_minus(const Real& x, const GaussianWeight& w, const Real& beta,
                  const PrecisionContext& ctx, double rel_tol = 0,
                  const HStarCache* cache = nullptr);

/// Mellin tail smoother U(x) = (2 pi i lambda)^-1 int (4 pi^2 x / K^2)^w
/// u(w) Gamma(w/lambda) dw on Re w = abscissa (default -1/lambda), with
/// lambda = lambda_const * log K and caller-supplied polynomial u.
Complex u_nu_transform(const Real& x, const Real& K, const std::vector<Real>& poly,
                       double lambda_const, const PrecisionContext& ctx,
                       double abscissa = 0.0, double rel_tol = 0);

/// Trace-formula kernel psi(x) = pi^-2 int_(alpha) (x/2)^{-2s} h*(s)/cos(pi s) ds,
/// -3/2 < alpha < 3/2, alpha at least 1e-3 away from {-1, -1/2, 0, 1/2}.
Complex psi_kernel(const Real& x, const GaussianWeight& w, const Real& alpha,
                   const PrecisionContext& ctx, double rel_tol = 0,
                   const HStarCache* cache = nullptr);

/// Height at which the h*-weighted line integrands have provably decayed
/// below tol (suppression scale of the weight plus slack).
double hstar_line_cap(const GaussianWeight& w, double tol, double extra = 0.0);

} // namespace hecke
