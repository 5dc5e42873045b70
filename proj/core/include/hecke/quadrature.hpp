#pragma once

#include <functional>
#include <vector>

#include "hecke/complex.hpp"
#include "hecke/precision.hpp"

namespace hecke {

/// Gauss-Legendre rule on [-1, 1] at the given precision. Cached, thread-safe.
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussRule& gauss_legendre(int n, mpfr_prec_t prec);

/// Clenshaw-Curtis rule with n+1 nodes cos(pi j/n), j = 0..n (n even).
/// Nested: the even-indexed nodes of order n are the order-n/2 rule, which
/// gives an embedded error estimate with no extra evaluations.
const GaussRule& clenshaw_curtis(int n, mpfr_prec_t prec);

struct QuadratureResult {
    Complex value;
    Real abs_integral;  ///< integral of |f|, the natural scale of the problem
    Real error;         ///< accumulated local error estimate
    long evaluations = 0;
};

using ComplexIntegrand = std::function<Complex(const Real&)>;

struct AdaptiveOptions {
    double rel_tol = 0.0;       ///< 0: use ctx.rel_tol
    double abs_floor = 0.0;     ///< extra absolute tolerance floor (vs |value| scale)
    int rule_order = 16;
    long max_evaluations = 4000000;
    int max_depth = 48;
    bool throw_on_failure = true;
};

/// Globally adaptive panel integration of a complex-valued analytic integrand
/// over [a, b]. Local acceptance compares one panel against its two halves;
/// tolerances split per level. initial_breaks, when given, seed the panel
/// layout (callers use them to resolve known oscillation scales).
QuadratureResult integrate_adaptive(const ComplexIntegrand& f, const Real& a, const Real& b,
                                    const PrecisionContext& ctx, AdaptiveOptions opt = {},
                                    const std::vector<Real>* initial_breaks = nullptr);

/// Taylor/Laurent coefficients of f on the circle |w - center| = radius by
/// trapezoid sums, with node doubling until the requested coefficients
/// stabilize. pos[k] is the Taylor coefficient of (w-center)^k for
/// k = 0..kmax_pos; neg[k-1] is the Laurent coefficient of (w-center)^{-k}
/// for k = 1..kmax_neg.
struct CircleCoefficients {
    std::vector<Complex> pos;
    std::vector<Complex> neg;
    Real mean_abs; ///< average |f| on the circle (scale for zero tests)
};
CircleCoefficients circle_coefficients(const std::function<Complex(const Complex&)>& f,
                                       const Complex& center, const Real& radius,
                                       int kmax_pos, int kmax_neg,
                                       const PrecisionContext& ctx,
                                       double rel_tol = 0.0);

/// Derivatives f^(m)(center), m = 0..m_max, from circle_coefficients.
std::vector<Complex> cauchy_derivatives(const std::function<Complex(const Complex&)>& f,
                                        const Complex& center, const Real& radius,
                                        int m_max, const PrecisionContext& ctx,
                                        double rel_tol = 0.0);

/// Breakpoints for a symmetric interval [-h, h]: unit-ish panels of width
/// `core_width` out to +-core, then geometrically growing panels.
std::vector<Real> symmetric_breaks(const Real& h, double core, double core_width,
                                   mpfr_prec_t prec);

} // namespace hecke
