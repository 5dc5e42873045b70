#pragma once

#include "hecke/complex.hpp"
#include "hecke/precision.hpp"

namespace hecke {

/// Polynomial prefactor attached to the Gaussian bump pair.
enum class WeightPrefactor {
    Unit,       ///< 1
    Quadratic,  ///< r^2 + 1/4
    KuznetsovQ, ///< q(r) = P(r)/(P(r)+Q0), P = (r^2+1/4)(r^2+9/4)
    JacobiNu,   ///< (r^2 + 1/4) (1 - (r/K)^2)^nu
};

/// Even spectral weight  prefactor(r) * { e^{-((r-c)/w)^2} + e^{-((r+c)/w)^2} }.
/// KuznetsovQ is regular only for |Im r| <= 3; its zeros at r = +-i/2, +-3i/2
/// are what cancel the cosine poles in the kernel transforms.
struct GaussianWeight {
    Real center;
    Real width;
    WeightPrefactor prefactor = WeightPrefactor::Quadratic;
    int nu = 0;
    Real q_const; ///< the constant in q(r); 626 unless configured otherwise
    bool zero = false;

    static GaussianWeight spectral_cubed(const Real& K, const Real& G);     // (1.6)-type
    static GaussianWeight kuznetsov(const Real& T, const Real& Q, double q_const = 626.0);
    static GaussianWeight unit(const Real& T, const Real& Q);
    static GaussianWeight jacobi(const Real& K, const Real& G, int nu);
    static GaussianWeight zero_weight(mpfr_prec_t prec);
};

/// Evaluate the weight at a complex point.
Complex weight_eval(const GaussianWeight& w, const Complex& r, const PrecisionContext& ctx);

/// Analytic derivative of the weight.
Complex weight_derivative(const GaussianWeight& w, const Complex& r, const PrecisionContext& ctx);

} // namespace hecke
