#include "hecke/weights.hpp"

namespace hecke {

GaussianWeight GaussianWeight::spectral_cubed(const Real& K, const Real& G) {
    GaussianWeight w;
    w.center = K;
    w.width = G;
    w.prefactor = WeightPrefactor::Quadratic;
    w.q_const = Real(626.0, K.prec());
    return w;
}

GaussianWeight GaussianWeight::kuznetsov(const Real& T, const Real& Q, double q_const) {
    GaussianWeight w;
    w.center = T;
    w.width = Q;
    w.prefactor = WeightPrefactor::KuznetsovQ;
    w.q_const = Real(q_const, T.prec());
    return w;
}

GaussianWeight GaussianWeight::unit(const Real& T, const Real& Q) {
    GaussianWeight w;
    w.center = T;
    w.width = Q;
    w.prefactor = WeightPrefactor::Unit;
    w.q_const = Real(626.0, T.prec());
    return w;
}

GaussianWeight GaussianWeight::jacobi(const Real& K, const Real& G, int nu) {
    GaussianWeight w;
    w.center = K;
    w.width = G;
    w.prefactor = WeightPrefactor::JacobiNu;
    w.nu = nu;
    w.q_const = Real(626.0, K.prec());
    return w;
}

GaussianWeight GaussianWeight::zero_weight(mpfr_prec_t prec) {
    GaussianWeight w;
    w.center = Real(1.0, prec);
    w.width = Real(1.0, prec);
    w.prefactor = WeightPrefactor::Unit;
    w.q_const = Real(626.0, prec);
    w.zero = true;
    return w;
}

namespace {

// e^{-((r-c)/w)^2} + e^{-((r+c)/w)^2} and its derivative.
Complex bump_pair(const GaussianWeight& w, const Complex& r, Complex* deriv) {
    Complex um = (r - w.center) / w.width;
    Complex up = (r + w.center) / w.width;
    Complex em = exp(-(um * um));
    Complex ep = exp(-(up * up));
    if (deriv)
        *deriv = em * um * Real(-2.0, r.prec()) / w.width +
                 ep * up * Real(-2.0, r.prec()) / w.width;
    return em + ep;
}

Complex quartic(const Complex& r, Complex* deriv) {
    Complex a = r * r + Real(0.25, r.prec());
    Complex b = r * r + Real(2.25, r.prec());
    if (deriv) *deriv = 2L * r * b + a * 2L * r;
    return a * b;
}

} // namespace

Complex weight_eval(const GaussianWeight& w, const Complex& r, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    if (w.zero) return Complex(p);
    if (w.prefactor == WeightPrefactor::KuznetsovQ && abs(r.im) > 3.0)
        throw DomainError("weight_eval: KuznetsovQ weight outside its regularity strip |Im r| <= 3");

    Complex g = bump_pair(w, r, nullptr);
    switch (w.prefactor) {
        case WeightPrefactor::Unit:
            return g;
        case WeightPrefactor::Quadratic:
            return (r * r + Real(0.25, p)) * g;
        case WeightPrefactor::KuznetsovQ: {
            Complex pr = quartic(r, nullptr);
            return pr / (pr + w.q_const) * g;
        }
        case WeightPrefactor::JacobiNu: {
            Complex base = 1L - (r / w.center) * (r / w.center);
            return (r * r + Real(0.25, p)) * pow(base, static_cast<long>(w.nu)) * g;
        }
    }
    throw DomainError("weight_eval: unknown prefactor");
}

Complex weight_derivative(const GaussianWeight& w, const Complex& r, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    if (w.zero) return Complex(p);
    if (w.prefactor == WeightPrefactor::KuznetsovQ && abs(r.im) > 3.0)
        throw DomainError("weight_derivative: KuznetsovQ weight outside its regularity strip");

    Complex gd(p);
    Complex g = bump_pair(w, r, &gd);
    switch (w.prefactor) {
        case WeightPrefactor::Unit:
            return gd;
        case WeightPrefactor::Quadratic:
            return 2L * r * g + (r * r + Real(0.25, p)) * gd;
        case WeightPrefactor::KuznetsovQ: {
            Complex pd(p);
            Complex pr = quartic(r, &pd);
            Complex denom = pr + w.q_const;
            Complex qd = pd * w.q_const / (denom * denom);
            return qd * g + pr / denom * gd;
        }
        case WeightPrefactor::JacobiNu: {
            Complex base = 1L - (r / w.center) * (r / w.center);
            Complex bpow = pow(base, static_cast<long>(w.nu));
            Complex quad = r * r + Real(0.25, p);
            Complex base_d = -2L * r / (w.center * w.center);
            Complex term = 2L * r * bpow + quad * Real(static_cast<long>(w.nu), p) *
                                               pow(base, static_cast<long>(w.nu) - 1) * base_d;
            return term * g + quad * bpow * gd;
        }
    }
    throw DomainError("weight_derivative: unknown prefactor");
}

} // namespace hecke
