#include "hecke/transforms.hpp"

#include <cmath>

#include "hecke/gamma.hpp"

namespace hecke {

namespace {

void guard_abscissa(double a, std::initializer_list<double> poles, const char* who) {
    for (double x : poles)
        if (std::abs(a - x) < 1e-3)
            throw PoleError(std::string(who) + ": abscissa within 1e-3 of a pole at " +
                            std::to_string(x));
}

// log(sinh(pi u)) and log(cosh(pi r)) without the huge intermediate.
Real log_sinh_pi(const Real& u, mpfr_prec_t p) {
    Real pu = Real::pi(p) * u;
    return pu - log(Real(2.0, p)) + log1p(-exp(pu * Real(-2.0, p)));
}
Real log_cosh_pi(const Real& r, mpfr_prec_t p) {
    Real pr = abs(Real::pi(p) * r);
    return pr - log(Real(2.0, p)) + log1p(exp(pr * Real(-2.0, p)));
}

// Lattice of panel breakpoints for vertical-line integrals: unit spacing in
// the core, fixed geometric points beyond. Positions are double-exact and
// independent of the requested cap so that nodes coincide across calls and
// the h* cache keeps hitting.
std::vector<Real> lattice_breaks(double cap, mpfr_prec_t p) {
    std::vector<double> pos;
    for (double x = 1.0; x <= std::min(cap, 40.0); x += 1.0) pos.push_back(x);
    for (double x = 54.0; x < cap; x *= 1.35) pos.push_back(x);
    std::vector<Real> br;
    br.reserve(2 * pos.size() + 1);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) br.emplace_back(-*it, p);
    br.emplace_back(0.0, p);
    for (double x : pos) br.emplace_back(x, p);
    return br;
}

// i * int_{-cap}^{cap} f(sigma + i t, h*(sigma + i t)) dt with cap extension
// until the edge values certify the discarded tail. All callers have
// conjugate-symmetric integrands (real weight parameters, real abscissa), so
// only t >= 0 is evaluated: the full integral is i * 2 Re int_0^cap.
Complex hstar_line_integral(const GaussianWeight& w, const Real& sigma, double cap,
                            const std::function<Complex(const Complex&, const Complex&)>& f,
                            const PrecisionContext& ctx, double tol,
                            const HStarCache* cache) {
    const mpfr_prec_t p = ctx.bits();
    if (w.zero) return Complex(p);
    auto hval = [&](const Real& t) {
        if (cache) return cache->at(t);
        return h_star(Complex(sigma, t), w, ctx, tol);
    };
    auto g = [&](const Real& t) {
        Complex s(sigma, t);
        return f(s, hval(t));
    };
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Real> all = lattice_breaks(cap, p);
        std::vector<Real> breaks;
        for (const Real& b : all)
            if (b > 0.0) breaks.push_back(b);
        AdaptiveOptions opt;
        opt.rel_tol = tol * 0.5;
        opt.rule_order = 24;
        auto q = integrate_adaptive(g, Real(0.0, p), Real(cap, p), ctx, opt, &breaks);
        Real edge = abs(g(Real(cap, p))) * Real(8.0, p);
        Real scale = max(q.abs_integral, Real(1e-280, p));
        // I = I_+ + conj(I_+) = 2 Re I_+; the transform value is i * I.
        if (edge < scale * Real(tol, p))
            return {Real(0.0, p), q.value.re + q.value.re};
        cap *= 1.4;
    }
    throw CertificationError("hstar_line_integral: height truncation did not certify");
}

} // namespace

double hstar_line_cap(const GaussianWeight& w, double tol, double extra) {
    double c = std::max(1.0, w.center.to_double());
    double q = std::max(1e-3, w.width.to_double());
    // |h*(sigma+it)| grows at most like e^{pi min(t,c)} times the Gaussian
    // oscillation suppression e^{-(t q/c)^2}, and every kernel's remaining
    // factors decay at least as fast as that growth; the suppression scale
    // alone therefore bounds the height that can contribute.
    double suppression =
        (c / q) * std::sqrt(std::log(1.0 / tol) + std::log(1.0 + c * c) + 8.0) + 8.0;
    return suppression + extra;
}

Complex psi_hat(const Complex& z, const GaussianWeight& w, const PrecisionContext& ctx,
                PsiHatRoute route, double rel_tol) {
    const mpfr_prec_t p = ctx.bits();
    if (w.zero) return Complex(p);
    if (!(z.re > 0.0)) throw DomainError("psi_hat: requires Re z > 0");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = Real::pi(p);

    if (route == PsiHatRoute::ViaHStar) {
        Complex cz = cos(Complex(pi / 2) * z);
        if (abs(cz) < 0.05)
            throw PoleError("psi_hat: route via h* too close to a cos(pi z/2) zero");
        Complex hs = h_star(z / Complex(Real(2.0, p)), w, ctx, tol);
        return mul_i(exp(z * Complex(log(Real(2.0, p)))) * hs / cz);
    }

    Complex half_z = z / Complex(Real(2.0, p));
    Complex pref = exp((z - 1L) * Complex(log(Real(2.0, p)))) / Complex(pi);
    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    auto integrand = [&](const Real& u) {
        Complex iu(Real(0, p), u);
        Complex lg = log_gamma(half_z + iu, ctx, acc) + log_gamma(half_z - iu, ctx, acc);
        Complex hv = weight_eval(w, Complex(u), ctx);
        // u = 0 contributes nothing; sinh log-form needs u > 0, use oddness in
        // the exponent: sinh(-x) = -sinh(x)
        if (u.is_zero()) return Complex(p);
        Real au = abs(u);
        Complex val = exp(lg + Complex(log_sinh_pi(au, p)));
        if (u.sign() < 0) val = -val;
        return pref * Complex(u) * hv * val;
    };
    WindowIntegral wi = gaussian_window_integrate(w, integrand, ctx, tol, /*even=*/true);
    return wi.value;
}

std::vector<Complex> psi_hat_derivatives_at_1(int m_max, const GaussianWeight& w,
                                              const PrecisionContext& ctx,
                                              double rel_tol, double radius) {
    if (m_max < 0 || m_max > 6)
        throw DomainError("psi_hat_derivatives_at_1: m must lie in 0..6");
    if (!(radius > 0) || radius >= 0.9)
        throw DomainError("psi_hat_derivatives_at_1: circle would cross the Re z = 0 line");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    auto f = [&](const Complex& z) { return psi_hat(z, w, ctx, PsiHatRoute::Direct, tol * 0.3); };
    return cauchy_derivatives(f, Complex(ctx.real(1.0)), ctx.real(radius), m_max, ctx, tol);
}

Complex transform_g_k(long k, const GaussianWeight& w, const PrecisionContext& ctx,
                      double delta, double rel_tol, const HStarCache* cache) {
    const mpfr_prec_t p = ctx.bits();
    if (k < 12 || k % 2 != 0) throw DomainError("transform_g_k: k must be even and >= 12");
    if (!(delta > 0.0) || delta >= 0.25) throw DomainError("transform_g_k: delta in (0, 1/4)");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = ctx.pi();
    Real log2 = log(Real(2.0, p));
    double cap = std::log(1.0 / tol) / M_PI + 40.0;

    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    auto f = [&](const Complex& s, const Complex& hv) {
        Complex quot = gamma_quotient(s + Real(k - 0.5, p), s + Real(k + 0.5, p), ctx, acc);
        Complex g4 = exp(4L * log_gamma(Complex(Real(0.5, p)) - s, ctx, acc));
        Complex two = exp((2L * s - 1L) * Complex(log2));
        return two * quot * g4 * tan(Complex(pi) * s) * hv;
    };
    Complex v = hstar_line_integral(w, ctx.real(delta), cap, f, ctx, tol, cache);
    return v / Complex(pi * pi * pi);
}

Complex transform_h0(const Real& r, const GaussianWeight& w, const PrecisionContext& ctx,
                     double delta, double rel_tol, const HStarCache* cache) {
    const mpfr_prec_t p = ctx.bits();
    if (!(delta > 0.0) || delta >= 0.25) throw DomainError("transform_h0: delta in (0, 1/4)");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = ctx.pi();
    Real log2 = log(Real(2.0, p));
    double cap = hstar_line_cap(w, tol);

    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    Complex ir(Real(0, p), r);
    auto f = [&](const Complex& s, const Complex& hv) {
        Complex lg = log_gamma(s + ir, ctx, acc) + log_gamma(s - ir, ctx, acc);
        Complex two = exp((2L * s + 1L) * Complex(log2));
        Complex g4 = exp(4L * log_gamma(Complex(Real(0.5, p)) - s, ctx, acc));
        return two * exp(lg) * g4 * sin(Complex(pi) * s) * hv;
    };
    Complex v = hstar_line_integral(w, ctx.real(delta), cap, f, ctx, tol, cache);
    return v / Complex(pi * pi * pi);
}

Complex transform_h1(const Real& r, const GaussianWeight& w, const PrecisionContext& ctx,
                     double delta, double rel_tol, const HStarCache* cache) {
    const mpfr_prec_t p = ctx.bits();
    if (!(delta > 0.0) || delta >= 0.25) throw DomainError("transform_h1: delta in (0, 1/4)");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = ctx.pi();
    Real log2 = log(Real(2.0, p));
    double cap = hstar_line_cap(w, tol);

    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    Complex ir(Real(0, p), r);
    Real lcosh = log_cosh_pi(r, p);
    auto f = [&](const Complex& s, const Complex& hv) {
        Complex lg = log_gamma(s + ir, ctx, acc) + log_gamma(s - ir, ctx, acc) + Complex(lcosh);
        Complex two = exp(2L * s * Complex(log2));
        Complex g4 = exp(4L * log_gamma(Complex(Real(0.5, p)) - s, ctx, acc));
        Complex sp = sin(Complex(pi) * s);
        Complex trig = (sp * sp + 1L) / cos(Complex(pi) * s);
        return two * exp(lg) * g4 * trig * hv;
    };
    Complex v = hstar_line_integral(w, ctx.real(delta), cap, f, ctx, tol, cache);
    return v / Complex(pi * pi * pi * 2);
}

namespace {

Complex psi_pm_impl(const Real& x, const GaussianWeight& w, const Real& beta,
                    const PrecisionContext& ctx, double rel_tol, const HStarCache* cache,
                    bool plus) {
    const mpfr_prec_t p = ctx.bits();
    double b = beta.to_double();
    if (!(b > -1.5) || !(b < 0.5))
        throw DomainError("psi_pm: beta must lie in (-3/2, 1/2)");
    guard_abscissa(b, {0.0, -0.5, -1.0}, "psi_pm");
    if (!(x > 0.0)) throw DomainError("psi_pm: x must be positive");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = ctx.pi();
    Real logx = log(x);
    double cap = hstar_line_cap(w, tol) + std::log(1.0 + 1.0 / x.to_double());

    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    auto f = [&](const Complex& s, const Complex& hv) {
        Complex g2 = exp(2L * log_gamma(Complex(Real(0.5, p)) - s, ctx, acc));
        Complex xs = exp(s * Complex(logx));
        Complex trig = plus ? tan(Complex(pi) * s) : 1L / cos(Complex(pi) * s);
        return g2 * trig * hv * xs;
    };
    return hstar_line_integral(w, beta, cap, f, ctx, tol, cache);
}

} // namespace

Complex psi_plus(const Real& x, const GaussianWeight& w, const Real& beta,
                 const PrecisionContext& ctx, double rel_tol, const HStarCache* cache) {
    return psi_pm_impl(x, w, beta, ctx, rel_tol, cache, true);
}

Complex psi_minus(const Real& x, const GaussianWeight& w, const Real& beta,
                  const PrecisionContext& ctx, double rel_tol, const HStarCache* cache) {
    return psi_pm_impl(x, w, beta, ctx, rel_tol, cache, false);
}

Complex u_nu_transform(const Real& x, const Real& K, const std::vector<Real>& poly,
                       double lambda_const, const PrecisionContext& ctx,
                       double abscissa, double rel_tol) {
    const mpfr_prec_t p = ctx.bits();
    if (!(x > 0.0) || !(K > 1.0)) throw DomainError("u_nu_transform: x > 0, K > 1 required");
    if (lambda_const <= 0) throw DomainError("u_nu_transform: lambda_const must be positive");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real lambda = Real(lambda_const, p) * log(K);
    double lam = lambda.to_double();
    double a = (abscissa != 0.0) ? abscissa : -1.0 / lam;
    if (!(a > -lam + 1e-3) || !(a < -1e-5))
        throw PoleError("u_nu_transform: abscissa must lie in (-lambda, 0)");

    if (poly.empty()) return Complex(p);
    bool all_zero = true;
    for (const Real& c : poly)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) return Complex(p);

    Real pi = ctx.pi();
    // modulus of (4 pi^2 x / K^2)^w is constant on the line
    Real log_arg = log(Real(4.0, p) * pi * pi * x / (K * K));
    int deg = static_cast<int>(poly.size()) - 1;
    double cap = (2.0 * lam / M_PI) *
                     (std::log(1.0 / tol) + (deg + 1) * std::log(2.0 + lam) + 6.0) +
                 8.0 * lam;

    auto f = [&](const Real& t) {
        Complex wp(Real(a, p), t);
        Complex u(p);
        for (int j = deg; j >= 0; --j) u = u * wp + Complex(poly[j]);
        Complex kern = exp(wp * Complex(log_arg));
        return kern * u * gamma_fn(wp / Complex(lambda), ctx);
    };
    std::vector<Real> all = lattice_breaks(cap, p);
    std::vector<Real> breaks;
    for (const Real& b : all)
        if (b > 0.0) breaks.push_back(b);
    AdaptiveOptions opt;
    opt.rel_tol = tol * 0.5;
    // conjugate symmetry: int_{-cap}^{cap} = 2 Re int_0^cap
    auto q = integrate_adaptive(f, Real(0.0, p), Real(cap, p), ctx, opt, &breaks);
    // (2 pi i lambda)^-1 * (i dt) = dt / (2 pi lambda)
    return Complex((q.value.re + q.value.re) / (pi * 2 * lambda));
}

Complex psi_kernel(const Real& x, const GaussianWeight& w, const Real& alpha,
                   const PrecisionContext& ctx, double rel_tol, const HStarCache* cache) {
    const mpfr_prec_t p = ctx.bits();
    double a = alpha.to_double();
    if (!(a > -1.5) || !(a < 1.5)) throw DomainError("psi_kernel: alpha in (-3/2, 3/2)");
    guard_abscissa(a, {-1.0, -0.5, 0.0, 0.5}, "psi_kernel");
    if (!(x > 0.0)) throw DomainError("psi_kernel: x must be positive");
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    Real pi = ctx.pi();
    Real log_half_x = log(x / 2);
    double cap = hstar_line_cap(w, tol) + std::abs(log_half_x.to_double());

    auto f = [&](const Complex& s, const Complex& hv) {
        Complex xs = exp(Complex(Real(-2.0, p)) * s * Complex(log_half_x));
        return xs * hv / cos(Complex(pi) * s);
    };
    Complex v = hstar_line_integral(w, alpha, cap, f, ctx, tol, cache);
    return v / Complex(pi * pi);
}

} // namespace hecke
