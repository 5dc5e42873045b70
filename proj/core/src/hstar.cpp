#include "hecke/hstar.hpp"

#include <cmath>

#include "hecke/gamma.hpp"

namespace hecke {

namespace {

// Distance from x to the nearest non-positive integer.
double dist_to_nonpositive_integer(double x) {
    if (x > 0.5) return x;
    double r = std::round(x);
    if (r > 0) r = 0;
    return std::abs(x - r);
}

// Continuation term picked up when Re s drops below -n: the residue of the
// integrand pole at u = i(s+n),
//   2 pi i (-1)^n (s+n) h(i(s+n)) / (n! Gamma(1-2s-n)).
Complex strip_correction(const Complex& s, const GaussianWeight& w, int count,
                         const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    Complex acc(p);
    Real fact(1.0, p);
    for (int n = 0; n < count; ++n) {
        if (n > 0) fact *= n;
        Complex sn = s + static_cast<long>(n);
        Complex hv = weight_eval(w, mul_i(sn), ctx);
        Complex inv_gamma = exp(-log_gamma(1L - s - sn, ctx)); // 1/Gamma(1-2s-n)
        Complex term = sn * hv * inv_gamma / fact;
        if (n % 2 == 1) term = -term;
        acc += term;
    }
    Real two_pi = Real::pi(p) * 2;
    return mul_i(acc) * two_pi;
}

} // namespace

Real hstar_window_halfwidth(const GaussianWeight& w, double tol) {
    const mpfr_prec_t p = w.center.prec();
    double c = std::max(3.0, w.center.to_double());
    // room for the polynomial growth of the integrand off the bump peak
    double x_tol = std::sqrt(std::log(1.0 / tol) + 4.0 * std::log(c) + 8.0) + 1.0;
    double x_log = std::log(c);
    return w.width * Real(std::max(x_tol, x_log), p);
}

WindowIntegral gaussian_window_integrate(const GaussianWeight& w, const ComplexIntegrand& f,
                                         const PrecisionContext& ctx, double tol,
                                         bool even, const ComplexIntegrand* tail_probe) {
    const ComplexIntegrand& probe = tail_probe ? *tail_probe : f;
    const mpfr_prec_t p = ctx.bits();
    const double c = w.center.to_double();
    Real window = hstar_window_halfwidth(w, tol);

    // The inward half-width can stop at the peak-relative decay: past it the
    // integrand is a pure Gaussian tail into shrinking |u|, certified by the
    // inner edge values below.
    double gw_d = w.width.to_double();
    double w_in_d = gw_d * (std::sqrt(std::log(1.0 / tol) + 8.0) + 1.0);

    for (int attempt = 0; attempt < 3; ++attempt) {
        double wd = window.to_double();
        double win = std::min(w_in_d, wd);
        double gw = gw_d;
        Complex value(p);
        Real scale(p);
        std::vector<std::pair<double, double>> windows;
        if (even) {
            windows.emplace_back(std::max(0.0, c - win), c + wd);
        } else if (c - win <= gw) {
            windows.emplace_back(-c - wd, c + wd);
        } else {
            windows.emplace_back(-c - wd, -c + win);
            windows.emplace_back(c - win, c + wd);
        }
        Real edge_mass(p);
        for (auto [a, b] : windows) {
            std::vector<Real> breaks;
            double step = 2.0 * gw;
            for (double x = a + step; x < b - step / 2; x += step) breaks.emplace_back(x, p);
            AdaptiveOptions opt;
            opt.rel_tol = tol * 0.5;
            opt.rule_order = 24;
            auto q = integrate_adaptive(f, Real(a, p), Real(b, p), ctx, opt, &breaks);
            value += q.value;
            scale += q.abs_integral;
            if (a > 0.0 || !even) edge_mass += abs(probe(Real(a, p))) * w.width;
            edge_mass += abs(probe(Real(b, p))) * w.width;
        }
        if (even) {
            value += value;
            scale += scale;
        }
        if (scale.is_zero()) scale = Real(1.0, p);
        if (edge_mass < scale * Real(tol, p)) {
            require_finite(value, "gaussian_window_integrate");
            return {value, scale, windows};
        }
        window *= 2;
    }
    throw CertificationError("gaussian_window_integrate: window truncation did not certify");
}

HStarResult h_star_full(const Complex& s, const GaussianWeight& w,
                        const PrecisionContext& ctx, double rel_tol) {
    const mpfr_prec_t p = ctx.bits();
    if (w.zero) return {Complex(p), Real(1.0, p)};
    const double tol = rel_tol > 0 ? rel_tol : ctx.rel_tol;

    const double sigma = s.re.to_double();
    if (dist_to_nonpositive_integer(sigma) < 1e-3)
        throw PoleError("h_star: Re s within 1e-3 of a non-positive integer "
                        "(integrand pole on the path)");

    // Integrand poles u_n = i(s+n) sit at height sigma+n above the path; the
    // ones within a few units would force deep refinement, so their principal
    // parts are removed from the quadrature and integrated in closed form.
    struct NearPole {
        Complex location;
        Complex residue;
    };
    std::vector<NearPole> near;
    Real fact(1.0, p);
    for (int n = 0; n <= static_cast<int>(std::ceil(-sigma)) + 1 && n < 64; ++n) {
        if (n > 0) fact *= n;
        if (std::abs(sigma + n) > 2.5) continue;
        Complex sn = s + static_cast<long>(n);
        Complex c = sn * weight_eval(w, mul_i(sn), ctx) *
                    exp(-log_gamma(1L - s - sn, ctx)) / fact;
        if (n % 2 == 1) c = -c;
        // residue of the integrand in u: c / i
        near.push_back({mul_i(sn), mul_i(c) * Real(-1.0, p)});
    }

    const int acc = std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 4);
    auto plain = [&](const Real& u) {
        Complex iu(Real(0, p), u);
        Complex ratio = gamma_quotient(s + iu, 1L - s + iu, ctx, acc);
        return Complex(u) * weight_eval(w, Complex(u), ctx) * ratio;
    };
    ComplexIntegrand probe = plain;
    auto integrand = [&](const Real& u) {
        Complex v = plain(u);
        for (const NearPole& np : near) v -= np.residue / (Complex(u) - np.location);
        return v;
    };

    WindowIntegral wi = gaussian_window_integrate(w, integrand, ctx, tol, false, &probe);
    Complex value = wi.value;
    // add back int_a^b residue/(u - u_n) du over each quadrature window
    for (const NearPole& np : near)
        for (auto [a, b] : wi.segments)
            value += np.residue * (log(Complex(Real(b, p)) - np.location) -
                                   log(Complex(Real(a, p)) - np.location));
    if (sigma < 0) {
        int count = static_cast<int>(std::ceil(-sigma - 1e-9));
        value += strip_correction(s, w, count, ctx);
    }
    require_finite(value, "h_star");
    return {value, wi.scale};
}

Complex h_star(const Complex& s, const GaussianWeight& w,
               const PrecisionContext& ctx, double rel_tol) {
    return h_star_full(s, w, ctx, rel_tol).value;
}

HStarCache::HStarCache(GaussianWeight w, Real sigma, PrecisionContext ctx, double rel_tol)
    : weight_(std::move(w)), sigma_(std::move(sigma)), ctx_(ctx), rel_tol_(rel_tol) {}

Complex HStarCache::at(const Real& t) const {
    std::string key = t.str(ctx_.digits + 12);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Complex v = h_star(Complex(sigma_, t), weight_, ctx_, rel_tol_);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

size_t HStarCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

} // namespace hecke
