#include "hecke/zeta.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "hecke/bernoulli.hpp"
#include "hecke/gamma.hpp"

namespace hecke {

namespace {

// B_2k / (2k)! at a fixed precision, grown on demand.
std::mutex g_em_mutex;
std::map<mpfr_prec_t, std::vector<Real>> g_em_coeffs;

Real em_coeff(unsigned k, mpfr_prec_t p) {
    std::lock_guard<std::mutex> lock(g_em_mutex);
    auto& v = g_em_coeffs[p];
    while (v.size() < k) {
        unsigned j = v.size() + 1;
        v.push_back(to_real(bernoulli_rational(2 * j) / BigRat(factorial_int(2 * j)), p));
    }
    return v[k - 1];
}

struct EmResult {
    Complex value;
    Complex deriv;
};

// Euler-Maclaurin for zeta(s, a) with base point N+a:
//   sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s/2
//   + sum_k B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}.
// The derivative accumulates the term-wise d/ds of every piece.
// Order and base length are chosen adaptively from the tolerance; if the
// Bernoulli tail stalls before certifying it, N is enlarged and the whole
// evaluation restarts.
EmResult em_hurwitz(const Complex& s, const Real& a, const PrecisionContext& ctx,
                    bool want_deriv) {
    const mpfr_prec_t p = ctx.bits();
    if (near_nonpositive_integer(s - 1L, ctx.eps()) && abs(s - 1L) < ctx.eps())
        throw PoleError("zeta: pole at s = 1");

    const double t_abs = std::abs(s.im.to_double());
    const double sigma = s.re.to_double();
    const int work_digits = ctx.digits + 6;
    long kmax = static_cast<long>(1.3 * work_digits) + 8;
    // Validity of the expansion needs 2k-1 > -sigma; make room for that.
    kmax = std::max<long>(kmax, static_cast<long>((2.0 - sigma) / 2.0) + 8);
    long n_len = std::max<long>(16, static_cast<long>((t_abs + 2.0 * kmax) / 1.8) + 4);

    for (int attempt = 0; attempt < 5; ++attempt) {
        Real base = a + n_len;
        Real log_base = log(base);

        Complex main(p), main_d(p);
        for (long n = 0; n < n_len; ++n) {
            Real nn = a + n;
            Real ln = log(nn);
            Complex term = exp(Complex(-s.re * ln, -s.im * ln));
            main += term;
            if (want_deriv) main_d -= Complex(ln) * term;
        }

        Complex base_pow_ms = exp(-s * Complex(log_base));       // base^-s
        Complex sm1 = s - 1L;
        Complex tail0 = Complex(base) * base_pow_ms / sm1;       // base^{1-s}/(s-1)
        Complex half = base_pow_ms / 2L;
        Complex acc = main + tail0 + half;
        Complex acc_d(p);
        if (want_deriv)
            acc_d = main_d - Complex(log_base) * tail0 - tail0 / sm1
                    - Complex(log_base) * half;

        Real scale = max(Real(1.0, p), abs(acc));
        Real tol_abs = ctx.eps() * scale * Real(0.05, p);
        Real tol_abs_d = want_deriv
                             ? ctx.eps() * max(Real(1.0, p), abs(acc_d)) * Real(0.05, p)
                             : Real(1.0, p);

        Complex inv_base2 = Complex(1L / (base * base));
        Complex w = base_pow_ms / base;   // base^{-s-1}
        Complex poch = s;                  // (s)_{2k-1}
        Complex poch_d(Real(1.0, p));      // d/ds (s)_{2k-1}, product rule
        bool converged = false;
        Complex corr(p), corr_d(p);
        Real prev_mag(p);
        long low_count = 0;
        for (long k = 1; k <= kmax; ++k) {
            if (k > 1) {
                Complex f1 = s + (2 * k - 3);
                Complex f2 = s + (2 * k - 2);
                Complex q = f1 * f2;
                if (want_deriv) poch_d = poch_d * q + poch * (f1 + f2);
                poch = poch * q;
                w = w * inv_base2;
            }
            Real coeff = em_coeff(static_cast<unsigned>(k), p);
            Complex term = Complex(coeff) * poch * w;
            corr += term;
            Real mag = abs(term);
            if (want_deriv) {
                Complex term_d = Complex(coeff) * w * (poch_d - poch * Complex(log_base));
                corr_d += term_d;
                mag = max(mag, abs(term_d) * (tol_abs / tol_abs_d));
            }
            bool valid_order = (2 * k - 1) > (2.0 - sigma);
            if (valid_order && mag <= tol_abs) {
                if (++low_count >= 2) { converged = true; break; }
            } else {
                low_count = 0;
            }
            if (k > 4 && mag > prev_mag * 4 && mag > tol_abs) break; // diverging
            prev_mag = mag;
        }
        if (converged) {
            EmResult r{acc + corr, acc_d + corr_d};
            require_finite(r.value, "zeta");
            return r;
        }
        n_len = n_len * 2 + 16;
    }
    throw PrecisionError("zeta: Euler-Maclaurin failed to certify tolerance");
}

} // namespace

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    if (abs(s - 1L) < ctx.eps()) throw PoleError("riemann_zeta: pole at s = 1");
    return em_hurwitz(s, Real(1.0, ctx.bits()), ctx, false).value;
}

ZetaPair riemann_zeta_with_deriv(const Complex& s, const PrecisionContext& ctx) {
    if (abs(s - 1L) < ctx.eps()) throw PoleError("riemann_zeta: pole at s = 1");
    EmResult r = em_hurwitz(s, Real(1.0, ctx.bits()), ctx, true);
    return {r.value, r.deriv};
}

Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    if (!(a > 0.0) || a > 1.0)
        throw DomainError("hurwitz_zeta: requires 0 < a <= 1");
    if (abs(s - 1L) < ctx.eps()) throw PoleError("hurwitz_zeta: pole at s = 1");
    return em_hurwitz(s, a, ctx, false).value;
}

Complex unit_exp(const Real& x) {
    Real two_pi = Real::pi(x.prec()) * 2;
    return {cos(two_pi * x), sin(two_pi * x)};
}

Complex lerch_twisted_zeta(const Complex& s, long h, long k, const PrecisionContext& ctx) {
    if (k < 2 || h < 1 || h > k)
        throw DomainError("lerch_twisted_zeta: requires 1 <= h <= k, k >= 2");
    if (abs(s - 1L) < ctx.eps())
        throw PoleError("lerch_twisted_zeta: Hurwitz representation breaks at s = 1");
    const mpfr_prec_t p = ctx.bits();
    Real kr(static_cast<long>(k), p);
    Complex k_pow = exp(-s * Complex(log(kr)));
    Complex acc(p);
    for (long j = 1; j <= k; ++j) {
        Real frac = Real(j, p) / kr;
        Complex tw = unit_exp(Real((j * h) % k, p) / kr);
        acc += tw * hurwitz_zeta(s, frac, ctx);
    }
    return k_pow * acc;
}

Complex lerch_functional_rhs(const Complex& s, long h, long k, const PrecisionContext& ctx) {
    if (k < 2 || h < 1 || h >= k)
        throw DomainError("lerch_functional_rhs: requires 1 <= h < k");
    const mpfr_prec_t p = ctx.bits();
    Real pi = Real::pi(p);
    Complex one_m_s = 1L - s;
    Complex pref = gamma_fn(one_m_s, ctx) * exp(-one_m_s * Complex(log(2 * pi)));
    Complex rot = exp(mul_i(one_m_s) * Complex(pi / 2));     // e^{i pi (1-s)/2}
    Real hk = Real(h, p) / Real(k, p);
    Complex z1 = hurwitz_zeta(one_m_s, hk, ctx);
    Complex z2 = hurwitz_zeta(one_m_s, 1L - hk, ctx);
    return pref * (rot * z1 + z2 / rot);
}

} // namespace hecke
