#include "hecke/gamma.hpp"

#include <climits>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "hecke/bernoulli.hpp"

namespace hecke {

bool near_nonpositive_integer(const Complex& z, const Real& tol) {
    if (z.re > 0.5) return false;
    if (abs(z.im) > tol) return false;
    Real r = z.re - floor(z.re + Real(0.5, z.re.prec()));
    return abs(r) <= tol;
}

namespace {

// B_2k / (2k (2k-1)) at a fixed precision, grown on demand.
std::mutex g_coeff_mutex;
std::map<mpfr_prec_t, std::vector<Real>> g_stirling_coeffs;

const Real& stirling_coeff(unsigned k, mpfr_prec_t p) {
    std::lock_guard<std::mutex> lock(g_coeff_mutex);
    auto& v = g_stirling_coeffs[p];
    while (v.size() <= k) {
        unsigned j = v.size() + 1; // entry i holds k = i+1
        v.push_back(to_real(bernoulli_rational(2 * j) /
                                (BigRat(2 * j) * BigRat(2 * j - 1)), p));
    }
    return v[k - 1];
}

std::mutex g_const_mutex;
std::map<mpfr_prec_t, Real> g_half_log_2pi;

const Real& half_log_2pi(mpfr_prec_t p) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = g_half_log_2pi.find(p);
    if (it == g_half_log_2pi.end())
        it = g_half_log_2pi.emplace(p, Real(0.5, p) * log(Real(2.0, p) * Real::pi(p))).first;
    return it->second;
}

// Smallest |z| at which the Stirling tail can reach ~10^-digits.
double stirling_threshold(int digits) {
    return std::max(14.0, 0.62 * (digits + 10));
}

long mag_exp2(const Complex& z) {
    return std::max(z.re.is_zero() ? LONG_MIN : z.re.exp2(),
                    z.im.is_zero() ? LONG_MIN : z.im.exp2());
}

// Stirling series; requires |z| >= threshold and Re z > 0 (or |arg z| <= 3pi/4
// with |z| well above threshold, which the caller arranges).
// log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k/(2k(2k-1) z^(2k-1)).
Complex stirling_log_gamma(const Complex& z, const PrecisionContext& ctx, int digits) {
    const mpfr_prec_t p = ctx.bits();
    Complex lz = log(z);
    Complex acc = (z - Real(0.5, p)) * lz - z;
    acc.re += half_log_2pi(p);

    const long target = mag_exp2(acc) - static_cast<long>(3.33 * (digits + 4));
    Complex inv_z2 = 1L / (z * z);
    Complex zpow = 1L / z; // z^{-(2k-1)}
    long prev_mag = LONG_MAX;
    const unsigned kmax = 4 * static_cast<unsigned>(digits) + 40;
    for (unsigned k = 1; k <= kmax; ++k) {
        Complex term = stirling_coeff(k, p) * zpow;
        acc += term;
        long mag = mag_exp2(term);
        if (mag <= target) return acc;
        if (k > 3 && mag > prev_mag)
            throw PrecisionError("log_gamma: Stirling tail stalled above tolerance");
        prev_mag = mag;
        zpow = zpow * inv_z2;
    }
    throw PrecisionError("log_gamma: Stirling series did not certify tolerance");
}

} // namespace

Complex log_gamma(const Complex& z, const PrecisionContext& ctx, int acc_digits) {
    const mpfr_prec_t p = ctx.bits();
    if (!z.is_finite()) throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z, ctx.eps()))
        throw PoleError("log_gamma: pole at non-positive integer");

    const int digits = (acc_digits > 0 && acc_digits < ctx.digits) ? acc_digits : ctx.digits;
    const double thr = stirling_threshold(digits);
    const double re = z.re.to_double();
    const double im = std::abs(z.im.to_double());
    if ((re >= thr) || (re >= 0.4 && std::hypot(re, im) >= 1.25 * thr) ||
        (im >= 2.4 * thr && re >= -im))
        return stirling_log_gamma(z, ctx, digits);

    // Recurse upward just far enough that |z + shift| clears the threshold.
    double need = 1.25 * thr;
    double re_target = (im >= need) ? 0.5 : std::sqrt(need * need - im * im);
    long shift = static_cast<long>(std::ceil(re_target - re)) + 1;
    Complex zs = z + shift;
    Complex acc = stirling_log_gamma(zs, ctx, digits);

    // log Gamma(z) = log Gamma(z+n) - log prod (z+j), with the product flushed
    // to a log before its accumulated argument can leave the principal sheet.
    Complex logsum(p);
    Complex prod(Real(1.0, p));
    double arg_acc = 0.0;
    for (long j = 0; j < shift; ++j) {
        double a = std::atan2(z.im.to_double(), re + j);
        if (std::abs(arg_acc + a) > 2.6) {
            logsum += log(prod);
            prod = Complex(Real(1.0, p));
            arg_acc = 0.0;
        }
        prod = prod * (z + j);
        arg_acc += a;
    }
    logsum += log(prod);
    return acc - logsum;
}

Complex gamma_fn(const Complex& z, const PrecisionContext& ctx, int acc_digits) {
    return exp(log_gamma(z, ctx, acc_digits));
}

Complex gamma_quotient(const Complex& a, const Complex& b, const PrecisionContext& ctx,
                       int acc_digits) {
    if (near_nonpositive_integer(a, ctx.eps())) {
        if (near_nonpositive_integer(b, ctx.eps()))
            throw PoleError("gamma_quotient: pole over pole; reduce analytically first");
        throw PoleError("gamma_quotient: numerator pole");
    }
    if (near_nonpositive_integer(b, ctx.eps()))
        return Complex(ctx.bits()); // 1/Gamma vanishes there
    return exp(log_gamma(a, ctx, acc_digits) - log_gamma(b, ctx, acc_digits));
}

Complex gamma_ratio(const Complex& s, const Real& u, const PrecisionContext& ctx) {
    Complex iu(Real(0, ctx.bits()), u);
    return gamma_quotient(s + iu, 1L - s + iu, ctx);
}

ModulusPhase stirling_phase(const Real& sigma, const Real& t, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    if (t < 10.0) throw DomainError("stirling_phase: requires t >= 10");
    Real pi = Real::pi(p);
    Real two_pi = pi * 2;
    Real modulus = sqrt(two_pi) * pow(t, sigma - Real(0.5, p)) * exp(-pi * t / 2);
    Real c = (sigma - sigma * sigma - Real(1.0, p) / 6) / 2;
    Real phase = t * log(t) - t + pi * (sigma - Real(0.5, p)) / 2 + c / t;
    return {modulus, phase};
}

} // namespace hecke
