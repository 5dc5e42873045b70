#include "hecke/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hecke {

namespace {

std::mutex g_mutex;
std::vector<BigRat> g_bernoulli; // g_bernoulli[n] = B_n once computed

// Extend the cache to cover B_0..B_{target} using tangent numbers
// (integer-only triangle; far faster than the defining recurrence).
void extend_unlocked(unsigned target) {
    unsigned have = g_bernoulli.size();
    if (have > target) return;
    unsigned m = (target + 2) / 2; // need tangent numbers T_1..T_m
    std::vector<BigInt> t(m + 1);
    if (m >= 1) {
        t[1] = 1;
        for (unsigned k = 2; k <= m; ++k) t[k] = t[k - 1] * (k - 1);
        for (unsigned k = 2; k <= m; ++k)
            for (unsigned j = k; j <= m; ++j)
                t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    }
    g_bernoulli.assign(target + 1, BigRat(0));
    g_bernoulli[0] = 1;
    if (target >= 1) g_bernoulli[1] = BigRat(-1, 2);
    for (unsigned n = 1; 2 * n <= target; ++n) {
        // B_{2n} = (-1)^(n-1) * 2n * T_n / (4^n (4^n - 1))
        BigInt four_n = BigInt(1) << (2 * n);
        BigRat b(BigInt(2 * n) * t[n], four_n * (four_n - 1));
        g_bernoulli[2 * n] = (n % 2 == 1) ? b : -b;
    }
}

} // namespace

const BigRat& bernoulli_rational(unsigned n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (n >= g_bernoulli.size()) extend_unlocked(n + 32);
    return g_bernoulli[n];
}

Real bernoulli_real(unsigned n, mpfr_prec_t prec) {
    BigRat b;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        if (n >= g_bernoulli.size()) extend_unlocked(n + 32);
        b = g_bernoulli[n];
    }
    return to_real(b, prec);
}

BigInt factorial_int(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial_int(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n >= 0 && k > n) return 0;
    // Falling-factorial definition, valid for negative n as well.
    BigInt num = 1;
    for (long j = 0; j < k; ++j) num *= BigInt(n - j);
    return num / factorial_int(static_cast<unsigned>(k));
}

Real to_real(const BigRat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const BigInt& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.raw(), z.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace hecke
