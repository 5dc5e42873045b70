#include "hecke/arith.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (long i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (long j = i * i; j <= n; j += i) comp[j] = true;
    for (long i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

long divisor_count(long n) {
    long d = 1;
    for (auto& [p, e] : factorize(n)) d *= (e + 1);
    return d;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> divs{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = divs.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Complex sigma_power(long n, const Complex& alpha, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    Complex acc(Real(1.0, p));
    for (auto& [q, e] : factorize(n)) {
        // 1 + q^alpha + ... + q^{e alpha}
        Complex qa = pow(Real(q, p), alpha);
        Complex geom(Real(1.0, p));
        Complex qk = qa;
        for (int i = 1; i <= e; ++i) {
            geom += qk;
            if (i < e) qk = qk * qa;
        }
        acc = acc * geom;
    }
    return acc;
}

long mod_inverse(long a, long m) {
    if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
    long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        long t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw DomainError("mod_inverse: arguments not coprime");
    return ((t0 % m) + m) % m;
}

Complex kloosterman_sum(long m, long n, long ell, const PrecisionContext& ctx) {
    if (ell < 1) throw DomainError("kloosterman_sum: ell must be positive");
    const mpfr_prec_t p = ctx.bits();
    if (ell == 1) return Complex(Real(1.0, p)); // single residue class
    Real two_pi_over_ell = Real::pi(p) * 2 / ell;
    Real acc(p);
    for (long a = 1; a < ell; ++a) {
        if (std::gcd(a, ell) != 1) continue;
        long abar = mod_inverse(a, ell);
        long phase = ((m % ell) * a + (n % ell) * abar) % ell;
        phase = ((phase % ell) + ell) % ell;
        acc += cos(two_pi_over_ell * phase);
    }
    return Complex(acc);
}

} // namespace hecke
