#pragma once

#include <cmath>

#include "hecke/real.hpp"

namespace hecke {

/// Working precision and tolerance budget, passed explicitly to every numeric
/// operation. Never ambient: two contexts can be used side by side.
struct PrecisionContext {
    int digits = 50;          ///< decimal digits of working precision (>= 30)
    double rel_tol = 1e-40;   ///< target relative error of composite quadratures
    long series_cutoff = 10000; ///< default partial-sum length

    PrecisionContext() = default;
    PrecisionContext(int d, double tol, long cutoff = 10000)
        : digits(d), rel_tol(tol), series_cutoff(cutoff) {
        validate();
    }

    static PrecisionContext make(int d, double tol = 0.0, long cutoff = 10000) {
        PrecisionContext c;
        c.digits = d;
        c.rel_tol = (tol > 0.0) ? tol : std::pow(10.0, 10 - d);
        c.series_cutoff = cutoff;
        c.validate();
        return c;
    }

    void validate() const {
        if (digits < 30) throw DomainError("PrecisionContext: digits must be >= 30");
        if (!(rel_tol > 0.0)) throw DomainError("PrecisionContext: rel_tol must be positive");
        // rel_tol >= 10^(10-digits), compared in log10 with a rounding allowance
        if (std::log10(rel_tol) < 10 - digits - 0.5)
            throw DomainError("PrecisionContext: rel_tol below 10^(10-digits)");
        if (series_cutoff < 1) throw DomainError("PrecisionContext: series_cutoff must be positive");
    }

    /// Binary working precision: requested digits plus guard bits.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 24;
    }

    Real real(double x) const { return Real(x, bits()); }
    Real real(long x) const { return Real(x, bits()); }
    Real real(int x) const { return Real(static_cast<long>(x), bits()); }
    Real pi() const { return Real::pi(bits()); }
    Real euler_gamma() const { return Real::euler_gamma(bits()); }
    Real tol() const { return Real(rel_tol, bits()); }
    /// Roundoff floor of the working precision, ~10^(-digits).
    Real eps() const { return Real::pow10(-digits, bits()); }
};

} // namespace hecke
