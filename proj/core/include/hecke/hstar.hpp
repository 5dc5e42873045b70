#pragma once

#include <mutex>
#include <unordered_map>

#include "hecke/quadrature.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// Result of the spectral transform h*(s) together with the natural scale of
/// its defining integral (for relative-zero assertions).
struct HStarResult {
    Complex value;
    Real scale;
};

/// h*(s) = int_R u h(u) Gamma(s+iu)/Gamma(1-s+iu) du, continued past
/// Re s = 0 by adding the residues of the integrand poles that cross the
/// real u-axis. The result is the entire continuation wherever the weight is
/// analytic, which is what makes the kernel contour shifts pole-free at the
/// half-integers where the weight's own zeros sit.
///
/// Re s must stay >= 1e-3 away from the non-positive integers, where a pole
/// of the integrand sits on the integration path.
HStarResult h_star_full(const Complex& s, const GaussianWeight& w,
                        const PrecisionContext& ctx, double rel_tol = 0);

Complex h_star(const Complex& s, const GaussianWeight& w,
               const PrecisionContext& ctx, double rel_tol = 0);

/// Memoized h* evaluations along a fixed vertical line Re s = sigma.
/// Grid drivers (decay certificates, kernel sums over many arguments) share
/// one instance so the expensive transform is paid once per node.
class HStarCache {
public:
    HStarCache(GaussianWeight w, Real sigma, PrecisionContext ctx, double rel_tol = 0);

    Complex at(const Real& t) const;
    const Real& abscissa() const { return sigma_; }
    const GaussianWeight& weight() const { return weight_; }
    double rel_tol() const { return rel_tol_; }
    size_t size() const;

private:
    GaussianWeight weight_;
    Real sigma_;
    PrecisionContext ctx_;
    double rel_tol_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, Complex> memo_;
};

/// Gaussian window half-width used for the u-integrals: wide enough that the
/// discarded tail certifies below tol, never narrower than width*log(center).
Real hstar_window_halfwidth(const GaussianWeight& w, double tol);

/// integral of f over the weight's effective support (the two Gaussian
/// windows, merged when they overlap), with an edge-value certificate for the
/// discarded tail. Throws CertificationError when widening cannot certify.
struct WindowIntegral {
    Complex value;
    Real scale; ///< integral of |f| over the windows
    std::vector<std::pair<double, double>> segments; ///< intervals integrated
};
/// Set even = true when f(-u) = f(u): only the u >= 0 part is evaluated.
/// tail_probe, when given, is the function whose edge values certify the
/// discarded tail (used when f had slowly-decaying parts removed that are
/// integrated in closed form by the caller).
WindowIntegral gaussian_window_integrate(const GaussianWeight& w, const ComplexIntegrand& f,
                                         const PrecisionContext& ctx, double tol,
                                         bool even = false,
                                         const ComplexIntegrand* tail_probe = nullptr);

} // namespace hecke
