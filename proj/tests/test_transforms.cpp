#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/gamma.hpp"
#include "hecke/transforms.hpp"
#include "test_util.hpp"

using namespace hecke;
using namespace hecke::test;

static const PrecisionContext ctx = PrecisionContext::make(30, 1e-12);

TEST_CASE("weight evaluation") {
    GaussianWeight unit = GaussianWeight::unit(ctx.real(40.0), ctx.real(5.0));
    SUBCASE("unit weight at its center") {
        Complex v = weight_eval(unit, Complex(ctx.real(40.0)), ctx);
        Real want = 1L + exp(-pow(ctx.real(80.0) / ctx.real(5.0), 2L));
        CHECK(rel_err_d(v, Complex(want)) < 1e-25);
    }
    SUBCASE("kuznetsov zeros at i/2 and 3i/2") {
        GaussianWeight kq = GaussianWeight::kuznetsov(ctx.real(40.0), ctx.real(5.0));
        for (double im : {0.5, -0.5, 1.5, -1.5}) {
            Complex v = weight_eval(kq, Complex(ctx.real(0.0), ctx.real(im)), ctx);
            CHECK(abs(v).to_double() < 1e-28);
        }
        CHECK_THROWS_AS(weight_eval(kq, Complex(ctx.real(0.0), ctx.real(3.2)), ctx),
                        DomainError);
    }
    SUBCASE("evenness") {
        GaussianWeight h0 = GaussianWeight::spectral_cubed(ctx.real(40.0), ctx.real(5.0));
        for (double r : {3.7, 17.0, 44.0}) {
            Complex a = weight_eval(h0, Complex(ctx.real(r)), ctx);
            Complex b = weight_eval(h0, Complex(ctx.real(-r)), ctx);
            CHECK(rel_err_d(a, b) < 1e-27);
        }
    }
    SUBCASE("derivative of the quadratic weight at -i/2") {
        // the quadratic prefactor vanishes there, leaving 2r times the bumps
        GaussianWeight h0 = GaussianWeight::spectral_cubed(ctx.real(40.0), ctx.real(5.0));
        Complex r(ctx.real(0.0), ctx.real(-0.5));
        Complex d = weight_derivative(h0, r, ctx);
        Complex um = (r - ctx.real(40.0)) / ctx.real(5.0);
        Complex up = (r + ctx.real(40.0)) / ctx.real(5.0);
        Complex want = 2L * r * (exp(-(um * um)) + exp(-(up * up)));
        CHECK(rel_err_d(d, want) < 1e-25);
    }
}

TEST_CASE("h_star zero structure at half-integers") {
    GaussianWeight kq = GaussianWeight::kuznetsov(ctx.real(100.0), ctx.real(10.0));
    GaussianWeight h0 = GaussianWeight::spectral_cubed(ctx.real(100.0), ctx.real(10.0));
    for (const GaussianWeight& w : {kq, h0}) {
        for (double s : {0.5, 1.5}) {
            auto r = h_star_full(Complex(ctx.real(s)), w, ctx, 1e-12);
            CHECK(abs(r.value).to_double() < 1e-25 * r.scale.to_double());
        }
        // continuation at -3/2: odd real-line part plus residue corrections,
        // both killed by the weight's zeros (exactly for kuznetsov, to the
        // bump tail e^{-(K/G)^2} for the quadratic weight)
        auto r = h_star_full(Complex(ctx.real(-1.5)), w, ctx, 1e-12);
        CHECK(abs(r.value).to_double() < 1e-8 * r.scale.to_double());
    }
}

TEST_CASE("h_star derivative at 1/2 matches the closed form") {
    // d/ds h* at 1/2 for the cubed-moment weight: 2 i pi^{3/2} K^3 G, to O((G/K)^2)
    Real K = ctx.real(200.0), G = ctx.real(10.0);
    GaussianWeight h0 = GaussianWeight::spectral_cubed(K, G);
    auto f = [&](const Complex& s) { return h_star(s, h0, ctx, 1e-10); };
    auto d = cauchy_derivatives(f, Complex(ctx.real(0.5)), ctx.real(0.1), 2, ctx, 1e-10);
    Real pi32 = pow(ctx.pi(), ctx.real(1.5));
    Complex want1 = mul_i(Complex(pi32 * K * K * K * G * 2));
    CHECK(rel_err_d(d[1], want1) < 0.1);
    Complex want2 = mul_i(Complex(pi32 * K * K * K * G * 8 * log(K)));
    CHECK(rel_err_d(d[2], want2) < 0.15);
}

TEST_CASE("psi_hat at 1") {
    Real T = ctx.real(200.0), Q = ctx.real(20.0);
    GaussianWeight kq = GaussianWeight::kuznetsov(T, Q);

    SUBCASE("matches 2 sqrt(pi) Q T to the stated slack") {
        Complex v = psi_hat(Complex(ctx.real(1.0)), kq, ctx, PsiHatRoute::Direct, 1e-10);
        Real want = 2L * sqrt(ctx.pi()) * Q * T;
        CHECK(rel_err_d(v, Complex(want)) < 0.15);
        CHECK(abs(v.im).to_double() < 1e-8 * v.re.to_double());
    }

    SUBCASE("tanh-reduction oracle") {
        Complex v = psi_hat(Complex(ctx.real(1.0)), kq, ctx, PsiHatRoute::Direct, 1e-10);
        // 2 int_0^inf u h(u) tanh(pi u) du over the right bump
        auto f = [&](const Real& u) {
            if (!(u > 0.0)) return Complex(ctx.bits());
            return Complex(u * 2) * weight_eval(kq, Complex(u), ctx) *
                   Complex(tanh(ctx.pi() * u));
        };
        Real W = hstar_window_halfwidth(kq, 1e-10);
        auto q = integrate_adaptive(f, max(ctx.real(0.0), T - W), T + W, ctx,
                                    {.rel_tol = 1e-10});
        CHECK(rel_err_d(v, q.value) < 1e-8);
    }
}

TEST_CASE("psi_hat route equivalence away from the cosine zeros") {
    GaussianWeight kq = GaussianWeight::kuznetsov(ctx.real(60.0), ctx.real(6.0));
    ComplexSampler rng(42);
    int done = 0;
    while (done < 8) {
        Complex z = rng.box(0.3, 2.6, -0.8, 0.8, ctx);
        double nearest = std::round(z.re.to_double());
        double dist = std::abs(z.re.to_double() - nearest);
        if (dist < 0.15 && static_cast<long>(std::abs(nearest)) % 2 == 1)
            continue; // stay clear of odd integers where cos(pi z/2) vanishes
        Complex a = psi_hat(z, kq, ctx, PsiHatRoute::Direct, 1e-11);
        Complex b;
        try {
            b = psi_hat(z, kq, ctx, PsiHatRoute::ViaHStar, 1e-11);
        } catch (const PoleError&) {
            continue;
        }
        ++done;
        CHECK(rel_err_d(a, b) < 1e-8);
    }
}

TEST_CASE("psi_hat derivatives at 1") {
    Real T = ctx.real(200.0);
    Real Q = ctx.real(std::cbrt(200.0));
    GaussianWeight kq = GaussianWeight::kuznetsov(T, Q);
    auto d = psi_hat_derivatives_at_1(3, kq, ctx, 1e-9);

    SUBCASE("m = 0 reproduces psi_hat(1)") {
        Complex v = psi_hat(Complex(ctx.real(1.0)), kq, ctx, PsiHatRoute::Direct, 1e-9);
        CHECK(rel_err_d(d[0], v) < 1e-7);
    }

    SUBCASE("two-point fit for the leading log coefficient at m = 1") {
        Real T2 = ctx.real(400.0);
        GaussianWeight kq2 = GaussianWeight::kuznetsov(T2, ctx.real(std::cbrt(400.0)));
        auto d2 = psi_hat_derivatives_at_1(1, kq2, ctx, 1e-9);
        // psi_hat'(1)/(Q T) = c0 + c11 log T; slope across two T values
        Real y1 = d[1].re / (Q * T);
        Real y2 = d2[1].re / (ctx.real(std::cbrt(400.0)) * T2);
        Real slope = (y2 - y1) / (log(T2) - log(T));
        Real want = 2L * sqrt(ctx.pi());
        CHECK(rel_err_d(slope, want) < 0.2);
    }
}

TEST_CASE("transform decay certificates at T = 100") {
    Real T = ctx.real(100.0), Q = ctx.real(5.0);
    GaussianWeight kq = GaussianWeight::kuznetsov(T, Q);
    HStarCache cache(kq, ctx.real(0.125), ctx, 1e-9);

    SUBCASE("g(12) scale bound") {
        Complex g12 = transform_g_k(12, kq, ctx, 0.125, 1e-9, &cache);
        Real lhs = abs(g12) * pow(T, ctx.real(3.5)) * ctx.real(248832.0) / Q; // 12^5
        CHECK(lhs.to_double() < 100.0);
    }

    SUBCASE("h0 exponential bound") {
        for (double r : {2.0, 4.0}) {
            Complex h0v = transform_h0(ctx.real(r), kq, ctx, 0.125, 1e-9, &cache);
            Real bound = Q * exp(-ctx.pi() * ctx.real(r)) * 100;
            CHECK(abs(h0v) < bound);
        }
    }

    SUBCASE("h1 at r = T is exponentially small next to r = T/2") {
        Complex mid = transform_h1(ctx.real(50.0), kq, ctx, 0.125, 1e-9, &cache);
        Complex edge = transform_h1(ctx.real(100.0), kq, ctx, 0.125, 1e-9, &cache);
        CHECK(abs(edge).to_double() < 1e-4 * abs(mid).to_double());
    }
}

TEST_CASE("psi_plus / psi_minus") {
    Real K = ctx.real(60.0), G = ctx.real(5.0);
    GaussianWeight h0 = GaussianWeight::spectral_cubed(K, G);

    SUBCASE("zero weight gives zero") {
        GaussianWeight z = GaussianWeight::zero_weight(ctx.bits());
        CHECK(psi_minus(ctx.real(1.0), z, ctx.real(-0.7), ctx).is_zero());
        CHECK(psi_plus(ctx.real(2.0), z, ctx.real(0.2), ctx).is_zero());
    }

    SUBCASE("contour-shift invariance of psi_minus at x = 1") {
        Complex a = psi_minus(ctx.real(1.0), h0, ctx.real(-0.7), ctx, 1e-11);
        Complex b = psi_minus(ctx.real(1.0), h0, ctx.real(0.2), ctx, 1e-11);
        CHECK(rel_err_d(a, b) < 1e-7);
    }

    SUBCASE("contour-shift invariance of psi_plus across both strips") {
        Complex a = psi_plus(ctx.real(2.0), h0, ctx.real(-1.2), ctx, 1e-11);
        Complex b = psi_plus(ctx.real(2.0), h0, ctx.real(0.2), ctx, 1e-11);
        CHECK(rel_err_d(a, b) < 1e-7);
    }

    SUBCASE("x^beta envelope") {
        Real beta = ctx.real(0.2);
        // mass of the integrand bound at x = 1
        auto mass_f = [&](const Real& t) {
            Complex s(beta, t);
            Complex g2 = exp(2L * log_gamma(Complex(ctx.real(0.5)) - s, ctx));
            return Complex(abs(g2 * tan(Complex(ctx.pi()) * s) *
                               h_star(s, h0, ctx, 1e-9)));
        };
        double cap = hstar_line_cap(h0, 1e-9);
        auto mass = integrate_adaptive(mass_f, ctx.real(-cap), ctx.real(cap), ctx,
                                       {.rel_tol = 1e-6});
        for (double x : {0.5, 2.0}) {
            Complex v = psi_plus(ctx.real(x), h0, beta, ctx, 1e-9);
            Real bound = mass.value.re * pow(ctx.real(x), beta) * ctx.real(1.05);
            CHECK(abs(v) < bound);
        }
    }

    CHECK_THROWS_AS(psi_plus(ctx.real(1.0), h0, ctx.real(-0.5), ctx), PoleError);
    CHECK_THROWS_AS(psi_plus(ctx.real(1.0), h0, ctx.real(0.9), ctx), DomainError);
}

TEST_CASE("u_nu transform") {
    Real K = ctx.real(100.0);
    SUBCASE("zero polynomial gives zero") {
        CHECK(u_nu_transform(ctx.real(5.0), K, {ctx.real(0.0)}, 2.0, ctx).is_zero());
    }
    SUBCASE("independent-quadrature cross-check for u = 1 at x = K^2") {
        Real x = K * K;
        Complex v = u_nu_transform(x, K, {ctx.real(1.0)}, 2.0, ctx, 0.0, 1e-11);
        // brute trapezoid on the same line, independent step policy
        const mpfr_prec_t p = ctx.bits();
        Real lambda = ctx.real(2.0) * log(K);
        double lam = lambda.to_double();
        double a = -1.0 / lam;
        Real log_arg = log(ctx.real(4.0) * ctx.pi() * ctx.pi() * x / (K * K));
        double cap = (2.0 * lam / M_PI) * (std::log(1e11) + std::log(2.0 + lam) + 6.0) + 8 * lam;
        long n_steps = 400000;
        Real h = ctx.real(2 * cap) / n_steps;
        Complex acc(p);
        for (long j = 0; j <= n_steps; ++j) {
            Real t = ctx.real(-cap) + h * j;
            Complex wp(ctx.real(a), t);
            Complex term = exp(wp * Complex(log_arg)) * gamma_fn(wp / Complex(lambda), ctx);
            if (j == 0 || j == n_steps) term = term / 2L;
            acc += term;
        }
        Complex brute = acc * h / Complex(ctx.pi() * 2 * lambda);
        CHECK(rel_err_d(v, brute) < 1e-6);
    }
    SUBCASE("magnitude bound at x = 4 K^2") {
        Real x = 4L * K * K;
        std::vector<Real> poly{ctx.real(1.0), ctx.real(0.5), ctx.real(-0.25)};
        Complex v = u_nu_transform(x, K, poly, 2.0, ctx, 0.0, 1e-10);
        Real coeff_sum = ctx.real(1.0) + ctx.real(0.5) + ctx.real(0.25);
        Real bound = pow(x / (K * K), -ctx.real(2.0) / log(K)) * log(K) * log(K) *
                     (1L + coeff_sum);
        CHECK(abs(v) < bound);
    }
}

TEST_CASE("psi_kernel contour-shift invariance") {
    Real T = ctx.real(50.0), Q = ctx.real(10.0);
    GaussianWeight kq = GaussianWeight::kuznetsov(T, Q);
    Complex a = psi_kernel(ctx.real(1.0), kq, ctx.real(-2.0 / 3), ctx, 1e-11);
    Complex b = psi_kernel(ctx.real(1.0), kq, ctx.real(2.0 / 3), ctx, 1e-11);
    Complex c = psi_kernel(ctx.real(1.0), kq, ctx.real(0.1), ctx, 1e-11);
    CHECK(rel_err_d(a, b) < 1e-7);
    CHECK(rel_err_d(c, b) < 1e-7);

    GaussianWeight z = GaussianWeight::zero_weight(ctx.bits());
    CHECK(psi_kernel(ctx.real(1.0), z, ctx.real(0.1), ctx).is_zero());

    CHECK_THROWS_AS(psi_kernel(ctx.real(1.0), kq, ctx.real(0.5), ctx), PoleError);
}
