#include "hecke/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hecke {

namespace {

std::mutex g_gauss_mutex;
std::map<std::pair<int, mpfr_prec_t>, GaussRule> g_gauss_cache;

GaussRule make_gauss(int n, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    GaussRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    Real one(1.0, wp);
    for (int i = 1; i <= n; ++i) {
        // Newton from the Chebyshev estimate; quadratic convergence from a
        // double seed reaches any practical precision in a handful of steps.
        double seed = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        Real x(seed, wp);
        Real dp(wp);
        for (int it = 0; it < 64; ++it) {
            Real p0(1.0, wp), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = Real(n, wp) * (x * p1 - p0) / (x * x - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx).exp2() < -(prec + 8)) break;
        }
        // one more Legendre pass for the weight at the converged node
        Real p0(1.0, wp), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = Real(n, wp) * (x * p1 - p0) / (x * x - one);
        rule.nodes.emplace_back(x);
        rule.weights.emplace_back(Real(2.0, wp) / ((one - x * x) * dp * dp));
    }
    return rule;
}

GaussRule make_clenshaw_curtis(int n, mpfr_prec_t prec) {
    // Trefethen's clencurt construction, for even n.
    const mpfr_prec_t wp = prec + 16;
    GaussRule rule;
    Real pi = Real::pi(wp);
    std::vector<Real> theta;
    theta.reserve(n + 1);
    for (int j = 0; j <= n; ++j) theta.push_back(pi * j / n);
    rule.nodes.reserve(n + 1);
    for (int j = 0; j <= n; ++j) rule.nodes.push_back(cos(theta[j]));
    rule.weights.assign(n + 1, Real(wp));
    Real end_w = Real(1.0, wp) / (static_cast<long>(n) * n - 1);
    rule.weights[0] = end_w;
    rule.weights[n] = end_w;
    for (int j = 1; j < n; ++j) {
        Real v(1.0, wp);
        for (int k = 1; k <= n / 2 - 1; ++k)
            v -= Real(2.0, wp) * cos(theta[j] * (2 * k)) / (4L * k * k - 1);
        v -= cos(theta[j] * n) / (static_cast<long>(n) * n - 1);
        rule.weights[j] = v * 2 / n;
    }
    return rule;
}

struct PanelEval {
    Complex value;     // high-order estimate
    Real abs_value;
    Real err;          // |high - embedded low| on this panel
};

// One Clenshaw-Curtis evaluation of order `order` with the embedded
// order/2 estimate from the even-indexed nodes.
PanelEval eval_panel(const ComplexIntegrand& f, const Real& a, const Real& b,
                     const GaussRule& hi, const GaussRule& lo, mpfr_prec_t p) {
    Real half = (b - a) / 2;
    Real mid = (a + b) / 2;
    Complex acc_hi(p), acc_lo(p);
    Real abs_acc(p);
    const size_t n = hi.nodes.size();
    for (size_t i = 0; i < n; ++i) {
        Real x = mid + half * hi.nodes[i];
        Complex v = f(x);
        acc_hi += hi.weights[i] * v;
        abs_acc += hi.weights[i] * abs(v);
        if (i % 2 == 0) acc_lo += lo.weights[i / 2] * v;
    }
    return {acc_hi * half, abs_acc * half, abs(acc_hi - acc_lo) * half};
}

struct AdaptiveState {
    const ComplexIntegrand* f;
    const GaussRule* hi;
    const GaussRule* lo;
    mpfr_prec_t p;
    long evals = 0;
    long max_evals = 0;
    int rule_order = 32;
    Complex total;
    Real abs_total;
    Real err_total;
    bool failed = false;
};

// Depth-first refinement on the embedded error estimate, tolerance split in
// half per level.
void refine(AdaptiveState& st, const Real& a, const Real& b, const PanelEval& whole,
            const Real& tol_abs, int depth) {
    if (st.failed) return;
    if (whole.err <= tol_abs || depth <= 0) {
        if (whole.err > tol_abs) st.failed = true;
        st.total += whole.value;
        st.abs_total += whole.abs_value;
        st.err_total += whole.err;
        return;
    }
    if (st.evals > st.max_evals) {
        st.failed = true;
        return;
    }
    Real mid = (a + b) / 2;
    PanelEval left = eval_panel(*st.f, a, mid, *st.hi, *st.lo, st.p);
    PanelEval right = eval_panel(*st.f, mid, b, *st.hi, *st.lo, st.p);
    st.evals += 2 * (st.rule_order + 1);
    Real half_tol = tol_abs / 2;
    refine(st, a, mid, left, half_tol, depth - 1);
    refine(st, mid, b, right, half_tol, depth - 1);
}

} // namespace

const GaussRule& gauss_legendre(int n, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    auto key = std::make_pair(n, prec);
    auto it = g_gauss_cache.find(key);
    if (it == g_gauss_cache.end())
        it = g_gauss_cache.emplace(key, make_gauss(n, prec)).first;
    return it->second;
}

const GaussRule& clenshaw_curtis(int n, mpfr_prec_t prec) {
    if (n < 4 || n % 2 != 0) throw DomainError("clenshaw_curtis: n must be even and >= 4");
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    auto key = std::make_pair(-n, prec);
    auto it = g_gauss_cache.find(key);
    if (it == g_gauss_cache.end())
        it = g_gauss_cache.emplace(key, make_clenshaw_curtis(n, prec)).first;
    return it->second;
}

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, const Real& a, const Real& b,
                                    const PrecisionContext& ctx, AdaptiveOptions opt,
                                    const std::vector<Real>* initial_breaks) {
    const mpfr_prec_t p = ctx.bits();
    const double rel = opt.rel_tol > 0 ? opt.rel_tol : ctx.rel_tol;
    int order = opt.rule_order;
    if (order % 4 != 0) order += 4 - order % 4;
    const GaussRule& hi = clenshaw_curtis(order, p);
    const GaussRule& lo = clenshaw_curtis(order / 2, p);

    std::vector<Real> breaks;
    breaks.push_back(a);
    if (initial_breaks)
        for (const Real& x : *initial_breaks)
            if (x > a && x < b) breaks.push_back(x);
    breaks.push_back(b);

    // Coarse pass to fix the scale, then a refining pass against it.
    std::vector<PanelEval> coarse;
    coarse.reserve(breaks.size() - 1);
    Real scale(p);
    long evals0 = 0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        coarse.push_back(eval_panel(f, breaks[i], breaks[i + 1], hi, lo, p));
        evals0 += order + 1;
        scale += coarse.back().abs_value;
    }
    if (scale.is_zero()) scale = Real(1.0, p);

    Real tol_abs = scale * Real(rel, p);
    if (opt.abs_floor > 0) tol_abs = max(tol_abs, Real(opt.abs_floor, p));

    AdaptiveState st;
    st.f = &f;
    st.hi = &hi;
    st.lo = &lo;
    st.p = p;
    st.max_evals = opt.max_evaluations;
    st.rule_order = order;
    st.total = Complex(p);
    st.abs_total = Real(p);
    st.err_total = Real(p);
    st.evals = evals0;

    Real per_panel_tol = tol_abs / static_cast<long>(coarse.size());
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
        refine(st, breaks[i], breaks[i + 1], coarse[i], per_panel_tol, opt.max_depth);

    if (st.failed && opt.throw_on_failure)
        throw CertificationError("integrate_adaptive: tolerance not certified within budget");
    require_finite(st.total, "integrate_adaptive");
    return {st.total, st.abs_total, st.err_total, st.evals};
}

CircleCoefficients circle_coefficients(const std::function<Complex(const Complex&)>& f,
                                       const Complex& center, const Real& radius,
                                       int kmax_pos, int kmax_neg,
                                       const PrecisionContext& ctx, double rel_tol) {
    const mpfr_prec_t p = ctx.bits();
    const double rel = rel_tol > 0 ? rel_tol : ctx.rel_tol;
    int n = 32;
    while (n < 4 * std::max(kmax_pos, kmax_neg) + 16) n *= 2;

    std::vector<Complex> vals;
    auto eval_ring = [&](int count, int stride_offset) {
        // evaluate at theta_j = 2 pi (j + offset/2) / count
        Real two_pi = Real::pi(p) * 2;
        for (int j = 0; j < count; ++j) {
            Real theta = two_pi * (Real(j, p) + Real(stride_offset ? 0.5 : 0.0, p)) / count;
            Complex w = center + Complex(radius * cos(theta), radius * sin(theta));
            vals.push_back(f(w));
        }
    };
    eval_ring(n, 0);

    auto compute = [&](const std::vector<Complex>& pts) {
        CircleCoefficients out;
        int count = static_cast<int>(pts.size());
        Real two_pi = Real::pi(p) * 2;
        out.mean_abs = Real(p);
        for (auto& v : pts) out.mean_abs += abs(v);
        out.mean_abs /= count;
        for (int k = 0; k <= kmax_pos; ++k) {
            Complex acc(p);
            for (int j = 0; j < count; ++j) {
                Real theta = two_pi * j / count;
                acc += pts[j] * Complex(cos(theta * k), -sin(theta * k));
            }
            out.pos.push_back(acc / count / Complex(pow(radius, static_cast<long>(k))));
        }
        for (int k = 1; k <= kmax_neg; ++k) {
            Complex acc(p);
            for (int j = 0; j < count; ++j) {
                Real theta = two_pi * j / count;
                acc += pts[j] * Complex(cos(theta * k), sin(theta * k));
            }
            out.neg.push_back(acc / count * Complex(pow(radius, static_cast<long>(k))));
        }
        return out;
    };

    // order points by angle: with doubling, new points interleave old ones
    std::vector<Complex> ordered = vals;
    CircleCoefficients prev = compute(ordered);
    for (int round = 0; round < 8; ++round) {
        std::vector<Complex> half;
        half.reserve(ordered.size());
        vals.clear();
        eval_ring(static_cast<int>(ordered.size()), 1);
        half = vals;
        std::vector<Complex> merged;
        merged.reserve(2 * ordered.size());
        for (size_t j = 0; j < ordered.size(); ++j) {
            merged.push_back(ordered[j]);
            merged.push_back(half[j]);
        }
        ordered = std::move(merged);
        CircleCoefficients cur = compute(ordered);
        // converged when every requested coefficient moved by < tol * scale
        Real tol = max(cur.mean_abs, Real(1e-300, p)) * Real(rel, p);
        bool ok = true;
        for (int k = 0; k <= kmax_pos && ok; ++k) {
            Real sc = pow(radius, static_cast<long>(k));
            if (abs(cur.pos[k] - prev.pos[k]) * sc > tol) ok = false;
        }
        for (int k = 1; k <= kmax_neg && ok; ++k) {
            Real sc = 1L / pow(radius, static_cast<long>(k));
            if (abs(cur.neg[k - 1] - prev.neg[k - 1]) * sc > tol) ok = false;
        }
        if (ok) return cur;
        prev = std::move(cur);
    }
    throw CertificationError("circle_coefficients: coefficients did not stabilize");
}

std::vector<Complex> cauchy_derivatives(const std::function<Complex(const Complex&)>& f,
                                        const Complex& center, const Real& radius,
                                        int m_max, const PrecisionContext& ctx,
                                        double rel_tol) {
    CircleCoefficients c = circle_coefficients(f, center, radius, m_max, 0, ctx, rel_tol);
    std::vector<Complex> out;
    const mpfr_prec_t p = ctx.bits();
    Real fact(1.0, p);
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) fact *= m;
        out.push_back(c.pos[m] * Complex(fact));
    }
    return out;
}

std::vector<Real> symmetric_breaks(const Real& h, double core, double core_width,
                                   mpfr_prec_t prec) {
    std::vector<Real> br;
    double hd = h.to_double();
    core = std::min(core, hd);
    std::vector<double> pos;
    for (double x = core_width; x < core; x += core_width) pos.push_back(x);
    for (double x = core; x < hd; x *= 1.6) pos.push_back(x);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) br.emplace_back(-*it, prec);
    br.emplace_back(0.0, prec);
    for (double x : pos) br.emplace_back(x, prec);
    return br;
}

} // namespace hecke
