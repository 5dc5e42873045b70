#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

/// Arbitrary-precision real number. Thin RAII wrapper over mpfr_t.
///
/// Every value carries its own precision, fixed at construction. Binary
/// operations round to the larger of the two operand precisions, so precision
/// propagates from the values a PrecisionContext creates; there is no ambient
/// precision state anywhere.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    /// Parse a decimal string at the given precision.
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("Real: cannot parse '" + s + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real pi(mpfr_prec_t p) { Real r(p); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real euler_gamma(mpfr_prec_t p) { Real r(p); mpfr_const_euler(r.v_, MPFR_RNDN); return r; }
    static Real nan(mpfr_prec_t p) { Real r(p); mpfr_set_nan(r.v_); return r; }
    /// 10^e with integer e (exact scaling up to rounding at p bits).
    static Real pow10(long e, mpfr_prec_t p) {
        Real r(p);
        mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.v_, 1u, r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Base-2 exponent of the value (0 for zero); cheap magnitude probe.
    long exp2() const { return mpfr_zero_p(v_) ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_set_si(r.v_, a, MPFR_RNDN); mpfr_div(r.v_, r.v_, b.v_, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
    mpfr_t v_;
};

#define HECKE_REAL_FN1(name, mpfr_name)                                  \
    inline Real name(const Real& x) {                                    \
        Real r(x.prec());                                                \
        mpfr_name(r.raw(), x.raw(), MPFR_RNDN);                          \
        return r;                                                        \
    }

HECKE_REAL_FN1(abs, mpfr_abs)
HECKE_REAL_FN1(sqrt, mpfr_sqrt)
HECKE_REAL_FN1(exp, mpfr_exp)
HECKE_REAL_FN1(expm1, mpfr_expm1)
HECKE_REAL_FN1(log, mpfr_log)
HECKE_REAL_FN1(log1p, mpfr_log1p)
HECKE_REAL_FN1(log2_fn, mpfr_log2)
HECKE_REAL_FN1(sin, mpfr_sin)
HECKE_REAL_FN1(cos, mpfr_cos)
HECKE_REAL_FN1(tan, mpfr_tan)
HECKE_REAL_FN1(sinh, mpfr_sinh)
HECKE_REAL_FN1(cosh, mpfr_cosh)
HECKE_REAL_FN1(tanh, mpfr_tanh)
HECKE_REAL_FN1(atan, mpfr_atan)
HECKE_REAL_FN1(erfc, mpfr_erfc)
#undef HECKE_REAL_FN1

inline Real floor(const Real& x) { Real r(x.prec()); mpfr_floor(r.raw(), x.raw()); return r; }
inline Real ceil(const Real& x) { Real r(x.prec()); mpfr_ceil(r.raw(), x.raw()); return r; }

inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, const Real& e) {
    Real r(std::max(b.prec(), e.prec()));
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, long e) {
    Real r(b.prec());
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.prec(), y.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

} // namespace hecke
