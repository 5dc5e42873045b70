#pragma once

#include "hecke/real.hpp"

namespace hecke {

/// Complex number over Real. Finite components are an invariant of every
/// operation here; NaN is treated as an error state by the checked entry
/// points (see require_finite).
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t p) : re(p), im(p) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(re.prec()) {}
    Complex(double r, double i, mpfr_prec_t p) : re(r, p), im(i, p) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str(int digits = 20) const {
        return "(" + re.str(digits) + (im.sign() < 0 ? " - " : " + ") +
               abs(im).str(digits) + "i)";
    }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator+(const Real& a, const Complex& b) { return {a + b.re, b.im}; }
    friend Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
    friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
    friend Complex operator+(long a, const Complex& b) { return {b.re + a, b.im}; }
    friend Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }

    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(long a, const Complex& b) { return b * a; }

    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
    friend Complex operator/(long a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {a * b.re / d, -(a * b.im) / d};
    }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }
/// i*z without multiplications.
inline Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}
/// Principal branch, Im in (-pi, pi].
inline Complex log(const Complex& z) {
    return {Real(0.5, z.prec()) * log(norm(z)), arg(z)};
}
inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re));
    return exp(Complex(Real(0.5, z.prec())) * log(z));
}
inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}
inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}
inline Complex tan(const Complex& z) { return sin(z) / cos(z); }
inline Complex sinh(const Complex& z) {
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}
inline Complex cosh(const Complex& z) {
    return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}
inline Complex tanh(const Complex& z) { return sinh(z) / cosh(z); }

/// z^n by binary powering (n may be negative).
inline Complex pow(const Complex& z, long n) {
    mpfr_prec_t p = z.prec();
    if (n == 0) return Complex(Real(1.0, p));
    bool inv = n < 0;
    unsigned long k = inv ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Complex base = z, acc(Real(1.0, p));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return inv ? 1L / acc : acc;
}
/// Principal power z^w = exp(w log z).
inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }
/// b^w for positive real base.
inline Complex pow(const Real& b, const Complex& w) {
    return exp(w * Complex(log(b)));
}

inline void require_finite(const Complex& z, const char* what) {
    if (!z.is_finite()) throw PrecisionError(std::string(what) + ": non-finite value (NaN is an error state)");
}
inline void require_finite(const Real& x, const char* what) {
    if (!x.is_finite()) throw PrecisionError(std::string(what) + ": non-finite value (NaN is an error state)");
}

} // namespace hecke
