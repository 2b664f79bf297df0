#pragma once

#include <string>

#include "lucaszeta/real.hpp"

namespace lucaszeta {

// Arbitrary-precision complex number as a pair of Reals. All evaluators in
// this library work at an explicit working precision, so no global rounding
// state is involved.
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(long prec) : re(Real::of(0L, prec)), im(Real::of(0L, prec)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex of(long r, long prec) { return {Real::of(r, prec), Real::of(0L, prec)}; }
    static Complex of(const Rational& r, long prec) {
        return {Real::of(r, prec), Real::of(0L, prec)};
    }
    static Complex of(const Rational& r, const Rational& i, long prec) {
        return {Real::of(r, prec), Real::of(i, prec)};
    }

    long prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_real() const { return im.is_zero(); }

    Complex round_to(long prec) const { return {re.round_to(prec), im.round_to(prec)}; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }

    Complex conj() const { return {re, -im}; }

    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
    friend Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

    // exp(a) via one sin/cos reduction.
    friend Complex exp(const Complex& a) {
        Real m = exp(a.re);
        Real s(a.im.prec()), c(a.im.prec());
        sin_cos(s, c, a.im);
        return {m * c, m * s};
    }

    // Principal logarithm: log|a| + i*atan2(im, re).
    friend Complex log(const Complex& a) { return {log(abs(a)), atan2(a.im, a.re)}; }

    // Integer power by binary exponentiation (negative via reciprocal).
    friend Complex pow_si(const Complex& a, long e);

    std::string str(std::size_t digits = 0) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

// base^z for a positive real base: single-valued via the real logarithm.
Complex real_pow(const Real& base, const Complex& z);

} // namespace lucaszeta
