#pragma once

#include "ode/rational.hpp"

#include <string>
#include <tuple>

namespace ode {

// Gaussian rational: complex scalar with exact rational parts.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(long long r) : re(r) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ComplexRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    ComplexRational operator-() const { return {-re, -im}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        if (b.is_zero())
            throw division_by_zero{};
        const Rational n = b.norm_sq();
        const ComplexRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }

    ComplexRational& operator+=(const ComplexRational& o) { *this = *this + o; return *this; }
    ComplexRational& operator-=(const ComplexRational& o) { *this = *this - o; return *this; }
    ComplexRational& operator*=(const ComplexRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;

    // "a+bi" forms; pure-real and pure-imaginary parts are elided.
    std::string str() const;

    // Accepts "a", "bi", "a+bi", "a-bi" (also "i", "-i", "a+i").
    static ComplexRational parse(std::string_view text);
};

inline ComplexRational operator*(const Rational& a, const ComplexRational& b) {
    return ComplexRational(a) * b;
}

} // namespace ode
