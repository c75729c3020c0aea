#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ode {

using Integer = boost::multiprecision::cpp_int;

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

// Exact rational scalar. Always reduced, denominator positive, zero is 0/1.
// Backed by boost::multiprecision::cpp_rational, which maintains exactly
// this canonical form.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw division_by_zero{};
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(cpp_rational(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(cpp_rational(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(cpp_rational(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(cpp_rational(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw division_by_zero{};
        return Rational(cpp_rational(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or just "p" when q = 1.
    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1)
            s += "/" + denominator().str();
        return s;
    }

    // Accepts "p", "p/q", optional leading sign.
    static Rational parse(std::string_view text);

private:
    using cpp_rational = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rational v) : v_(std::move(v)) {}
    cpp_rational v_;
};

} // namespace ode
