#pragma once

#include "ode/complex_rational.hpp"

#include <optional>
#include <vector>

namespace ode {

// Dense univariate polynomial over ComplexRational, coefficient of t^i at
// index i. Canonical form: no trailing zero coefficients; the zero
// polynomial stores nothing and has no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ComplexRational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(ComplexRational c) { return Polynomial({std::move(c)}); }
    // c * t^k
    static Polynomial monomial(ComplexRational c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_real() const;

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<ComplexRational>& coeffs() const { return coeffs_; }
    // Coefficient of t^i, zero beyond the stored degree.
    ComplexRational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : ComplexRational{};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const ComplexRational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial derivative() const;

    // Antiderivative with constant term fixed to zero.
    Polynomial antiderivative_zero_const() const;

    // Horner evaluation.
    ComplexRational eval(const ComplexRational& z) const;

    // Coefficients c_k of the re-expansion p(t) = sum c_k (t - gamma)^k,
    // c_k = p^(k)(gamma) / k!. Throws std::invalid_argument on the zero
    // polynomial.
    std::vector<ComplexRational> taylor_coeffs_at(const ComplexRational& gamma) const;

    // Real and imaginary component polynomials.
    Polynomial real_part() const;
    Polynomial imag_part() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<ComplexRational> coeffs_;
};

} // namespace ode
