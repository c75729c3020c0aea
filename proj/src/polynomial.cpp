#include "ode/polynomial.hpp"

#include <stdexcept>

namespace ode {

Polynomial Polynomial::monomial(ComplexRational c, std::size_t k) {
    std::vector<ComplexRational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

bool Polynomial::is_real() const {
    for (const auto& c : coeffs_)
        if (!c.is_real())
            return false;
    return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<ComplexRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<ComplexRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<ComplexRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<ComplexRational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = -coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const ComplexRational& c) const {
    std::vector<ComplexRational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeffs_[i] * c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<ComplexRational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * ComplexRational(Rational(Integer(i)));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative_zero_const() const {
    if (coeffs_.empty())
        return {};
    std::vector<ComplexRational> v(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational inv(Integer(1), Integer(i + 1));
        v[i + 1] = coeffs_[i] * ComplexRational(inv);
    }
    return Polynomial(std::move(v));
}

ComplexRational Polynomial::eval(const ComplexRational& z) const {
    ComplexRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

std::vector<ComplexRational> Polynomial::taylor_coeffs_at(const ComplexRational& gamma) const {
    if (is_zero())
        throw std::invalid_argument("taylor_coeffs_at: zero polynomial");
    std::vector<ComplexRational> out;
    out.reserve(coeffs_.size());
    Polynomial d = *this;
    Integer factorial = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0)
            factorial *= Integer(k);
        const ComplexRational inv_fact(Rational(Integer(1), factorial));
        out.push_back(d.eval(gamma) * inv_fact);
        d = d.derivative();
    }
    return out;
}

Polynomial Polynomial::real_part() const {
    std::vector<ComplexRational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ComplexRational(coeffs_[i].re);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::imag_part() const {
    std::vector<ComplexRational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ComplexRational(coeffs_[i].im);
    return Polynomial(std::move(v));
}

} // namespace ode
