#include "ode/diffop.hpp"

#include <stdexcept>

namespace ode {

LinearOperator::LinearOperator(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    if (coeffs_.size() < 2)
        throw std::invalid_argument("LinearOperator: order must be at least 1");
}

Polynomial LinearOperator::characteristic_polynomial() const {
    std::vector<ComplexRational> v(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        v[j] = ComplexRational(coeffs_[j]);
    return Polynomial(std::move(v));
}

Polynomial apply_via_taylor(const LinearOperator& op, const Polynomial& q,
                            const ComplexRational& gamma) {
    const auto c = op.characteristic_polynomial().taylor_coeffs_at(gamma);
    Polynomial s;
    Polynomial d = q;
    for (const auto& ck : c) {
        s = s + d.scaled(ck);
        d = d.derivative();
    }
    return s;
}

Polynomial apply_shifted(const LinearOperator& op, const Polynomial& q,
                         const ComplexRational& gamma) {
    Polynomial s;
    Polynomial d = q; // (D + gamma)^j Q
    for (std::size_t j = 0; j <= op.order(); ++j) {
        s = s + d.scaled(ComplexRational(op.coeff(j)));
        d = d.derivative() + d.scaled(gamma);
    }
    return s;
}

ExpTrigPoly apply_to_exptrig(const LinearOperator& op, const ExpTrigPoly& e) {
    ExpTrigPoly s;
    ExpTrigPoly d = e;
    for (std::size_t j = 0; j <= op.order(); ++j) {
        s = s + d.scaled(op.coeff(j));
        d = d.derivative();
    }
    return s;
}

} // namespace ode
