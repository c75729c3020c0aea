#pragma once

#include "ode/exptrig.hpp"
#include "ode/polynomial.hpp"

#include <vector>

namespace ode {

// Constant-coefficient linear differential operator
// a_n d^n/dt^n + ... + a_1 d/dt + a_0, with real rational a_j and a_n != 0.
class LinearOperator {
public:
    // coeffs[j] = a_j. Trailing zeros are trimmed; order must end up >= 1.
    explicit LinearOperator(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t j) const {
        return j < coeffs_.size() ? coeffs_[j] : Rational{};
    }

    // p(t) = sum a_j t^j
    Polynomial characteristic_polynomial() const;

    friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Applying the operator to Q(t) e^{gamma t} yields S(t) e^{gamma t}; both
// routes below return S.

// S = sum_k p^(k)(gamma)/k! * Q^(k), via the characteristic polynomial's
// Taylor coefficients at gamma.
Polynomial apply_via_taylor(const LinearOperator& op, const Polynomial& q,
                            const ComplexRational& gamma);

// Same S by the shifted product rule, d^j/dt^j {Q e^{gamma t}} =
// e^{gamma t} (D + gamma)^j Q. Does not touch Taylor coefficients; this is
// the independent route used for verification.
Polynomial apply_shifted(const LinearOperator& op, const Polynomial& q,
                         const ComplexRational& gamma);

// Term-by-term real-form application.
ExpTrigPoly apply_to_exptrig(const LinearOperator& op, const ExpTrigPoly& e);

} // namespace ode
