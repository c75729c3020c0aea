#pragma once

#include "ode/diffop.hpp"
#include "ode/exptrig.hpp"
#include "ode/polynomial.hpp"

namespace ode {

// Ground-truth checks for claimed solutions. Both routes are independent of
// the Taylor-coefficient method: verify_complex uses the shifted product
// rule, verify_real the term-by-term real differentiation rules.

struct ComplexVerdict {
    bool pass = false;
    Polynomial residual; // apply_shifted(op, q, gamma) - r
};

struct RealVerdict {
    bool pass = false;
    ExpTrigPoly residual; // apply_to_exptrig(op, sol) - forcing
};

// Does Q e^{gamma t} solve P(d/dt) z = R e^{gamma t}?
ComplexVerdict verify_complex(const LinearOperator& op, const Polynomial& q,
                              const ComplexRational& gamma, const Polynomial& r);

// Does sol solve P(d/dt) x = forcing, both in real canonical form?
RealVerdict verify_real(const LinearOperator& op, const ExpTrigPoly& sol,
                        const ExpTrigPoly& forcing);

} // namespace ode
