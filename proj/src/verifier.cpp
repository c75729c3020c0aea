#include "ode/verifier.hpp"

namespace ode {

ComplexVerdict verify_complex(const LinearOperator& op, const Polynomial& q,
                              const ComplexRational& gamma, const Polynomial& r) {
    Polynomial residual = apply_shifted(op, q, gamma) - r;
    return {residual.is_zero(), std::move(residual)};
}

RealVerdict verify_real(const LinearOperator& op, const ExpTrigPoly& sol,
                        const ExpTrigPoly& forcing) {
    ExpTrigPoly residual = apply_to_exptrig(op, sol) - forcing;
    return {residual.is_zero(), std::move(residual)};
}

} // namespace ode
