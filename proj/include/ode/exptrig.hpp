#pragma once

#include "ode/polynomial.hpp"

#include <map>
#include <tuple>

namespace ode {

enum class TrigKind { PureExp, Cos, Sin };

// Key of one canonical term poly(t) * e^{alpha t} * {1, cos, sin}(beta t + delta).
// beta >= 0 always; beta = 0 forces PureExp with delta = 0.
struct ExpTrigKey {
    Rational alpha;
    Rational beta;
    Rational delta;
    TrigKind kind = TrigKind::PureExp;

    friend bool operator==(const ExpTrigKey&, const ExpTrigKey&) = default;
    friend bool operator<(const ExpTrigKey& a, const ExpTrigKey& b) {
        return std::tie(a.alpha, a.beta, a.delta, a.kind) <
               std::tie(b.alpha, b.beta, b.delta, b.kind);
    }
};

// Canonical finite sum of poly * exp * trig terms with real rational data.
// Closed under addition, scaling, and differentiation.
class ExpTrigPoly {
public:
    ExpTrigPoly() = default;

    // Adds poly * e^{alpha t} * kind(beta t + delta). Normalizes a negative
    // beta via cos(-x) = cos(x), sin(-x) = -sin(x). Throws
    // std::invalid_argument for trig terms with beta = 0 or non-real poly.
    void add_term(const Rational& alpha, const Rational& beta, const Rational& delta,
                  TrigKind kind, const Polynomial& poly);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpTrigKey, Polynomial>& terms() const { return terms_; }

    friend ExpTrigPoly operator+(const ExpTrigPoly& a, const ExpTrigPoly& b);
    friend ExpTrigPoly operator-(const ExpTrigPoly& a, const ExpTrigPoly& b);
    ExpTrigPoly operator-() const;
    ExpTrigPoly scaled(const Rational& c) const;

    ExpTrigPoly derivative() const;

    friend bool operator==(const ExpTrigPoly& a, const ExpTrigPoly& b) = default;

private:
    std::map<ExpTrigKey, Polynomial> terms_;
};

} // namespace ode
