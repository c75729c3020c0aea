#include "ode/exptrig.hpp"

#include <stdexcept>

namespace ode {

void ExpTrigPoly::add_term(const Rational& alpha, const Rational& beta, const Rational& delta,
                           TrigKind kind, const Polynomial& poly) {
    if (poly.is_zero())
        return;
    if (!poly.is_real())
        throw std::invalid_argument("ExpTrigPoly: term polynomial must be real");

    Rational b = beta;
    Rational d = delta;
    Polynomial f = poly;

    if (kind == TrigKind::PureExp) {
        if (!b.is_zero() || !d.is_zero())
            throw std::invalid_argument("ExpTrigPoly: pure-exp term with nonzero beta or delta");
    } else {
        if (b.is_zero())
            throw std::invalid_argument("ExpTrigPoly: trig term with zero frequency");
        if (b.sign() < 0) {
            // cos(-x) = cos x, sin(-x) = -sin x with x = |beta| t - delta
            b = -b;
            d = -d;
            if (kind == TrigKind::Sin)
                f = -f;
        }
    }

    const ExpTrigKey key{alpha, b, d, kind};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::move(f));
    } else {
        it->second = it->second + f;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ExpTrigPoly operator+(const ExpTrigPoly& a, const ExpTrigPoly& b) {
    ExpTrigPoly out = a;
    for (const auto& [k, p] : b.terms_)
        out.add_term(k.alpha, k.beta, k.delta, k.kind, p);
    return out;
}

ExpTrigPoly operator-(const ExpTrigPoly& a, const ExpTrigPoly& b) {
    ExpTrigPoly out = a;
    for (const auto& [k, p] : b.terms_)
        out.add_term(k.alpha, k.beta, k.delta, k.kind, -p);
    return out;
}

ExpTrigPoly ExpTrigPoly::operator-() const {
    ExpTrigPoly out;
    for (const auto& [k, p] : terms_)
        out.add_term(k.alpha, k.beta, k.delta, k.kind, -p);
    return out;
}

ExpTrigPoly ExpTrigPoly::scaled(const Rational& c) const {
    ExpTrigPoly out;
    for (const auto& [k, p] : terms_)
        out.add_term(k.alpha, k.beta, k.delta, k.kind, p.scaled(ComplexRational(c)));
    return out;
}

ExpTrigPoly ExpTrigPoly::derivative() const {
    ExpTrigPoly out;
    for (const auto& [k, f] : terms_) {
        // d/dt [f e^{at} cos(bt+d)] = (f' + a f) e^{at} cos(bt+d) - b f e^{at} sin(bt+d)
        const Polynomial lead = f.derivative() + f.scaled(ComplexRational(k.alpha));
        switch (k.kind) {
        case TrigKind::PureExp:
            out.add_term(k.alpha, k.beta, k.delta, TrigKind::PureExp, lead);
            break;
        case TrigKind::Cos:
            out.add_term(k.alpha, k.beta, k.delta, TrigKind::Cos, lead);
            out.add_term(k.alpha, k.beta, k.delta, TrigKind::Sin, -f.scaled(ComplexRational(k.beta)));
            break;
        case TrigKind::Sin:
            out.add_term(k.alpha, k.beta, k.delta, TrigKind::Sin, lead);
            out.add_term(k.alpha, k.beta, k.delta, TrigKind::Cos, f.scaled(ComplexRational(k.beta)));
            break;
        }
    }
    return out;
}

} // namespace ode
