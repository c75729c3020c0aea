#include "ode/solver.hpp"

#include "ode/expr_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ode {

ForcingTerm::ForcingTerm(Polynomial r, ComplexRational g, Rational d, Projection proj)
    : poly(std::move(r)), gamma(std::move(g)), delta(std::move(d)), projection(proj) {
    if (poly.is_zero())
        throw std::invalid_argument("ForcingTerm: zero polynomial");
    if (!poly.is_real())
        throw std::invalid_argument("ForcingTerm: polynomial must be real");
    if (gamma.is_real()) {
        if (!delta.is_zero())
            throw std::invalid_argument("ForcingTerm: real gamma requires zero phase");
        if (projection != Projection::Complex)
            throw std::invalid_argument("ForcingTerm: real gamma requires Complex projection");
    } else if (projection == Projection::Complex) {
        throw std::invalid_argument("ForcingTerm: nonreal gamma requires a projection");
    }
    if (gamma.im.sign() < 0) {
        // canonical beta >= 0: R e^{at} cos(-bt+d) = R e^{at} cos(bt-d),
        // R e^{at} sin(-bt+d) = -R e^{at} sin(bt-d)
        gamma.im = -gamma.im;
        delta = -delta;
        if (projection == Projection::ImagPart)
            poly = -poly;
    }
}

namespace {

auto term_key(const ForcingTerm& t) {
    return std::make_tuple(t.alpha(), t.beta(), t.delta, t.projection);
}

} // namespace

void Forcing::add(ForcingTerm term) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const ForcingTerm& existing) {
        return term_key(existing) == term_key(term);
    });
    if (it != terms_.end()) {
        Polynomial merged = it->poly + term.poly;
        if (merged.is_zero()) {
            terms_.erase(it);
        } else {
            it->poly = std::move(merged);
        }
    } else {
        terms_.push_back(std::move(term));
    }
    std::sort(terms_.begin(), terms_.end(), [](const ForcingTerm& a, const ForcingTerm& b) {
        return term_key(a) < term_key(b);
    });
}

ExpTrigPoly Forcing::to_exptrig() const {
    ExpTrigPoly out;
    for (const auto& t : terms_) {
        switch (t.projection) {
        case Projection::Complex:
            out.add_term(t.alpha(), Rational{}, Rational{}, TrigKind::PureExp, t.poly);
            break;
        case Projection::RealPart:
            out.add_term(t.alpha(), t.beta(), t.delta, TrigKind::Cos, t.poly);
            break;
        case Projection::ImagPart:
            out.add_term(t.alpha(), t.beta(), t.delta, TrigKind::Sin, t.poly);
            break;
        }
    }
    return out;
}

TaylorData TaylorData::at(const Polynomial& p, const ComplexRational& gamma) {
    TaylorData data;
    data.coeffs = p.taylor_coeffs_at(gamma);
    data.multiplicity = 0;
    while (data.multiplicity < data.coeffs.size() &&
           data.coeffs[data.multiplicity].is_zero())
        ++data.multiplicity;
    return data;
}

Polynomial solve_poly_ode(std::span<const ComplexRational> c, const Polynomial& r) {
    if (r.is_zero())
        return {};
    std::size_t first = 0;
    while (first < c.size() && c[first].is_zero())
        ++first;
    if (first == c.size())
        throw unsolvable_error("no polynomial solution: all operator coefficients are zero");

    if (first > 0) {
        // c_0 = ... = c_{first-1} = 0: solve for y = Q^(first) with shifted
        // coefficients and integrate back, zero constant at every step.
        Polynomial y = solve_poly_ode(c.subspan(first), r);
        for (std::size_t i = 0; i < first; ++i)
            y = y.antiderivative_zero_const();
        return y;
    }

    // Forward substitution on the lower-triangular system: row l determines
    // the coefficient of t^{m-l} in Q, with the constant diagonal c_0 and
    // off-diagonal entries c_j (m-l+j)!/(m-l)!.
    const std::size_t m = *r.degree();
    std::vector<ComplexRational> q(m + 1);
    for (std::size_t l = 0; l <= m; ++l) {
        const std::size_t row = m - l; // target power of t
        ComplexRational rhs = r.coeff(row);
        for (std::size_t j = 1; j <= l && j < c.size(); ++j) {
            // factor (row + j)! / row!
            Integer factor = 1;
            for (std::size_t i = row + 1; i <= row + j; ++i)
                factor *= Integer(i);
            rhs -= c[j] * q[row + j] * ComplexRational(Rational(factor));
        }
        q[row] = rhs / c[0];
    }
    return Polynomial(std::move(q));
}

namespace {

// "Q''' + 4*Q''" style left-hand side of the reduced equation
// sum_{k >= m} c_k Q^(k) = R.
std::string render_reduced_lhs(const std::vector<ComplexRational>& c, std::size_t mult) {
    std::string out;
    for (std::size_t idx = c.size(); idx-- > mult;) {
        if (c[idx].is_zero())
            continue;
        std::string qpart = "Q";
        if (idx <= 4)
            qpart += std::string(idx, '\'');
        else
            qpart += "^(" + std::to_string(idx) + ")";
        std::string coef;
        if (!(c[idx] == ComplexRational(1)))
            coef = render_plain(c[idx], true) + "*";
        if (!out.empty()) {
            if (c[idx].is_real() && c[idx].re.sign() < 0) {
                coef = (c[idx] == ComplexRational(-1))
                           ? ""
                           : render_plain(-c[idx], true) + "*";
                out += " - " + coef + qpart;
                continue;
            }
            out += " + " + coef + qpart;
        } else {
            if (c[idx].is_real() && c[idx] == ComplexRational(-1))
                coef = "-";
            out += coef + qpart;
        }
    }
    return out;
}

} // namespace

ComplexPart particular_solution(const LinearOperator& op, const ForcingTerm& term,
                                Trace* trace) {
    const Polynomial p = op.characteristic_polynomial();
    const TaylorData data = TaylorData::at(p, term.gamma);

    if (trace) {
        trace->push_back({"characteristic polynomial", render_plain(op), render_plain(p)});
        std::string coeffs = "[";
        for (std::size_t k = 0; k < data.coeffs.size(); ++k) {
            if (k > 0)
                coeffs += ", ";
            coeffs += render_plain(data.coeffs[k]);
        }
        coeffs += "]";
        trace->push_back({"taylor coefficients", "gamma = " + render_plain(term.gamma), coeffs});
        trace->push_back({"multiplicity", "", "m = " + std::to_string(data.multiplicity)});
    }

    const std::size_t m = data.multiplicity;
    const std::span<const ComplexRational> c(data.coeffs);
    Polynomial reduced = solve_poly_ode(c.subspan(m), term.poly);
    if (trace)
        trace->push_back({"reduced equation",
                          render_reduced_lhs(data.coeffs, m) + " = " + render_plain(term.poly),
                          "y = " + render_plain(reduced)});

    Polynomial q = reduced;
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial next = q.antiderivative_zero_const();
        if (trace)
            trace->push_back({"integration", render_plain(q), render_plain(next)});
        q = std::move(next);
    }

    return ComplexPart{std::move(q), term.gamma, term.delta, term.projection};
}

ExpTrigPoly realize(const Polynomial& q, const ComplexRational& gamma,
                    const Rational& delta, Projection projection) {
    const Rational alpha = gamma.re;
    const Rational beta = gamma.im;
    const Polynomial qr = q.real_part();
    const Polynomial qi = q.imag_part();

    ExpTrigPoly out;
    switch (projection) {
    case Projection::Complex:
        if (!gamma.is_real())
            throw std::invalid_argument(
                "realize: nonreal gamma has no real form without a projection");
        out.add_term(alpha, Rational{}, Rational{}, TrigKind::PureExp, qr);
        break;
    case Projection::RealPart:
        // Re{(qr + i qi) e^{(a+bi)t + i delta}} = e^{at}(qr cos - qi sin)
        out.add_term(alpha, beta, delta, TrigKind::Cos, qr);
        out.add_term(alpha, beta, delta, TrigKind::Sin, -qi);
        break;
    case Projection::ImagPart:
        out.add_term(alpha, beta, delta, TrigKind::Sin, qr);
        out.add_term(alpha, beta, delta, TrigKind::Cos, qi);
        break;
    }
    return out;
}

ParticularSolution solve(const LinearOperator& op, const Forcing& forcing, Trace* trace) {
    ParticularSolution sol;
    for (const auto& term : forcing.terms()) {
        ComplexPart part = particular_solution(op, term, trace);
        sol.real_form = sol.real_form + realize(part.q, part.gamma, part.delta, part.projection);
        sol.complex_parts.push_back(std::move(part));
    }
    return sol;
}

std::vector<ExpTrigPoly>
homogeneous_basis(const LinearOperator& op,
                  const std::vector<std::pair<ComplexRational, std::size_t>>& roots) {
    const Polynomial p = op.characteristic_polynomial();

    std::size_t total = 0;
    for (const auto& [root, mult] : roots) {
        if (mult == 0)
            throw bad_root_error("root " + render_plain(root) + ": zero multiplicity");
        const TaylorData data = TaylorData::at(p, root);
        if (data.multiplicity < mult)
            throw bad_root_error("root " + render_plain(root) + " is not a root of multiplicity " +
                                 std::to_string(mult) + " (actual " +
                                 std::to_string(data.multiplicity) + ")");
        total += root.is_real() ? mult : 2 * mult;
    }
    if (total != op.order())
        throw bad_root_error("supplied roots account for " + std::to_string(total) +
                             " of " + std::to_string(op.order()) + " characteristic roots");

    std::vector<ExpTrigPoly> basis;
    for (const auto& [root, mult] : roots) {
        const Rational alpha = root.re;
        const Rational beta = root.im.sign() < 0 ? -root.im : root.im;
        for (std::size_t j = 0; j < mult; ++j) {
            const Polynomial tj = Polynomial::monomial(ComplexRational(1), j);
            if (root.is_real()) {
                ExpTrigPoly e;
                e.add_term(alpha, Rational{}, Rational{}, TrigKind::PureExp, tj);
                basis.push_back(std::move(e));
            } else {
                ExpTrigPoly ec, es;
                ec.add_term(alpha, beta, Rational{}, TrigKind::Cos, tj);
                es.add_term(alpha, beta, Rational{}, TrigKind::Sin, tj);
                basis.push_back(std::move(ec));
                basis.push_back(std::move(es));
            }
        }
    }
    return basis;
}

} // namespace ode
