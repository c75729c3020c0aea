#include "ode/expr_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>

namespace ode {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, i_); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    // Next raw character, whitespace not skipped.
    char peek_raw() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }
    bool done() { return peek() == '\0'; }
    std::size_t pos() const { return i_; }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer integer() {
        skip_ws();
        std::string digits;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            digits += s_[i_++];
        if (digits.empty())
            fail("expected a number");
        return Integer(digits);
    }

    // Unsigned "p" or "p/q".
    Rational rational_unsigned() {
        Integer num = integer();
        Integer den = 1;
        if (eat('/'))
            den = integer();
        if (den == 0)
            fail("zero denominator");
        return Rational(num, den);
    }

    // Optionally signed rational.
    Rational rational_signed() {
        bool neg = eat('-');
        if (!neg)
            eat('+');
        Rational r = rational_unsigned();
        return neg ? -r : r;
    }

    // One signed scalar part: "3/4", "3/4i", "i", with optional '*' before i.
    ComplexRational scalar_part(int sign) {
        if (eat('i'))
            return {Rational{}, Rational(sign)};
        Rational mag = rational_unsigned();
        if (sign < 0)
            mag = -mag;
        std::size_t save = i_;
        if (eat('*')) {
            if (eat('i'))
                return {Rational{}, mag};
            i_ = save; // '*' belonged to the enclosing monomial
            return {mag};
        }
        if (eat('i'))
            return {Rational{}, mag};
        return {mag};
    }

    // "(a+bi)" body after the opening paren has been consumed.
    ComplexRational complex_body() {
        int sign = eat('-') ? -1 : (eat('+'), 1);
        ComplexRational z = scalar_part(sign);
        char c = peek();
        if (c == '+' || c == '-') {
            ++i_;
            ComplexRational second = scalar_part(c == '-' ? -1 : 1);
            if (!second.re.is_zero() || !z.im.is_zero())
                fail("malformed complex scalar");
            z = z + second;
        }
        return z;
    }

    // "t" or "t^k"; returns the power.
    std::size_t t_power() {
        expect('t');
        if (!eat('^'))
            return 1;
        Integer k = integer();
        if (k < 0 || k > 64)
            fail("unsupported power");
        return static_cast<std::size_t>(k);
    }

    // One monomial, sign already applied: coefficient and optional t-power.
    // allow_complex admits i and parenthesized complex coefficients.
    Polynomial monomial(int sign, bool allow_complex) {
        ComplexRational coef;
        bool have_coef = false;
        if (peek() == '(' && allow_complex) {
            expect('(');
            coef = complex_body();
            expect(')');
            have_coef = true;
        } else if (at_digit() || (allow_complex && peek() == 'i')) {
            coef = scalar_part(1);
            if (!allow_complex && !coef.is_real())
                fail("complex coefficient not allowed here");
            have_coef = true;
        }
        if (have_coef && sign < 0)
            coef = -coef;

        if (have_coef)
            eat('*');
        if (peek() == 't') {
            std::size_t k = t_power();
            if (!have_coef)
                coef = ComplexRational(Rational(sign));
            return Polynomial::monomial(coef, k);
        }
        if (!have_coef)
            fail("expected a polynomial term");
        return Polynomial::constant(coef);
    }

    // Sum of monomials until an unconsumable character.
    Polynomial polynomial_sum(bool allow_complex) {
        int sign = eat('-') ? -1 : (eat('+'), 1);
        Polynomial p = monomial(sign, allow_complex);
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i_;
                p = p + monomial(c == '-' ? -1 : 1, allow_complex);
            } else {
                break;
            }
        }
        return p;
    }

    // ----- equation left-hand side -----

    LinearOperator lhs_operator() {
        std::map<std::size_t, Rational> acc;
        std::size_t highest = 0;
        bool first = true;
        while (true) {
            int sign = 1;
            if (first) {
                if (eat('-'))
                    sign = -1;
                else
                    eat('+');
            } else {
                char c = peek();
                if (c == '=')
                    break;
                if (c == '+') {
                    ++i_;
                } else if (c == '-') {
                    ++i_;
                    sign = -1;
                } else {
                    fail("expected '+', '-' or '=' in the equation");
                }
            }
            first = false;

            Rational coef(1);
            if (at_digit()) {
                coef = rational_unsigned();
                eat('*');
            }
            if (sign < 0)
                coef = -coef;

            expect('x');
            std::size_t order = 0;
            if (eat('^')) {
                expect('(');
                Integer k = integer();
                if (k < 0 || k > 64)
                    fail("unsupported derivative order");
                order = static_cast<std::size_t>(k);
                expect(')');
            } else {
                while (peek_raw() == '\'') {
                    ++order;
                    ++i_;
                    if (order > 4)
                        fail("more than 4 primes; use x^(k)");
                }
            }
            acc[order] += coef;
            highest = std::max(highest, order);
        }
        std::vector<Rational> coeffs(highest + 1);
        for (const auto& [j, a] : acc)
            coeffs[j] = a;
        try {
            return LinearOperator(std::move(coeffs));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    // ----- equation right-hand side -----

    struct RhsFactors {
        Polynomial poly{Polynomial::constant(ComplexRational(1))};
        Rational alpha;
        bool has_trig = false;
        bool is_sin = false;
        Rational beta;
        Rational delta;
    };

    RhsFactors forcing_factors(int sign) {
        RhsFactors f;
        bool any = false;

        // polynomial factor
        if (peek() == '(') {
            expect('(');
            f.poly = polynomial_sum(false);
            expect(')');
            any = true;
        } else if (at_digit() || peek() == 't') {
            f.poly = monomial(1, false);
            any = true;
        }
        if (sign < 0)
            f.poly = -f.poly;
        if (any)
            eat('*');

        // exponential factor
        if (peek() == 'e') {
            ++i_;
            expect('^');
            char open = peek();
            if (open != '(' && open != '{')
                fail("expected '(' or '{' after e^");
            ++i_;
            f.alpha = rational_signed();
            expect('t');
            expect(open == '(' ? ')' : '}');
            any = true;
            eat('*');
        }

        // trigonometric factor
        if (peek() == 'c' || peek() == 's') {
            const std::size_t at = pos();
            std::string name;
            while (name.size() < 3 && std::isalpha(static_cast<unsigned char>(peek_raw())))
                name += s_[i_++];
            if (name != "cos" && name != "sin")
                fail("expected cos or sin");
            f.has_trig = true;
            f.is_sin = (name == "sin");
            expect('(');
            f.beta = rational_signed();
            expect('t');
            char c = peek();
            if (c == '+' || c == '-') {
                ++i_;
                Rational d = rational_unsigned();
                f.delta = (c == '-') ? -d : d;
            }
            expect(')');
            any = true;
            if (f.beta.is_zero()) {
                i_ = at;
                if (f.delta.is_zero())
                    fail("trigonometric factor with zero frequency");
                fail("phase requires a nonzero frequency (real exponent with phase)");
            }
        }

        if (!any)
            fail("expected a forcing term");
        return f;
    }

    Forcing rhs_forcing() {
        // literal "0" marks the homogeneous problem
        {
            std::size_t save = i_;
            if (eat('0') && done())
                return {};
            i_ = save;
        }
        Forcing forcing;
        bool first = true;
        while (true) {
            int sign = 1;
            if (first) {
                if (eat('-'))
                    sign = -1;
                else
                    eat('+');
            } else {
                char c = peek();
                if (c == '\0')
                    break;
                if (c == '+') {
                    ++i_;
                } else if (c == '-') {
                    ++i_;
                    sign = -1;
                } else {
                    fail("expected '+' or '-' between forcing terms");
                }
            }
            first = false;

            RhsFactors f = forcing_factors(sign);
            if (f.poly.is_zero())
                continue;

            if (f.has_trig) {
                // normalize beta >= 0: cos(-bt+d) = cos(bt-d), sin(-bt+d) = -sin(bt-d)
                if (f.beta.sign() < 0) {
                    f.beta = -f.beta;
                    f.delta = -f.delta;
                    if (f.is_sin)
                        f.poly = -f.poly;
                }
                forcing.add(ForcingTerm(f.poly, ComplexRational(f.alpha, f.beta), f.delta,
                                        f.is_sin ? Projection::ImagPart
                                                 : Projection::RealPart));
            } else {
                forcing.add(ForcingTerm(f.poly, ComplexRational(f.alpha), Rational{},
                                        Projection::Complex));
            }
        }
        return forcing;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

ProblemStatement parse_problem(std::string_view text) {
    Parser p(text);
    LinearOperator op = p.lhs_operator();
    p.expect('=');
    Forcing forcing = p.rhs_forcing();
    if (!p.done())
        p.fail("trailing characters");
    return ProblemStatement{std::move(op), std::move(forcing)};
}

Polynomial parse_polynomial(std::string_view text) {
    Parser p(text);
    if (p.eat('0') && p.done())
        return {};
    Polynomial poly = p.polynomial_sum(true);
    if (!p.done())
        p.fail("trailing characters");
    return poly;
}

ExpTrigPoly parse_exptrig(std::string_view text) {
    Parser p(text);
    Forcing forcing = p.rhs_forcing();
    if (!p.done())
        p.fail("trailing characters");
    return forcing.to_exptrig();
}

// ----- plain rendering -----

std::string render_plain(const Rational& r) { return r.str(); }

std::string render_plain(const ComplexRational& z, bool parenthesize_if_mixed) {
    if (parenthesize_if_mixed && !z.re.is_zero() && !z.im.is_zero())
        return "(" + z.str() + ")";
    return z.str();
}

namespace {

std::string t_part(std::size_t k) {
    if (k == 0)
        return "";
    if (k == 1)
        return "t";
    return "t^" + std::to_string(k);
}

// Renders one coefficient/power pair without sign handling; `negate` tells
// the caller whether it pulled the sign out (real or pure-imaginary only).
struct TermPiece {
    std::string body;
    bool negative = false;
};

TermPiece plain_term(const ComplexRational& c, std::size_t k) {
    TermPiece piece;
    const std::string tp = t_part(k);
    if (!c.re.is_zero() && !c.im.is_zero()) {
        piece.body = "(" + c.str() + ")";
        if (!tp.empty())
            piece.body += "*" + tp;
        return piece;
    }
    const bool imag = !c.im.is_zero();
    Rational mag = imag ? c.im : c.re;
    if (mag.sign() < 0) {
        piece.negative = true;
        mag = -mag;
    }
    std::string coef;
    if (imag)
        coef = (mag == Rational(1)) ? "i" : mag.str() + "i";
    else if (mag != Rational(1) || tp.empty())
        coef = mag.str();
    piece.body = coef;
    if (!tp.empty()) {
        if (!coef.empty())
            piece.body += "*";
        piece.body += tp;
    }
    return piece;
}

std::string join_terms(const std::vector<TermPiece>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        if (out.empty()) {
            if (piece.negative)
                out += "-";
        } else {
            out += piece.negative ? " - " : " + ";
        }
        out += piece.body;
    }
    return out;
}

} // namespace

std::string render_plain(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::vector<TermPiece> pieces;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeff(i).is_zero())
            continue;
        pieces.push_back(plain_term(p.coeff(i), i));
    }
    return join_terms(pieces);
}

std::string render_plain(const LinearOperator& op) {
    std::vector<TermPiece> pieces;
    for (std::size_t j = op.coeffs().size(); j-- > 0;) {
        Rational a = op.coeff(j);
        if (a.is_zero())
            continue;
        TermPiece piece;
        if (a.sign() < 0) {
            piece.negative = true;
            a = -a;
        }
        std::string x = "x";
        if (j > 0 && j <= 4)
            x += std::string(j, '\'');
        else if (j > 4)
            x += "^(" + std::to_string(j) + ")";
        piece.body = (a == Rational(1)) ? x : a.str() + "*" + x;
        pieces.push_back(std::move(piece));
    }
    return join_terms(pieces);
}

namespace {

bool poly_is_one(const Polynomial& p) {
    return p == Polynomial::constant(ComplexRational(1));
}

std::string exptrig_term_plain(const Rational& alpha, const Rational& beta,
                               const Rational& delta, TrigKind kind, const Polynomial& poly) {
    std::vector<std::string> factors;
    if (!poly_is_one(poly))
        factors.push_back("(" + render_plain(poly) + ")");
    if (!alpha.is_zero())
        factors.push_back("e^(" + alpha.str() + "t)");
    if (kind != TrigKind::PureExp) {
        std::string trig = (kind == TrigKind::Sin) ? "sin(" : "cos(";
        trig += beta.str() + "t";
        if (!delta.is_zero())
            trig += (delta.sign() < 0) ? " - " + (-delta).str() : " + " + delta.str();
        trig += ")";
        factors.push_back(std::move(trig));
    }
    if (factors.empty())
        return "1";
    std::string out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        out += "*" + factors[i];
    return out;
}

} // namespace

std::string render_plain(const ExpTrigPoly& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, poly] : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += exptrig_term_plain(k.alpha, k.beta, k.delta, k.kind, poly);
    }
    return out;
}

std::string render_plain(const ProblemStatement& ps) {
    std::string rhs;
    for (const auto& term : ps.forcing.terms()) {
        if (!rhs.empty())
            rhs += " + ";
        TrigKind kind = TrigKind::PureExp;
        if (term.projection == Projection::RealPart)
            kind = TrigKind::Cos;
        else if (term.projection == Projection::ImagPart)
            kind = TrigKind::Sin;
        rhs += exptrig_term_plain(term.alpha(), term.beta(), term.delta, kind, term.poly);
    }
    if (rhs.empty())
        rhs = "0";
    return render_plain(ps.op) + " = " + rhs;
}

// ----- latex rendering -----

namespace {

std::string latex_t_part(std::size_t k) {
    if (k == 0)
        return "";
    if (k == 1)
        return "t";
    return "t^{" + std::to_string(k) + "}";
}

TermPiece latex_term(const ComplexRational& c, std::size_t k) {
    TermPiece piece;
    const std::string tp = latex_t_part(k);
    if (!c.re.is_zero() && !c.im.is_zero()) {
        piece.body = "\\left(" + c.str() + "\\right)" + tp;
        return piece;
    }
    const bool imag = !c.im.is_zero();
    Rational mag = imag ? c.im : c.re;
    if (mag.sign() < 0) {
        piece.negative = true;
        mag = -mag;
    }
    std::string num = mag.numerator().str();
    if (num == "1" && (imag || !tp.empty()))
        num.clear();
    if (imag)
        num += "i";
    if (mag.denominator() == 1) {
        piece.body = num + tp;
        if (piece.body.empty())
            piece.body = "1";
    } else {
        std::string inner = num + tp;
        if (inner.empty())
            inner = "1";
        piece.body = "\\frac{" + inner + "}{" + mag.denominator().str() + "}";
    }
    return piece;
}

} // namespace

std::string render_latex(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::vector<TermPiece> pieces;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeff(i).is_zero())
            continue;
        pieces.push_back(latex_term(p.coeff(i), i));
    }
    return join_terms(pieces);
}

std::string render_latex(const ExpTrigPoly& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, poly] : e.terms()) {
        if (!out.empty())
            out += " + ";
        std::string term;
        if (!poly_is_one(poly))
            term += "\\left(" + render_latex(poly) + "\\right)";
        if (!k.alpha.is_zero()) {
            std::string a = k.alpha == Rational(1) ? "" : (k.alpha == Rational(-1) ? "-" : k.alpha.str());
            term += "e^{" + a + "t}";
        }
        if (k.kind != TrigKind::PureExp) {
            term += (k.kind == TrigKind::Sin) ? "\\sin(" : "\\cos(";
            term += (k.beta == Rational(1) ? "" : k.beta.str());
            term += "t";
            if (!k.delta.is_zero())
                term += (k.delta.sign() < 0) ? " - " + (-k.delta).str() : " + " + k.delta.str();
            term += ")";
        }
        if (term.empty())
            term = "1";
        out += term;
    }
    return out;
}

// ----- structured rendering -----

const char* projection_name(Projection p) {
    switch (p) {
    case Projection::Complex: return "complex";
    case Projection::RealPart: return "real";
    case Projection::ImagPart: return "imag";
    }
    return "?";
}

const char* trig_kind_name(TrigKind k) {
    switch (k) {
    case TrigKind::PureExp: return "exp";
    case TrigKind::Cos: return "cos";
    case TrigKind::Sin: return "sin";
    }
    return "?";
}

namespace {

nlohmann::json json_real_poly(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.re.str());
    return arr;
}

} // namespace

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back({{"re", c.re.str()}, {"im", c.im.str()}});
    return arr;
}

nlohmann::json to_json(const ExpTrigPoly& e) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, poly] : e.terms())
        arr.push_back({{"alpha", k.alpha.str()},
                       {"beta", k.beta.str()},
                       {"delta", k.delta.str()},
                       {"kind", trig_kind_name(k.kind)},
                       {"poly", json_real_poly(poly)}});
    return arr;
}

nlohmann::json to_json(const ProblemStatement& ps) {
    nlohmann::json op = nlohmann::json::array();
    for (const auto& a : ps.op.coeffs())
        op.push_back(a.str());
    nlohmann::json forcing = nlohmann::json::array();
    for (const auto& t : ps.forcing.terms())
        forcing.push_back({{"poly", json_real_poly(t.poly)},
                           {"alpha", t.alpha().str()},
                           {"beta", t.beta().str()},
                           {"delta", t.delta.str()},
                           {"projection", projection_name(t.projection)}});
    return {{"operator", op}, {"forcing", forcing}};
}

nlohmann::json to_json(const ParticularSolution& sol) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : sol.complex_parts)
        parts.push_back({{"poly", to_json(part.q)},
                         {"gamma", {{"re", part.gamma.re.str()}, {"im", part.gamma.im.str()}}},
                         {"delta", part.delta.str()},
                         {"projection", projection_name(part.projection)}});
    return {{"complex_parts", parts}, {"real_form", to_json(sol.real_form)}};
}

nlohmann::json emit_trace(const Trace& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& step : trace)
        arr.push_back({{"name", step.name}, {"before", step.before}, {"after", step.after}});
    return arr;
}

nlohmann::json structured_document(const ProblemStatement& ps, const ParticularSolution* sol,
                                   const Trace* trace) {
    nlohmann::json doc = to_json(ps);
    if (sol)
        doc["solution"] = to_json(*sol);
    if (trace)
        doc["trace"] = emit_trace(*trace);
    return doc;
}

} // namespace ode
