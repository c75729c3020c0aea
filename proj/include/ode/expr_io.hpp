#pragma once

#include "ode/solver.hpp"

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ode {

// Syntax or semantic error with the offending position in the input.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct ProblemStatement {
    LinearOperator op;
    Forcing forcing;

    friend bool operator==(const ProblemStatement&, const ProblemStatement&) = default;
};

// "lhs = rhs" per the equation grammar, e.g.
//   x''' - 5*x'' + 3*x' + 9*x = t^5 * e^(3t)
// Forcing terms map cos to RealPart and sin to ImagPart; a trig-free term
// gets a real gamma with Complex projection. "= 0" yields an empty forcing.
ProblemStatement parse_problem(std::string_view text);

// Univariate polynomial in t over ComplexRational, e.g. "-1/8*t^2 - 3/16i*t + 7/64".
Polynomial parse_polynomial(std::string_view text);

// Real exp-trig expression using the forcing-term grammar, e.g.
//   "(-1/2*t)*e^(-1t)*cos(1t)". "0" yields the zero expression.
ExpTrigPoly parse_exptrig(std::string_view text);

std::string render_plain(const Rational& r);
std::string render_plain(const ComplexRational& z, bool parenthesize_if_mixed = false);
std::string render_plain(const Polynomial& p);
std::string render_plain(const LinearOperator& op);
std::string render_plain(const ExpTrigPoly& e);
std::string render_plain(const ProblemStatement& ps);

std::string render_latex(const Polynomial& p);
std::string render_latex(const ExpTrigPoly& e);

const char* projection_name(Projection p);
const char* trig_kind_name(TrigKind k);

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const ExpTrigPoly& e);
nlohmann::json to_json(const ProblemStatement& ps);
nlohmann::json to_json(const ParticularSolution& sol);
nlohmann::json emit_trace(const Trace& trace);

// Full structured document: operator, forcing, optional solution and trace.
nlohmann::json structured_document(const ProblemStatement& ps,
                                   const ParticularSolution* sol = nullptr,
                                   const Trace* trace = nullptr);

} // namespace ode
