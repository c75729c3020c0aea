#pragma once

#include "ode/diffop.hpp"
#include "ode/exptrig.hpp"
#include "ode/polynomial.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ode {

struct unsolvable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How to turn the complex solution Q e^{gamma t + i delta} into a real one.
enum class Projection { Complex, RealPart, ImagPart };

// One right-hand-side summand R(t) e^{gamma t + i delta}, projected.
struct ForcingTerm {
    Polynomial poly;       // R, real and nonzero
    ComplexRational gamma; // alpha + beta i
    Rational delta;        // phase, must be 0 when gamma is real
    Projection projection = Projection::Complex;

    ForcingTerm(Polynomial r, ComplexRational g, Rational d, Projection proj);

    Rational alpha() const { return gamma.re; }
    Rational beta() const { return gamma.im; }

    friend bool operator==(const ForcingTerm&, const ForcingTerm&) = default;
};

// Ordered forcing: terms sorted by (alpha, beta, delta, projection), no
// duplicate keys (same-key terms are merged by polynomial addition). An
// empty forcing marks the homogeneous problem.
class Forcing {
public:
    Forcing() = default;
    void add(ForcingTerm term);

    bool empty() const { return terms_.empty(); }
    const std::vector<ForcingTerm>& terms() const { return terms_; }

    // The real-form expression of the whole right-hand side.
    ExpTrigPoly to_exptrig() const;

    friend bool operator==(const Forcing&, const Forcing&) = default;

private:
    std::vector<ForcingTerm> terms_;
};

// Taylor coefficients c_k = p^(k)(gamma)/k! together with the root
// multiplicity m = min{k : c_k != 0}.
struct TaylorData {
    std::vector<ComplexRational> coeffs;
    std::size_t multiplicity = 0;

    static TaylorData at(const Polynomial& p, const ComplexRational& gamma);
};

struct TraceStep {
    std::string name;
    std::string before;
    std::string after;
};
using Trace = std::vector<TraceStep>;

// One solved complex component Q e^{gamma t + i delta}, plus its projection.
struct ComplexPart {
    Polynomial q;
    ComplexRational gamma;
    Rational delta;
    Projection projection = Projection::Complex;

    friend bool operator==(const ComplexPart&, const ComplexPart&) = default;
};

struct ParticularSolution {
    std::vector<ComplexPart> complex_parts;
    ExpTrigPoly real_form;
};

// Solves sum_j c_j Q^(j) = R for a polynomial Q by forward substitution on
// the lower-triangular coefficient system; when the leading c_j vanish,
// solves for the corresponding derivative and integrates back with zero
// constants. Throws unsolvable_error when every c_j is zero and R is not.
Polynomial solve_poly_ode(std::span<const ComplexRational> c, const Polynomial& r);

// The full pipeline for one term: Taylor coefficients of p at gamma, the
// triangular solve, multiplicity handling. Appends trace steps if asked.
ComplexPart particular_solution(const LinearOperator& op, const ForcingTerm& term,
                                Trace* trace = nullptr);

// Projects Q e^{gamma t + i delta} into its canonical real-form expression.
// Throws std::invalid_argument for Projection::Complex with nonreal gamma.
ExpTrigPoly realize(const Polynomial& q, const ComplexRational& gamma,
                    const Rational& delta, Projection projection);

// Superposition over all forcing terms.
ParticularSolution solve(const LinearOperator& op, const Forcing& forcing,
                         Trace* trace = nullptr);

// Basis of the homogeneous solution space from user-supplied characteristic
// roots (conjugates implied for nonreal roots). Roots are verified exactly;
// a failure names the offending root.
struct bad_root_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
std::vector<ExpTrigPoly>
homogeneous_basis(const LinearOperator& op,
                  const std::vector<std::pair<ComplexRational, std::size_t>>& roots);

} // namespace ode
