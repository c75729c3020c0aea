#include "helpers.hpp"

#include <doctest.h>

using namespace testutil;

namespace {

// Independent re-expansion oracle: p(s + gamma) expanded by polynomial
// Horner composition, using only ring operations.
std::vector<ComplexRational> compose_shift(const Polynomial& p, const ComplexRational& gamma) {
    const Polynomial shift = poly({gamma, cx(1)}); // s + gamma
    Polynomial out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        out = out * shift + Polynomial::constant(p.coeff(i));
    std::vector<ComplexRational> c = out.coeffs();
    c.resize(p.coeffs().size());
    return c;
}

} // namespace

TEST_CASE("ring operations") {
    const Polynomial t2p1 = poly({cx(1), cx(0), cx(1)});
    const Polynomial mt2 = poly({cx(0), cx(0), cx(-1)});
    CHECK(t2p1 + mt2 == Polynomial::constant(cx(1)));
    CHECK((t2p1 + mt2).degree() == 0);

    CHECK(poly({cx(1), cx(1)}).scaled(cx(0)).is_zero());
    CHECK_FALSE(poly({cx(1), cx(1)}).scaled(cx(0)).degree().has_value());

    // (t-3)^2 (t+1) = t^3 - 5t^2 + 3t + 9
    const Polynomial tm3 = poly({cx(-3), cx(1)});
    const Polynomial tp1 = poly({cx(1), cx(1)});
    CHECK(tm3 * tm3 * tp1 == e2_op().characteristic_polynomial());
}

TEST_CASE("derivative") {
    const Polynomial p = e2_op().characteristic_polynomial();
    CHECK(p.derivative() == poly({cx(3), cx(-10), cx(3)}));
    CHECK(p.derivative().derivative() == poly({cx(-10), cx(6)}));
    CHECK(Polynomial::constant(cx(5)).derivative().is_zero());
}

TEST_CASE("antiderivative with zero constant") {
    CHECK(t_power(1).antiderivative_zero_const() == poly({cx(0), cx(0), cx(rat(1, 2))}));
    CHECK(e2_intermediate().antiderivative_zero_const().antiderivative_zero_const() ==
          e2_solution());
    CHECK(Polynomial().antiderivative_zero_const().is_zero());
}

TEST_CASE("evaluation") {
    CHECK(e2_op().characteristic_polynomial().eval(cx(3)) == cx(0));
    CHECK(e1_op().characteristic_polynomial().eval(cx(1, 3)) == cx(-8));
    const Polynomial p = poly({cx(rat(7, 3)), cx(2), cx(5)});
    CHECK(p.eval(cx(0)) == cx(rat(7, 3)));
}

TEST_CASE("taylor coefficients at a point") {
    const auto e2 = e2_op().characteristic_polynomial().taylor_coeffs_at(cx(3));
    CHECK(e2 == std::vector<ComplexRational>{cx(0), cx(0), cx(4), cx(1)});

    const auto e1 = e1_op().characteristic_polynomial().taylor_coeffs_at(cx(1, 3));
    CHECK(e1 == std::vector<ComplexRational>{cx(-8), cx(0, 6), cx(1)});

    const Polynomial p = poly({cx(2, 1), cx(0, -3), cx(5)});
    CHECK(p.taylor_coeffs_at(cx(0)) == p.coeffs());

    CHECK_THROWS_AS(Polynomial().taylor_coeffs_at(cx(1)), std::invalid_argument);
}

TEST_CASE("taylor matches binomial re-expansion") {
    Rng rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        const Polynomial p = rng.nonzero_polynomial(6);
        const ComplexRational gamma = rng.complex_rational();
        CHECK(p.taylor_coeffs_at(gamma) == compose_shift(p, gamma));
    }
}

TEST_CASE("calculus and evaluation properties") {
    Rng rng(43);
    for (int iter = 0; iter < 300; ++iter) {
        const Polynomial p = rng.polynomial(6);
        CHECK(p.antiderivative_zero_const().derivative() == p);

        const Polynomial q = rng.polynomial(6);
        const ComplexRational z = rng.complex_rational();
        CHECK((p * q).eval(z) == p.eval(z) * q.eval(z));

        // canonical form: no stored trailing zeros
        const Polynomial sum = p + q.scaled(cx(-1)) + q;
        if (!sum.is_zero())
            CHECK_FALSE(sum.coeffs().back().is_zero());
    }
}
