#include "helpers.hpp"

#include <doctest.h>

using namespace testutil;

TEST_CASE("characteristic polynomial") {
    CHECK(e2_op().characteristic_polynomial() == poly({cx(9), cx(3), cx(-5), cx(1)}));
    CHECK(e1_op().characteristic_polynomial() == poly({cx(2), cx(-2), cx(1)}));
    CHECK(LinearOperator({rat(0), rat(1)}).characteristic_polynomial() == t_power(1));
}

TEST_CASE("operator normalization") {
    CHECK(LinearOperator({rat(1), rat(2), rat(0), rat(0)}).order() == 1);
    CHECK_THROWS_AS(LinearOperator({rat(5)}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOperator({rat(5), rat(0)}), std::invalid_argument);
}

TEST_CASE("operator application, both routes, on the worked examples") {
    CHECK(apply_via_taylor(e2_op(), e2_solution(), cx(3)) == t_power(5));
    CHECK(apply_shifted(e2_op(), e2_solution(), cx(3)) == t_power(5));

    CHECK(apply_via_taylor(e2_op(), Polynomial(), cx(2, 1)).is_zero());
    CHECK(apply_shifted(e2_op(), Polynomial(), cx(2, 1)).is_zero());

    CHECK(apply_via_taylor(e1_op(), e1_solution(), cx(1, 3)) == t_power(2));
    CHECK(apply_shifted(e1_op(), e1_solution(), cx(1, 3)) == t_power(2));
}

TEST_CASE("real-form application") {
    // d/dt { e^{at} cos(bt+d) } = a e^{at} cos(bt+d) - b e^{at} sin(bt+d)
    const LinearOperator ddt({rat(0), rat(1)});
    ExpTrigPoly e;
    e.add_term(rat(2), rat(3), rat(5), TrigKind::Cos, Polynomial::constant(cx(1)));
    ExpTrigPoly expected;
    expected.add_term(rat(2), rat(3), rat(5), TrigKind::Cos, Polynomial::constant(cx(2)));
    expected.add_term(rat(2), rat(3), rat(5), TrigKind::Sin, Polynomial::constant(cx(-3)));
    CHECK(apply_to_exptrig(ddt, e) == expected);

    // the printed E1 solution does not reproduce the E1 forcing
    const ExpTrigPoly printed = realize(e1_printed_q(), cx(1, 3), rat(5), Projection::ImagPart);
    ExpTrigPoly e1_forcing;
    e1_forcing.add_term(rat(1), rat(3), rat(5), TrigKind::Sin, t_power(2));
    CHECK(apply_to_exptrig(e1_op(), printed) != e1_forcing);

    // x'' + 2x' + 2x applied to -(t/2) e^{-t} cos t gives e^{-t} sin t
    ExpTrigPoly sol;
    sol.add_term(rat(-1), rat(1), rat(0), TrigKind::Cos, poly({cx(0), cx(rat(-1, 2))}));
    ExpTrigPoly forcing;
    forcing.add_term(rat(-1), rat(1), rat(0), TrigKind::Sin, Polynomial::constant(cx(1)));
    CHECK(apply_to_exptrig(v1_op(), sol) == forcing);
}

TEST_CASE("both application routes agree on random instances") {
    Rng rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        const LinearOperator op = rng.op(6);
        const Polynomial q = rng.polynomial(6);
        const ComplexRational gamma = rng.complex_rational();
        CHECK(apply_via_taylor(op, q, gamma) == apply_shifted(op, q, gamma));
    }
}

TEST_CASE("both application routes agree exhaustively on a small grid") {
    const long long grid[] = {-1, 0, 1};
    const ComplexRational gammas[] = {cx(0), cx(1), cx(0, 1), cx(1, 1)};
    for (long long a0 : grid)
        for (long long a1 : grid)
            for (long long a2 : grid) {
                if (a1 == 0 && a2 == 0)
                    continue;
                const LinearOperator op({rat(a0), rat(a1), rat(a2)});
                for (long long q0 : grid)
                    for (long long q1 : grid)
                        for (long long q2 : grid) {
                            const Polynomial q = poly({cx(q0), cx(q1), cx(q2)});
                            for (const auto& g : gammas)
                                CHECK(apply_via_taylor(op, q, g) == apply_shifted(op, q, g));
                        }
            }
}

TEST_CASE("application is linear in the polynomial") {
    Rng rng(78);
    for (int iter = 0; iter < 200; ++iter) {
        const LinearOperator op = rng.op(5);
        const Polynomial a = rng.polynomial(5), b = rng.polynomial(5);
        const ComplexRational gamma = rng.complex_rational();
        CHECK(apply_via_taylor(op, a + b, gamma) ==
              apply_via_taylor(op, a, gamma) + apply_via_taylor(op, b, gamma));
        CHECK(apply_shifted(op, a + b, gamma) ==
              apply_shifted(op, a, gamma) + apply_shifted(op, b, gamma));
    }
}

TEST_CASE("complex and real application are consistent") {
    Rng rng(79);
    for (int iter = 0; iter < 200; ++iter) {
        const LinearOperator op = rng.op(4);
        const Polynomial q = rng.polynomial(4, /*real=*/true);
        if (q.is_zero())
            continue;
        const Rational alpha = rng.rational();
        const Rational beta = rng.nonzero_rational();
        const Rational delta = rng.rational();
        const ComplexRational gamma = cx(alpha, beta);

        const Polynomial s = apply_shifted(op, q, gamma);
        for (Projection proj : {Projection::RealPart, Projection::ImagPart}) {
            const ExpTrigPoly in = realize(q, gamma, delta, proj);
            const ExpTrigPoly expected = realize(s, gamma, delta, proj);
            CHECK(apply_to_exptrig(op, in) == expected);
        }
    }
}
