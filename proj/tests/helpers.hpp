#pragma once

#include "ode/diffop.hpp"
#include "ode/polynomial.hpp"
#include "ode/solver.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace ode;

inline Rational rat(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }
inline ComplexRational cx(Rational re, Rational im = {}) { return {std::move(re), std::move(im)}; }
inline ComplexRational cx(long long re, long long im = 0) { return {rat(re), rat(im)}; }

inline Polynomial poly(std::vector<ComplexRational> ascending) {
    return Polynomial(std::move(ascending));
}

// x''' - 5x'' + 3x' + 9x, characteristic (t-3)^2 (t+1)
inline LinearOperator e2_op() { return LinearOperator({rat(9), rat(3), rat(-5), rat(1)}); }
// x'' - 2x' + 2x, characteristic (t-1)^2 + 1
inline LinearOperator e1_op() { return LinearOperator({rat(2), rat(-2), rat(1)}); }
// x'' + 2x' + 2x, characteristic (t+1)^2 + 1
inline LinearOperator v1_op() { return LinearOperator({rat(2), rat(2), rat(1)}); }

// t^7/168 - t^6/96 + t^5/64 - 5t^4/256 + 5t^3/256 - 15t^2/1024
inline Polynomial e2_solution() {
    return poly({cx(rat(0)), cx(rat(0)), cx(rat(-15, 1024)), cx(rat(5, 256)), cx(rat(-5, 256)),
                 cx(rat(1, 64)), cx(rat(-1, 96)), cx(rat(1, 168))});
}

// t^5/4 - 5t^4/16 + 5t^3/16 - 15t^2/64 + 15t/128 - 15/512
inline Polynomial e2_intermediate() {
    return poly({cx(rat(-15, 512)), cx(rat(15, 128)), cx(rat(-15, 64)), cx(rat(5, 16)),
                 cx(rat(-5, 16)), cx(rat(1, 4))});
}

// -t^2/8 - (3/16) i t + 7/64, the corrected E1 polynomial
inline Polynomial e1_solution() {
    return poly({cx(rat(7, 64)), cx(rat(0), rat(-3, 16)), cx(rat(-1, 8))});
}

// -(i/6) t^2 - (4/9) t + 1/18 + (16/27) i, as printed in the worked example
inline Polynomial e1_printed_q() {
    return poly({cx(rat(1, 18), rat(16, 27)), cx(rat(-4, 9)), cx(rat(0), rat(-1, 6))});
}

inline Polynomial t_power(std::size_t k) { return Polynomial::monomial(cx(1), k); }

// ----- random generators for property tests -----

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long long pick(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }

    Rational rational(long long max_num = 4, long long max_den = 3) {
        return rat(pick(-max_num, max_num), pick(1, max_den));
    }
    Rational nonzero_rational(long long max_num = 4, long long max_den = 3) {
        Rational r;
        do {
            r = rational(max_num, max_den);
        } while (r.is_zero());
        return r;
    }
    ComplexRational complex_rational() { return {rational(), rational()}; }
    ComplexRational nonzero_complex() {
        ComplexRational z;
        do {
            z = complex_rational();
        } while (z.is_zero());
        return z;
    }

    Polynomial polynomial(std::size_t max_deg, bool real = false) {
        std::vector<ComplexRational> v(pick(0, static_cast<long long>(max_deg)) + 1);
        for (auto& c : v)
            c = real ? ComplexRational(rational()) : complex_rational();
        return Polynomial(std::move(v));
    }
    Polynomial nonzero_polynomial(std::size_t max_deg, bool real = false) {
        Polynomial p;
        do {
            p = polynomial(max_deg, real);
        } while (p.is_zero());
        return p;
    }

    LinearOperator op(std::size_t max_order = 6) {
        const std::size_t n = pick(1, static_cast<long long>(max_order));
        std::vector<Rational> v(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = rational();
        v[n] = nonzero_rational();
        return LinearOperator(std::move(v));
    }
};

} // namespace testutil
