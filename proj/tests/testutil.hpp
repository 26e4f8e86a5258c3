#pragma once

#include <doctest.h>

#include "spoq/expr.hpp"
#include "spoq/sampling.hpp"

namespace spoq::testutil {

inline SuperFn fn(const char* text) { return parse_superfn(text).value; }

inline Rational rat(const char* text) {
    auto r = Rational::parse(text);
    REQUIRE(r.has_value());
    return *r;
}

inline DiffOp op_dx(int l, Rational lam = Rational(0), Rational mu = Rational(0)) {
    return DiffOp::dx_power(l, lam, mu);
}

inline DiffOp op_dbar(int i, Rational lam = Rational(0), Rational mu = Rational(0)) {
    return DiffOp::dbar_op(i, lam, mu);
}

inline DiffOp op_mult(const SuperFn& f, Rational lam = Rational(0), Rational mu = Rational(0)) {
    return DiffOp::multiplication(f, lam, mu);
}

// Checks vector field equality through application to a batch of random functions.
inline void check_fields_agree(const VectorField& X, const VectorField& Y, Sampler& smp,
                               int trials = 4) {
    for (int t = 0; t < trials; ++t) {
        SuperFn g = smp.superfn(3);
        CHECK(apply(X, g) == apply(Y, g));
    }
}

}  // namespace spoq::testutil
