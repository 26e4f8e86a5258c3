#pragma once

#include <random>

#include "spoq/symbol.hpp"

namespace spoq {

/// Seeded generator of random exact inputs for property tests and the
/// equivariance checker.
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    int uniform_int(int lo, int hi);
    Rational rational(int max_abs_num = 4, int max_den = 4);
    Rational nonzero_rational(int max_abs_num = 4, int max_den = 4);
    Poly poly(int max_degree);
    SuperFn superfn(int max_degree);
    SuperFn homogeneous_superfn(Parity p, int max_degree);
    Parity parity();
    /// Nonzero parity-homogeneous symbol of the given degree.
    Symbol symbol(HalfInt degree, const Rational& delta, Parity p, int max_degree);
    /// (lambda, delta) with delta avoiding every collision up to max_k.
    std::pair<Rational, Rational> noncritical_weights(HalfInt max_k);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace spoq
