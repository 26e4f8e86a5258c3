#include "spoq/sampling.hpp"

#include "spoq/quantize.hpp"

namespace spoq {

int Sampler::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

Rational Sampler::rational(int max_abs_num, int max_den) {
    return Rational(uniform_int(-max_abs_num, max_abs_num), uniform_int(1, max_den));
}

Rational Sampler::nonzero_rational(int max_abs_num, int max_den) {
    for (;;) {
        Rational r = rational(max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Poly Sampler::poly(int max_degree) {
    int deg = uniform_int(0, max_degree);
    std::vector<Rational> c;
    c.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        // keep coefficients sparse-ish
        c.push_back(uniform_int(0, 2) == 0 ? Rational(0) : rational());
    }
    return Poly(std::move(c));
}

SuperFn Sampler::superfn(int max_degree) {
    return {poly(max_degree), poly(max_degree), poly(max_degree), poly(max_degree)};
}

SuperFn Sampler::homogeneous_superfn(Parity p, int max_degree) {
    SuperFn f;
    if (p == Parity::Even) {
        f.f0 = poly(max_degree);
        f.f12 = poly(max_degree);
    } else {
        f.f1 = poly(max_degree);
        f.f2 = poly(max_degree);
    }
    return f;
}

Parity Sampler::parity() { return uniform_int(0, 1) == 0 ? Parity::Even : Parity::Odd; }

Symbol Sampler::symbol(HalfInt degree, const Rational& delta, Parity p, int max_degree) {
    for (;;) {
        SuperFn F1 = homogeneous_superfn(p, max_degree);
        SuperFn F2 = degree == kZeroDeg ? SuperFn::zero() : homogeneous_superfn(p, max_degree);
        if (F1.is_zero() && F2.is_zero()) continue;
        return Symbol(degree, delta, F1, F2, p);
    }
}

std::pair<Rational, Rational> Sampler::noncritical_weights(HalfInt max_k) {
    Rational lambda = rational();
    for (;;) {
        Rational delta = rational(6, 4);
        if (!is_critical(delta, max_k)) return {lambda, delta};
    }
}

}  // namespace spoq
