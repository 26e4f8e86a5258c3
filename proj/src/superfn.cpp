#include "spoq/superfn.hpp"

namespace spoq {

std::optional<Parity> SuperFn::parity() const {
    bool has_even = !f0.is_zero() || !f12.is_zero();
    bool has_odd = !f1.is_zero() || !f2.is_zero();
    if (has_even && has_odd) return std::nullopt;
    if (has_odd) return Parity::Odd;
    return Parity::Even;
}

SuperFn operator*(const SuperFn& a, const SuperFn& b) {
    // t_i*t_i = 0, t2*t1 = -t1*t2; polynomial coefficients commute with everything.
    SuperFn r;
    r.f0 = a.f0 * b.f0;
    r.f1 = a.f0 * b.f1 + a.f1 * b.f0;
    r.f2 = a.f0 * b.f2 + a.f2 * b.f0;
    r.f12 = a.f0 * b.f12 + a.f12 * b.f0 + a.f1 * b.f2 - a.f2 * b.f1;
    return r;
}

SuperFn derive_x(const SuperFn& f) {
    return {f.f0.derivative(), f.f1.derivative(), f.f2.derivative(), f.f12.derivative()};
}

SuperFn derive_theta(int i, const SuperFn& f) {
    switch (i) {
        case 1:
            return {f.f1, {}, f.f12, {}};
        case 2:
            return {f.f2, -f.f12, {}, {}};
        default:
            throw std::domain_error("odd direction index must be 1 or 2");
    }
}

SuperFn dbar(int i, const SuperFn& f) {
    SuperFn theta = (i == 1) ? SuperFn::theta1() : (i == 2) ? SuperFn::theta2()
                                                            : throw std::domain_error("dbar index must be 1 or 2");
    return derive_theta(i, f) - theta * derive_x(f);
}

std::pair<SuperFn, SuperFn> parity_split(const SuperFn& f) {
    return {f.even_part(), f.odd_part()};
}

}  // namespace spoq
