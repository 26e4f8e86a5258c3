#pragma once

#include <optional>
#include <utility>

#include "spoq/poly.hpp"

namespace spoq {

/// Z_2 grading. x is even, the Grassmann generators t1, t2 are odd.
enum class Parity : int { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) {
    return (static_cast<int>(a) + static_cast<int>(b)) % 2 == 0 ? Parity::Even : Parity::Odd;
}
/// (-1)^{ab} for the Koszul sign rule.
inline int koszul(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
inline int parity_sign(Parity p) { return p == Parity::Even ? 1 : -1; }

/// Element of the function algebra on the supercircle:
///   f = f0(x) + t1*f1(x) + t2*f2(x) + t1*t2*f12(x).
struct SuperFn {
    Poly f0, f1, f2, f12;

    static SuperFn zero() { return {}; }
    static SuperFn one() { return constant(Rational(1)); }
    static SuperFn constant(Rational r) { return {Poly::constant(std::move(r)), {}, {}, {}}; }
    static SuperFn from_poly(Poly p) { return {std::move(p), {}, {}, {}}; }
    static SuperFn x() { return {Poly::x(), {}, {}, {}}; }
    static SuperFn theta1() { return {{}, Poly::constant(Rational(1)), {}, {}}; }
    static SuperFn theta2() { return {{}, {}, Poly::constant(Rational(1)), {}}; }
    static SuperFn theta12() { return {{}, {}, {}, Poly::constant(Rational(1))}; }

    bool is_zero() const { return f0.is_zero() && f1.is_zero() && f2.is_zero() && f12.is_zero(); }

    SuperFn even_part() const { return {f0, {}, {}, f12}; }
    SuperFn odd_part() const { return {{}, f1, f2, {}}; }

    /// Parity of a homogeneous element; zero counts as even; nullopt when mixed.
    std::optional<Parity> parity() const;

    SuperFn scaled(const Rational& r) const {
        return {f0.scaled(r), f1.scaled(r), f2.scaled(r), f12.scaled(r)};
    }

    SuperFn operator-() const { return {-f0, -f1, -f2, -f12}; }
    friend SuperFn operator+(const SuperFn& a, const SuperFn& b) {
        return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2, a.f12 + b.f12};
    }
    friend SuperFn operator-(const SuperFn& a, const SuperFn& b) { return a + (-b); }
    friend SuperFn operator*(const SuperFn& a, const SuperFn& b);
    SuperFn& operator+=(const SuperFn& o) { return *this = *this + o; }
    SuperFn& operator-=(const SuperFn& o) { return *this = *this - o; }

    friend bool operator==(const SuperFn& a, const SuperFn& b) {
        return a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2 && a.f12 == b.f12;
    }
    friend bool operator!=(const SuperFn& a, const SuperFn& b) { return !(a == b); }
};

SuperFn derive_x(const SuperFn& f);
/// Left Grassmann derivative d/dt_i, i in {1,2}: dtheta1(t1*t2) = t2, dtheta2(t1*t2) = -t1.
SuperFn derive_theta(int i, const SuperFn& f);
/// Dbar_i = d/dt_i - t_i*d/dx, the generators of the contact distribution.
SuperFn dbar(int i, const SuperFn& f);

std::pair<SuperFn, SuperFn> parity_split(const SuperFn& f);

}  // namespace spoq
