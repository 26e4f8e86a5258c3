#pragma once

#include "spoq/superfn.hpp"

namespace spoq {

/// Derivation a*dx + b1*dt1 + b2*dt2 of the function algebra.
struct VectorField {
    SuperFn a, b1, b2;

    static VectorField zero() { return {}; }
    static VectorField dx() { return {SuperFn::one(), {}, {}}; }
    static VectorField dtheta(int i);

    bool is_zero() const { return a.is_zero() && b1.is_zero() && b2.is_zero(); }

    /// Parity of the field: even fields have even a and odd b's, odd fields the reverse.
    std::optional<Parity> parity() const;
    std::pair<VectorField, VectorField> parity_split() const;

    VectorField scaled(const Rational& r) const { return {a.scaled(r), b1.scaled(r), b2.scaled(r)}; }
    VectorField operator-() const { return {-a, -b1, -b2}; }
    friend VectorField operator+(const VectorField& x, const VectorField& y) {
        return {x.a + y.a, x.b1 + y.b1, x.b2 + y.b2};
    }
    friend VectorField operator-(const VectorField& x, const VectorField& y) { return x + (-y); }
    friend bool operator==(const VectorField& x, const VectorField& y) {
        return x.a == y.a && x.b1 == y.b1 && x.b2 == y.b2;
    }
    friend bool operator!=(const VectorField& x, const VectorField& y) { return !(x == y); }
};

VectorField dbar_field(int i);

SuperFn apply(const VectorField& X, const SuperFn& f);

/// Super commutator [X,Y] = XY - (-1)^{X~ Y~} YX, extended bilinearly to mixed inputs.
VectorField bracket(const VectorField& X, const VectorField& Y);

/// Contact Hamiltonian field X_f = f*dx - (-1)^{f~} (1/2)(Dbar1(f) Dbar1 + Dbar2(f) Dbar2).
VectorField hamiltonian_field(const SuperFn& f);

/// {f,g} = f g' - f' g - (-1)^{f~} (1/2)(Dbar1(f) Dbar1(g) + Dbar2(f) Dbar2(g)).
SuperFn contact_bracket(const SuperFn& f, const SuperFn& g);

/// True iff [X, Dbar_i] lies in the left module spanned by Dbar1, Dbar2 for i = 1, 2.
bool is_contact(const VectorField& X);

}  // namespace spoq
