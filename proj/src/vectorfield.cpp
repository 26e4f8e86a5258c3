#include "spoq/vectorfield.hpp"

namespace spoq {

VectorField VectorField::dtheta(int i) {
    if (i == 1) return {{}, SuperFn::one(), {}};
    if (i == 2) return {{}, {}, SuperFn::one()};
    throw std::domain_error("odd direction index must be 1 or 2");
}

VectorField dbar_field(int i) {
    VectorField v = VectorField::dtheta(i);
    v.a = -(i == 1 ? SuperFn::theta1() : SuperFn::theta2());
    return v;
}

std::optional<Parity> VectorField::parity() const {
    auto even_like = [](const SuperFn& c, const SuperFn& o1, const SuperFn& o2) {
        return c.odd_part().is_zero() && o1.even_part().is_zero() && o2.even_part().is_zero();
    };
    bool even_ok = even_like(a, b1, b2);
    bool odd_ok = a.even_part().is_zero() && b1.odd_part().is_zero() && b2.odd_part().is_zero();
    if (is_zero()) return Parity::Even;
    if (even_ok && !odd_ok) return Parity::Even;
    if (odd_ok && !even_ok) return Parity::Odd;
    return std::nullopt;
}

std::pair<VectorField, VectorField> VectorField::parity_split() const {
    VectorField even{a.even_part(), b1.odd_part(), b2.odd_part()};
    VectorField odd{a.odd_part(), b1.even_part(), b2.even_part()};
    return {even, odd};
}

SuperFn apply(const VectorField& X, const SuperFn& f) {
    return X.a * derive_x(f) + X.b1 * derive_theta(1, f) + X.b2 * derive_theta(2, f);
}

namespace {

VectorField bracket_homogeneous(const VectorField& X, Parity px, const VectorField& Y, Parity py) {
    // A derivation is determined by its values on the coordinates.
    int sg = koszul(px, py);
    auto comp = [&](const SuperFn& g) {
        SuperFn r = apply(X, apply(Y, g)) - apply(Y, apply(X, g)).scaled(Rational(sg));
        return r;
    };
    return {comp(SuperFn::x()), comp(SuperFn::theta1()), comp(SuperFn::theta2())};
}

}  // namespace

VectorField bracket(const VectorField& X, const VectorField& Y) {
    auto [xe, xo] = X.parity_split();
    auto [ye, yo] = Y.parity_split();
    VectorField r = bracket_homogeneous(xe, Parity::Even, ye, Parity::Even);
    r = r + bracket_homogeneous(xe, Parity::Even, yo, Parity::Odd);
    r = r + bracket_homogeneous(xo, Parity::Odd, ye, Parity::Even);
    r = r + bracket_homogeneous(xo, Parity::Odd, yo, Parity::Odd);
    return r;
}

namespace {

VectorField hamiltonian_homogeneous(const SuperFn& f, Parity pf) {
    Rational s = Rational(-parity_sign(pf), 2);  // -(-1)^{f~}/2
    SuperFn d1 = dbar(1, f), d2 = dbar(2, f);
    VectorField v;
    v.b1 = d1.scaled(s);
    v.b2 = d2.scaled(s);
    // Dbar_i = dt_i - t_i dx contributes -t_i dx through its x-part.
    v.a = f - (d1 * SuperFn::theta1() + d2 * SuperFn::theta2()).scaled(s);
    return v;
}

}  // namespace

VectorField hamiltonian_field(const SuperFn& f) {
    auto [fe, fo] = parity_split(f);
    return hamiltonian_homogeneous(fe, Parity::Even) + hamiltonian_homogeneous(fo, Parity::Odd);
}

namespace {

SuperFn contact_bracket_homogeneous(const SuperFn& f, Parity pf, const SuperFn& g) {
    Rational s = Rational(-parity_sign(pf), 2);
    SuperFn fp = derive_x(f);
    return f * derive_x(g) - fp * g + (dbar(1, f) * dbar(1, g) + dbar(2, f) * dbar(2, g)).scaled(s);
}

}  // namespace

SuperFn contact_bracket(const SuperFn& f, const SuperFn& g) {
    auto [fe, fo] = parity_split(f);
    return contact_bracket_homogeneous(fe, Parity::Even, g) +
           contact_bracket_homogeneous(fo, Parity::Odd, g);
}

namespace {

bool is_contact_homogeneous(const VectorField& X) {
    for (int i : {1, 2}) {
        VectorField b = bracket(X, dbar_field(i));
        // b = psi*Dbar1 + phi*Dbar2 forces psi = b.b1, phi = b.b2; the dx component must match.
        SuperFn residual = b.a + b.b1 * SuperFn::theta1() + b.b2 * SuperFn::theta2();
        if (!residual.is_zero()) return false;
    }
    return true;
}

}  // namespace

bool is_contact(const VectorField& X) {
    auto [xe, xo] = X.parity_split();
    return is_contact_homogeneous(xe) && is_contact_homogeneous(xo);
}

}  // namespace spoq
