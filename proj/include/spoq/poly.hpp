#pragma once

#include <vector>

#include "spoq/rational.hpp"

namespace spoq {

/// Polynomial in x over exact rationals. Canonical form: no trailing zero
/// coefficients; the zero polynomial has an empty coefficient list and
/// degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational r);
    static Poly x() { return monomial(1, Rational(1)); }
    static Poly monomial(int degree, Rational coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly derivative() const;
    Poly scaled(const Rational& r) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> c_;  // c_[i] is the coefficient of x^i
};

}  // namespace spoq
