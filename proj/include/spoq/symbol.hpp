#pragma once

#include <vector>

#include "spoq/diffop.hpp"

namespace spoq {

/// Homogeneous symbol of degree k in (1/2)N with weight shift delta,
/// represented by the density pair (F1, F2):
///   integer k:      [F1 dx^k + F2 dx^{k-1} Dbar1 Dbar2]
///   half-integer k: [F1 dx^{k-1/2} Dbar1 + F2 dx^{k-1/2} Dbar2]
/// Degree-0 symbols are multiplication operators, so F2 = 0 there.
class Symbol {
public:
    Symbol(HalfInt degree, Rational delta, SuperFn F1, SuperFn F2 = {},
           std::optional<Parity> declared_parity = std::nullopt);

    HalfInt degree() const { return degree_; }
    const Rational& delta() const { return delta_; }
    const SuperFn& F1() const { return F1_; }
    const SuperFn& F2() const { return F2_; }
    std::optional<Parity> parity() const { return parity_; }
    Parity parity_required() const;

    bool is_zero() const { return F1_.is_zero() && F2_.is_zero(); }

    Symbol scaled(const Rational& r) const { return {degree_, delta_, F1_.scaled(r), F2_.scaled(r), parity_}; }
    Symbol operator-() const { return scaled(Rational(-1)); }
    friend Symbol operator+(const Symbol& a, const Symbol& b);
    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.degree_ == b.degree_ && a.delta_ == b.delta_ && a.F1_ == b.F1_ && a.F2_ == b.F2_;
    }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }

    static Symbol zero(HalfInt degree, Rational delta, std::optional<Parity> parity = Parity::Even) {
        return Symbol(degree, std::move(delta), SuperFn::zero(), SuperFn::zero(), parity);
    }

private:
    HalfInt degree_;
    Rational delta_;
    SuperFn F1_, F2_;
    std::optional<Parity> parity_;
};

/// Splits (F1, F2) into at most two parity-homogeneous symbols with the
/// parity flag set; a lone zero symbol when both components vanish.
std::vector<Symbol> homogeneous_parts(HalfInt degree, const Rational& delta, const SuperFn& F1,
                                      const SuperFn& F2);

/// Finitely supported sum of symbols of distinct degrees, one weight shift.
class GradedSymbol {
public:
    explicit GradedSymbol(Rational delta) : delta_(std::move(delta)) {}

    const Rational& delta() const { return delta_; }
    const std::map<HalfInt, Symbol>& parts() const { return parts_; }
    const Symbol* part(HalfInt degree) const;

    void add(const Symbol& s);
    bool is_zero() const { return parts_.empty(); }

    GradedSymbol scaled(const Rational& r) const;
    GradedSymbol operator-() const { return scaled(Rational(-1)); }
    friend GradedSymbol operator+(const GradedSymbol& a, const GradedSymbol& b);
    friend GradedSymbol operator-(const GradedSymbol& a, const GradedSymbol& b) { return a + (-b); }
    friend bool operator==(const GradedSymbol& a, const GradedSymbol& b);
    friend bool operator!=(const GradedSymbol& a, const GradedSymbol& b) { return !(a == b); }

private:
    Rational delta_;
    std::map<HalfInt, Symbol> parts_;
};

/// The affine quantization map; the result maps lambda-densities to
/// (lambda + delta)-densities.
DiffOp q_aff(const Symbol& S, const Rational& lambda);
DiffOp q_aff(const GradedSymbol& S, const Rational& lambda);

/// Inverse of q_aff: graded decomposition of a normal-form operator.
GradedSymbol q_aff_inv(const DiffOp& D);

/// Class of D in degree k; requires order(D) <= k.
Symbol principal_symbol(const DiffOp& D, HalfInt k);

/// Lie derivative of a degree-k symbol along the contact field of f.
Symbol lie_symbol(const SuperFn& f, const Symbol& S);

/// gamma(X_f) S: the defect of the affine quantization from equivariance,
/// computed at the operator level. Vanishes for affine f.
GradedSymbol gamma(const SuperFn& f, const Symbol& S, const Rational& lambda);

/// Closed form of gamma for f in {x^2, x*t1, x*t2}; rejects other f.
GradedSymbol gamma_closed_form(const SuperFn& f, const Symbol& S, const Rational& lambda);

/// Closed form of the operator N = casimir(operator action) - casimir(density
/// action); maps degree k into degrees k-1/2 and k-1.
GradedSymbol n_closed_form(const Symbol& S, const Rational& lambda);

}  // namespace spoq
