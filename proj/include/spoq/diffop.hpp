#pragma once

#include <compare>
#include <map>
#include <optional>

#include "spoq/halfint.hpp"
#include "spoq/vectorfield.hpp"

namespace spoq {

/// Monomial dx^l Dbar1^m Dbar2^n in normal form, m,n in {0,1}.
struct OpKey {
    int l = 0;
    int m = 0;
    int n = 0;
    HalfInt order() const { return HalfInt{2 * l + m + n}; }
    friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// Filtered differential operator between weighted densities, kept in
/// normal form: sum of a_{l,m,n} dx^l Dbar1^m Dbar2^n with coefficients on
/// the left and no zero terms stored. Carries the weights (lambda, mu).
class DiffOp {
public:
    DiffOp(Rational lambda, Rational mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {}

    const Rational& lambda() const { return lambda_; }
    const Rational& mu() const { return mu_; }
    Rational delta() const { return mu_ - lambda_; }

    const std::map<OpKey, SuperFn>& terms() const { return terms_; }
    SuperFn coeff(OpKey k) const;
    void add_term(OpKey k, const SuperFn& c);

    bool is_zero() const { return terms_.empty(); }
    /// Max of l + m/2 + n/2 over stored monomials; nullopt for the zero operator.
    std::optional<HalfInt> order() const;

    /// Operator parity: coefficient parity plus the number of Dbar factors mod 2.
    std::optional<Parity> parity() const;
    std::pair<DiffOp, DiffOp> parity_split() const;

    DiffOp scaled(const Rational& r) const;
    DiffOp operator-() const { return scaled(Rational(-1)); }
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    static DiffOp zero(Rational lambda, Rational mu) { return DiffOp(std::move(lambda), std::move(mu)); }
    static DiffOp multiplication(const SuperFn& f, Rational lambda, Rational mu);
    static DiffOp dx_power(int l, Rational lambda, Rational mu);
    static DiffOp dbar_op(int i, Rational lambda, Rational mu);

private:
    Rational lambda_, mu_;
    std::map<OpKey, SuperFn> terms_;
};

/// Normal form of D1 after D2. Requires D1.lambda == D2.mu; the result maps
/// (D2.lambda)-densities to (D1.mu)-densities.
DiffOp compose(const DiffOp& D1, const DiffOp& D2);

SuperFn apply(const DiffOp& D, const SuperFn& F);

/// X_f + lambda f' acting on lambda-densities, as an operator.
DiffOp lie_density_op(const SuperFn& f, const Rational& lambda);
SuperFn lie_density(const SuperFn& f, const Rational& lambda, const SuperFn& F);

/// Lie derivative of an operator along the contact field of f:
///   L^mu_{X_f} o D - (-1)^{f~ D~} D o L^lambda_{X_f},
/// extended bilinearly over the parities of f and D.
DiffOp lie_op(const SuperFn& f, const DiffOp& D);

/// [A,B] = A o B - (-1)^{A~ B~} B o A, extended bilinearly.
DiffOp super_commutator(const DiffOp& A, const DiffOp& B);

}  // namespace spoq
