#include "spoq/symbol.hpp"

#include <stdexcept>

#include "spoq/spo_matrix.hpp"

namespace spoq {

namespace {

std::optional<Parity> merge_parity(const std::optional<Parity>& declared, const SuperFn& F1,
                                   const SuperFn& F2) {
    if (declared) return declared;
    auto p1 = F1.parity(), p2 = F2.parity();
    if (!p1 || !p2) return std::nullopt;
    if (F1.is_zero()) return p2;
    if (F2.is_zero()) return p1;
    return *p1 == *p2 ? p1 : std::nullopt;
}

}  // namespace

Symbol::Symbol(HalfInt degree, Rational delta, SuperFn F1, SuperFn F2,
               std::optional<Parity> declared_parity)
    : degree_(degree), delta_(std::move(delta)), F1_(std::move(F1)), F2_(std::move(F2)) {
    if (degree_.twice < 0) throw std::invalid_argument("symbol degree must be >= 0");
    if (degree_ == kZeroDeg && !F2_.is_zero())
        throw std::invalid_argument("degree-0 symbols are multiplication operators: F2 must vanish");
    if (declared_parity) {
        auto check = [&](const SuperFn& F) {
            return (*declared_parity == Parity::Even) ? F.odd_part().is_zero() : F.even_part().is_zero();
        };
        if (!check(F1_) || !check(F2_))
            throw std::invalid_argument("symbol components do not match the declared parity");
    }
    parity_ = merge_parity(declared_parity, F1_, F2_);
}

Parity Symbol::parity_required() const {
    if (!parity_) throw std::invalid_argument("operation requires a parity-homogeneous symbol");
    return *parity_;
}

Symbol operator+(const Symbol& a, const Symbol& b) {
    if (a.degree_ != b.degree_ || a.delta_ != b.delta_)
        throw std::invalid_argument("symbol sum requires equal degree and weight shift");
    std::optional<Parity> p;
    if (a.is_zero())
        p = b.parity_;
    else if (b.is_zero())
        p = a.parity_;
    else if (a.parity_ && b.parity_ && *a.parity_ == *b.parity_)
        p = a.parity_;
    return Symbol(a.degree_, a.delta_, a.F1_ + b.F1_, a.F2_ + b.F2_, p);
}

std::vector<Symbol> homogeneous_parts(HalfInt degree, const Rational& delta, const SuperFn& F1,
                                      const SuperFn& F2) {
    std::vector<Symbol> out;
    Symbol even(degree, delta, F1.even_part(), F2.even_part(), Parity::Even);
    Symbol odd(degree, delta, F1.odd_part(), F2.odd_part(), Parity::Odd);
    if (!even.is_zero()) out.push_back(even);
    if (!odd.is_zero()) out.push_back(odd);
    if (out.empty()) out.push_back(Symbol::zero(degree, delta));
    return out;
}

const Symbol* GradedSymbol::part(HalfInt degree) const {
    auto it = parts_.find(degree);
    return it == parts_.end() ? nullptr : &it->second;
}

void GradedSymbol::add(const Symbol& s) {
    if (s.delta() != delta_) throw std::invalid_argument("graded symbol parts share one weight shift");
    if (s.is_zero()) return;
    auto it = parts_.find(s.degree());
    if (it == parts_.end()) {
        parts_.emplace(s.degree(), s);
        return;
    }
    Symbol sum = it->second + s;
    if (sum.is_zero())
        parts_.erase(it);
    else
        it->second = sum;
}

GradedSymbol GradedSymbol::scaled(const Rational& r) const {
    GradedSymbol g(delta_);
    if (r.is_zero()) return g;
    for (const auto& [d, s] : parts_) g.parts_.emplace(d, s.scaled(r));
    return g;
}

GradedSymbol operator+(const GradedSymbol& a, const GradedSymbol& b) {
    if (a.delta_ != b.delta_) throw std::invalid_argument("graded symbol sum requires equal weight shift");
    GradedSymbol g = a;
    for (const auto& [d, s] : b.parts_) g.add(s);
    return g;
}

bool operator==(const GradedSymbol& a, const GradedSymbol& b) {
    if (a.delta_ != b.delta_ || a.parts_.size() != b.parts_.size()) return false;
    for (auto ia = a.parts_.begin(), ib = b.parts_.begin(); ia != a.parts_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

DiffOp q_aff(const Symbol& S, const Rational& lambda) {
    DiffOp d(lambda, lambda + S.delta());
    if (S.degree().is_integer()) {
        int k = S.degree().as_int();
        d.add_term({k, 0, 0}, S.F1());
        if (k >= 1) d.add_term({k - 1, 1, 1}, S.F2());
    } else {
        int fl = S.degree().floor();
        d.add_term({fl, 1, 0}, S.F1());
        d.add_term({fl, 0, 1}, S.F2());
    }
    return d;
}

DiffOp q_aff(const GradedSymbol& S, const Rational& lambda) {
    DiffOp d(lambda, lambda + S.delta());
    for (const auto& [deg, part] : S.parts()) d = d + q_aff(part, lambda);
    return d;
}

GradedSymbol q_aff_inv(const DiffOp& D) {
    struct Pair {
        SuperFn F1, F2;
    };
    std::map<HalfInt, Pair> acc;
    for (const auto& [k, c] : D.terms()) {
        if (k.m == 0 && k.n == 0)
            acc[HalfInt::whole(k.l)].F1 += c;
        else if (k.m == 1 && k.n == 1)
            acc[HalfInt::whole(k.l + 1)].F2 += c;
        else if (k.m == 1)
            acc[HalfInt{2 * k.l + 1}].F1 += c;
        else
            acc[HalfInt{2 * k.l + 1}].F2 += c;
    }
    GradedSymbol g(D.delta());
    for (auto& [deg, pr] : acc) g.add(Symbol(deg, D.delta(), pr.F1, pr.F2));
    return g;
}

Symbol principal_symbol(const DiffOp& D, HalfInt k) {
    auto ord = D.order();
    if (ord && *ord > k)
        throw std::invalid_argument("principal symbol at degree " + k.str() +
                                    ": operator order " + ord->str() + " exceeds it");
    if (k.is_integer()) {
        int ki = k.as_int();
        return Symbol(k, D.delta(), D.coeff({ki, 0, 0}),
                      ki >= 1 ? D.coeff({ki - 1, 1, 1}) : SuperFn::zero());
    }
    return Symbol(k, D.delta(), D.coeff({k.floor(), 1, 0}), D.coeff({k.floor(), 0, 1}));
}

Symbol lie_symbol(const SuperFn& f, const Symbol& S) {
    Rational weight = S.delta() - S.degree().to_rational();
    SuperFn G1 = lie_density(f, weight, S.F1());
    SuperFn G2 = lie_density(f, weight, S.F2());
    if (S.degree().is_half_odd()) {
        SuperFn w = dbar(1, dbar(2, f)).scaled(half());
        G1 -= w * S.F2();
        G2 += w * S.F1();
    }
    std::optional<Parity> p;
    if (auto pf = f.parity(); pf && S.parity()) p = *S.parity() + *pf;
    return Symbol(S.degree(), S.delta(), G1, G2, p);
}

GradedSymbol gamma(const SuperFn& f, const Symbol& S, const Rational& lambda) {
    GradedSymbol g = q_aff_inv(lie_op(f, q_aff(S, lambda)));
    g.add(-lie_symbol(f, S));
    return g;
}

namespace {

void add_part(GradedSymbol& g, HalfInt degree, const Rational& delta, SuperFn F1, SuperFn F2,
              Parity parity) {
    if (F1.is_zero() && F2.is_zero()) return;
    if (degree.twice < 0)
        throw std::logic_error("nonzero symbol component below degree 0");
    g.add(Symbol(degree, delta, std::move(F1), std::move(F2), parity));
}

}  // namespace

GradedSymbol gamma_closed_form(const SuperFn& f, const Symbol& S, const Rational& lambda) {
    bool quadratic = f == hamiltonian(Generator::XSq) || f == hamiltonian(Generator::XTheta1) ||
                     f == hamiltonian(Generator::XTheta2);
    if (!quadratic)
        throw std::invalid_argument("gamma closed form is defined for the quadratic contact Hamiltonians only");

    Parity pf = *f.parity();
    Parity pS = S.parity_required();
    Rational k = S.degree().to_rational();
    const Rational sg = Rational(parity_sign(pf + pS));

    SuperFn fp = derive_x(f);
    SuperFn fpp = derive_x(fp);
    SuperFn d1 = dbar(1, fp), d2 = dbar(2, fp);
    GradedSymbol g(S.delta());

    if (S.degree().is_integer()) {
        Rational a = k * half();            // k/2
        Rational b = k * half() + lambda;   // k/2 + lambda
        SuperFn G1 = (d1 * S.F1()).scaled(sg * a) + (d2 * S.F2()).scaled(sg * b);
        SuperFn G2 = (d2 * S.F1()).scaled(sg * a) - (d1 * S.F2()).scaled(sg * b);
        add_part(g, S.degree() - kHalf, S.delta(), G1, G2, flip(pS + pf));

        Rational c1 = -k * ((k - 1) * half() + lambda);
        Rational c2 = -(k - 1) * (k * half() + lambda);
        add_part(g, S.degree() - HalfInt::whole(1), S.delta(), (fpp * S.F1()).scaled(c1),
                 (fpp * S.F2()).scaled(c2), pS + pf);
    } else {
        Rational km = k - half();           // k - 1/2
        Rational a = km * half() + lambda;  // (k-1/2)/2 + lambda
        Rational b = km * half();
        SuperFn G1 = (d1 * S.F1() + d2 * S.F2()).scaled(-sg * a);
        SuperFn G2 = (d1 * S.F2() - d2 * S.F1()).scaled(sg * b);
        add_part(g, S.degree() - kHalf, S.delta(), G1, G2, flip(pS + pf));

        Rational c = km * (-km * half() - lambda);
        add_part(g, S.degree() - HalfInt::whole(1), S.delta(), (fpp * S.F1()).scaled(c),
                 (fpp * S.F2()).scaled(c), pS + pf);
    }
    return g;
}

GradedSymbol n_closed_form(const Symbol& S, const Rational& lambda) {
    Parity pS = S.parity_required();
    Rational k = S.degree().to_rational();
    GradedSymbol g(S.delta());

    if (S.degree().is_integer()) {
        Rational sg = Rational(-parity_sign(pS));
        Rational a = k * half();
        Rational b = k * half() + lambda;
        SuperFn G1 = dbar(1, S.F1()).scaled(sg * a) + dbar(2, S.F2()).scaled(sg * b);
        SuperFn G2 = dbar(2, S.F1()).scaled(sg * a) - dbar(1, S.F2()).scaled(sg * b);
        add_part(g, S.degree() - kHalf, S.delta(), G1, G2, flip(pS));

        Rational c1 = Rational(2) * k * ((k - 1) * half() + lambda);
        Rational c2 = Rational(2) * (k - 1) * (k * half() + lambda);
        add_part(g, S.degree() - HalfInt::whole(1), S.delta(), derive_x(S.F1()).scaled(c1),
                 derive_x(S.F2()).scaled(c2), pS);
    } else {
        Rational sg = Rational(parity_sign(pS));
        Rational km = k - half();
        Rational a = km * half() + lambda;
        Rational b = km * half();
        SuperFn G1 = (dbar(1, S.F1()) + dbar(2, S.F2())).scaled(sg * a);
        SuperFn G2 = (dbar(2, S.F1()) - dbar(1, S.F2())).scaled(sg * b);
        add_part(g, S.degree() - kHalf, S.delta(), G1, G2, flip(pS));

        Rational c = Rational(2) * km * (km * half() + lambda);
        add_part(g, S.degree() - HalfInt::whole(1), S.delta(), derive_x(S.F1()).scaled(c),
                 derive_x(S.F2()).scaled(c), pS);
    }
    return g;
}

}  // namespace spoq
