#include "spoq/quantize.hpp"

#include <stdexcept>

#include "spoq/expr.hpp"
#include "spoq/sampling.hpp"

namespace spoq {

Rational casimir_eigenvalue(HalfInt k, const Rational& delta) {
    Rational d = delta - k.to_rational();
    Rational v = d * d;
    if (k.is_half_odd()) v -= Rational(1, 4);
    return v;
}

const std::array<CasimirTerm, 8>& casimir_terms() {
    static const std::array<CasimirTerm, 8> terms = {{
        {Rational(-1, 2), Generator::XSq, Generator::One},
        {Rational(-1), Generator::XTheta1, Generator::Theta1},
        {Rational(-1), Generator::XTheta2, Generator::Theta2},
        {Rational(1), Generator::X, Generator::X},
        {Rational(1), Generator::Theta12, Generator::Theta12},
        {Rational(1), Generator::Theta1, Generator::XTheta1},
        {Rational(1), Generator::Theta2, Generator::XTheta2},
        {Rational(-1, 2), Generator::One, Generator::XSq},
    }};
    return terms;
}

GradedSymbol casimir(const Symbol& S, const Rational& lambda, CasimirRep rep) {
    GradedSymbol out(S.delta());
    if (rep == CasimirRep::L) {
        for (const auto& t : casimir_terms()) {
            Symbol v = lie_symbol(hamiltonian(t.primal), S);
            v = lie_symbol(hamiltonian(t.dual), v);
            out.add(v.scaled(t.coeff));
        }
    } else {
        DiffOp D = q_aff(S, lambda);
        DiffOp acc = DiffOp::zero(D.lambda(), D.mu());
        for (const auto& t : casimir_terms())
            acc = acc + lie_op(hamiltonian(t.dual), lie_op(hamiltonian(t.primal), D)).scaled(t.coeff);
        out = q_aff_inv(acc);
    }
    return out;
}

GradedSymbol casimir(const GradedSymbol& S, const Rational& lambda, CasimirRep rep) {
    GradedSymbol out(S.delta());
    for (const auto& [deg, part] : S.parts()) out = out + casimir(part, lambda, rep);
    return out;
}

namespace {

// alpha_k(delta) - alpha_l(delta) is linear in delta; its unique root.
Rational collision_delta(HalfInt k, HalfInt l) {
    Rational ck = k.is_half_odd() ? Rational(1, 4) : Rational(0);
    Rational cl = l.is_half_odd() ? Rational(1, 4) : Rational(0);
    Rational kr = k.to_rational(), lr = l.to_rational();
    return (kr * kr - lr * lr - ck + cl) / (Rational(2) * (kr - lr));
}

}  // namespace

std::set<Rational> critical_values(HalfInt max_k) {
    if (max_k < kHalf) throw std::invalid_argument("critical_values requires max_k >= 1/2");

    std::set<Rational> families;
    for (int k = 1; 2 * k <= max_k.twice; ++k) {
        for (int l = 0; l < k; ++l)  // both integer
            families.insert((Rational(k) + Rational(l)) * half());
        for (int lt = 1; lt < 2 * k; lt += 2) {  // integer k, half-odd l = lt/2
            Rational kr(k), lr(lt, 2);
            families.insert((kr * kr - lr * lr + Rational(1, 4)) / (Rational(2) * (kr - lr)));
        }
    }
    for (int kt = 1; kt <= max_k.twice; kt += 2)  // half-odd k = kt/2, integer l
        for (int l = 0; 2 * l < kt; ++l) {
            Rational kr(kt, 2), lr(l);
            families.insert((kr * kr - lr * lr - Rational(1, 4)) / (Rational(2) * (kr - lr)));
        }

    std::set<Rational> search;
    for (int kt = 1; kt <= max_k.twice; ++kt)
        for (int lt = 0; lt < kt; ++lt) search.insert(collision_delta(HalfInt{kt}, HalfInt{lt}));

    if (families != search)
        throw std::logic_error("critical-value families disagree with the pairwise eigenvalue search");
    return families;
}

bool is_critical(const Rational& delta, HalfInt max_k) {
    return critical_values(max_k).count(delta) > 0;
}

ZeroDenominatorError::ZeroDenominatorError(std::string coefficient, HalfInt degree)
    : std::runtime_error("closed-form coefficient " + coefficient + " has a zero denominator at degree " +
                         degree.str()),
      coefficient_(std::move(coefficient)),
      degree_(degree) {}

QuantizationResult quantize_iterative(const Symbol& S, const Rational& lambda) {
    Parity pS = S.parity_required();
    const Rational& delta = S.delta();
    HalfInt k = S.degree();
    Rational alpha_top = casimir_eigenvalue(k, delta);

    std::map<HalfInt, Symbol> parts;
    parts.emplace(k, S);
    QuantizationResult res;

    for (HalfInt deg = k - kHalf; deg.twice >= 0; deg -= kHalf) {
        Parity pdeg = (k - deg).twice % 2 == 0 ? pS : flip(pS);
        Symbol rhs = Symbol::zero(deg, delta, pdeg);
        for (HalfInt src : {deg + kHalf, deg + HalfInt::whole(1)}) {
            auto it = parts.find(src);
            if (it == parts.end()) continue;
            GradedSymbol n = n_closed_form(it->second, lambda);
            if (const Symbol* p = n.part(deg)) rhs = rhs + *p;
        }
        Rational pivot = alpha_top - casimir_eigenvalue(deg, delta);
        bool residual_zero = rhs.is_zero();
        res.diagnostics.push_back({deg, pivot, residual_zero});
        if (!pivot.is_zero()) {
            parts.emplace(deg, rhs.scaled(Rational(1) / pivot));
        } else if (residual_zero) {
            parts.emplace(deg, Symbol::zero(deg, delta, pdeg));
            res.status = QuantizeStatus::Ambiguous;
        } else {
            res.status = QuantizeStatus::NoSolution;
            return res;
        }
    }

    GradedSymbol g(delta);
    for (const auto& [d, s] : parts) g.add(s);
    res.graded = g;
    res.op = q_aff(g, lambda);
    return res;
}

namespace {

SuperFn dx_pow(const SuperFn& F, int l) {
    SuperFn v = F;
    for (int i = 0; i < l; ++i) v = derive_x(v);
    return v;
}

SuperFn dd(const SuperFn& F) { return dbar(1, dbar(2, F)); }

}  // namespace

QuantizationResult quantize_closed_form(const Symbol& S, const Rational& lambda) {
    Parity pS = S.parity_required();
    const Rational delta = S.delta();
    HalfInt k = S.degree();
    Rational alpha_top = casimir_eigenvalue(k, delta);

    auto A = [](const Rational& j) { return -j; };
    auto B = [&lambda](const Rational& j) { return -(j + Rational(2) * lambda); };

    GradedSymbol g(delta);
    g.add(S);
    QuantizationResult res;

    if (k != kZeroDeg) {
        Rational delta_half = alpha_top - casimir_eigenvalue(k - kHalf, delta);
        Rational kr = k.to_rational();
        Rational Ak = A(kr), Bk = B(kr);

        // Running data over integer drops i: product of A_{k-i} B_{k-i}
        // (plain for integer k, shifted to A_{k-1/2-i} B_{k-1/2-i} for
        // half-odd k) and product of the pivots alpha_k - alpha_{k-i}.
        Rational ab_prod(1), pivot_prod(1);
        bool pivot_prod_zero = false;

        for (HalfInt l = kHalf; l <= k; l += kHalf) {
            HalfInt deg = k - l;
            if (k.is_integer()) {
                if (l.is_integer()) {
                    Rational pivot = alpha_top - casimir_eigenvalue(deg, delta);
                    pivot_prod *= pivot;
                    if (pivot.is_zero()) pivot_prod_zero = true;
                    if (pivot_prod_zero) throw ZeroDenominatorError("C_" + l.str(), deg);
                    Rational Cl = ab_prod / pivot_prod;
                    if (delta_half.is_zero()) throw ZeroDenominatorError("D_" + l.str(), deg);
                    Rational Dl = -l.to_rational() * ab_prod / (Rational(2) * delta_half * pivot_prod);

                    Rational Akl = A(deg.to_rational()), Bkl = B(deg.to_rational());
                    int li = l.as_int();
                    SuperFn F1l = dx_pow(S.F1(), li), F2l = dx_pow(S.F2(), li);
                    SuperFn DDF1 = dd(dx_pow(S.F1(), li - 1)), DDF2 = dd(dx_pow(S.F2(), li - 1));
                    SuperFn G1 = F1l.scaled(Cl * Ak * Bkl) +
                                 (F1l.scaled(Ak * Bkl) - DDF2.scaled(Bk * Bkl)).scaled(Dl);
                    SuperFn G2 = F2l.scaled(Cl * Akl * Bk) +
                                 (DDF1.scaled(Ak * Akl) + F2l.scaled(Akl * Bk)).scaled(Dl);
                    if (!(G1.is_zero() && G2.is_zero()))
                        g.add(Symbol(deg, delta, G1, G2, pS));
                    ab_prod *= A(deg.to_rational()) * B(deg.to_rational());
                } else {
                    if (delta_half.is_zero()) throw ZeroDenominatorError("E_" + l.str(), deg);
                    if (pivot_prod_zero) throw ZeroDenominatorError("E_" + l.str(), deg);
                    Rational El = ab_prod / (Rational(2) * delta_half * pivot_prod);
                    int fl = l.floor();
                    SuperFn F1l = dx_pow(S.F1(), fl), F2l = dx_pow(S.F2(), fl);
                    // The eigenvector system fixes the overall sign of this
                    // half-step as (-1)^{parity of S}.
                    Rational sg(parity_sign(pS));
                    SuperFn G1 = (dbar(1, F1l).scaled(Ak) + dbar(2, F2l).scaled(Bk)).scaled(sg * El);
                    SuperFn G2 = (dbar(2, F1l).scaled(Ak) - dbar(1, F2l).scaled(Bk)).scaled(sg * El);
                    if (!(G1.is_zero() && G2.is_zero()))
                        g.add(Symbol(deg, delta, G1, G2, flip(pS)));
                }
            } else {
                if (l.is_integer()) {
                    Rational pivot = alpha_top - casimir_eigenvalue(deg, delta);
                    pivot_prod *= pivot;
                    if (pivot.is_zero()) pivot_prod_zero = true;
                    // numerator product gains A_{k-1/2-(l-1)} B_{...} = AB at degree deg+1/2
                    ab_prod *= A((deg + kHalf).to_rational()) * B((deg + kHalf).to_rational());
                    if (pivot_prod_zero) throw ZeroDenominatorError("C'_" + l.str(), deg);
                    Rational Cl = ab_prod / pivot_prod;
                    if (delta_half.is_zero()) throw ZeroDenominatorError("D'_" + l.str(), deg);
                    Rational Dl = -l.to_rational() * ab_prod / (Rational(2) * delta_half * pivot_prod);

                    int li = l.as_int();
                    SuperFn F1l = dx_pow(S.F1(), li), F2l = dx_pow(S.F2(), li);
                    SuperFn DDF1 = dd(dx_pow(S.F1(), li - 1)), DDF2 = dd(dx_pow(S.F2(), li - 1));
                    SuperFn G1 = F1l.scaled(Cl) + (F1l - DDF2).scaled(Dl);
                    SuperFn G2 = F2l.scaled(Cl) + (DDF1 + F2l).scaled(Dl);
                    if (!(G1.is_zero() && G2.is_zero()))
                        g.add(Symbol(deg, delta, G1, G2, pS));
                } else {
                    if (delta_half.is_zero()) throw ZeroDenominatorError("E'_" + l.str(), deg);
                    if (pivot_prod_zero) throw ZeroDenominatorError("E'_" + l.str(), deg);
                    Rational El = ab_prod / (Rational(2) * delta_half * pivot_prod);
                    int fl = l.floor();
                    Rational Akl = A(deg.to_rational()), Bkl = B(deg.to_rational());
                    SuperFn F1l = dx_pow(S.F1(), fl), F2l = dx_pow(S.F2(), fl);
                    Rational sg(-parity_sign(pS));
                    SuperFn G1 = (dbar(1, F1l) + dbar(2, F2l)).scaled(sg * El * Bkl);
                    SuperFn G2 = (dbar(2, F1l) - dbar(1, F2l)).scaled(sg * El * Akl);
                    if (!(G1.is_zero() && G2.is_zero()))
                        g.add(Symbol(deg, delta, G1, G2, flip(pS)));
                }
            }
        }
    }

    res.status = QuantizeStatus::Unique;
    res.graded = g;
    res.op = q_aff(g, lambda);
    return res;
}

QuantizationResult quantize(const Symbol& S, const Rational& lambda, QuantizeMethod method) {
    return method == QuantizeMethod::Iterative ? quantize_iterative(S, lambda)
                                               : quantize_closed_form(S, lambda);
}

int EquivarianceReport::generators_passed() const {
    int n = 0;
    for (int f : failures_per_generator)
        if (f == 0) ++n;
    return usable ? n : 0;
}

EquivarianceReport verify_equivariance(const Rational& lambda, const Rational& delta, HalfInt k,
                                       int trials, unsigned long long seed, QuantizeMethod method,
                                       int max_degree) {
    EquivarianceReport rep;
    rep.lambda = lambda;
    rep.delta = delta;
    rep.degree = k;
    rep.trials = trials;
    Sampler smp(seed);

    auto quant = [&](const Symbol& s) -> std::optional<DiffOp> {
        try {
            QuantizationResult r = quantize(s, lambda, method);
            if (r.status == QuantizeStatus::Unique && r.op) return r.op;
        } catch (const ZeroDenominatorError&) {
        }
        return std::nullopt;
    };

    for (int t = 0; t < trials; ++t) {
        Symbol S = smp.symbol(k, delta, smp.parity(), max_degree);
        auto QS = quant(S);
        if (!QS) {
            rep.usable = false;
            rep.unusable_reason = "no quantization of this degree at these weights";
            return rep;
        }
        for (size_t gi = 0; gi < kGenerators.size(); ++gi) {
            SuperFn f = hamiltonian(kGenerators[gi]);
            DiffOp lhs = lie_op(f, *QS);
            Symbol ls = lie_symbol(f, S);
            auto QLS = quant(ls);
            if (QLS && lhs == *QLS) continue;
            rep.failures_per_generator[gi]++;
            if (rep.counterexamples.size() < 8) {
                std::string msg = "generator " + std::string(generator_name(kGenerators[gi])) +
                                  ", S = (" + format(S.F1()) + ", " + format(S.F2()) + "): ";
                if (!QLS)
                    msg += "right-hand quantization unavailable";
                else
                    msg += "lhs = " + format(lhs) + " ; rhs = " + format(*QLS);
                rep.counterexamples.push_back(std::move(msg));
            }
        }
    }
    return rep;
}

}  // namespace spoq
