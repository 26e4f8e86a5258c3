#include "spoq/diffop.hpp"

#include <stdexcept>

namespace spoq {

SuperFn DiffOp::coeff(OpKey k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? SuperFn::zero() : it->second;
}

void DiffOp::add_term(OpKey k, const SuperFn& c) {
    if (c.is_zero()) return;
    if (k.l < 0 || k.m < 0 || k.m > 1 || k.n < 0 || k.n > 1)
        throw std::invalid_argument("operator monomial outside normal form");
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<HalfInt> DiffOp::order() const {
    std::optional<HalfInt> best;
    for (const auto& [k, c] : terms_) {
        HalfInt o = k.order();
        if (!best || o > *best) best = o;
    }
    return best;
}

std::optional<Parity> DiffOp::parity() const {
    std::optional<Parity> p;
    for (const auto& [k, c] : terms_) {
        auto cp = c.parity();
        Parity word = (k.m + k.n) % 2 == 0 ? Parity::Even : Parity::Odd;
        if (!cp) return std::nullopt;
        Parity tp = *cp + word;
        if (!p)
            p = tp;
        else if (*p != tp)
            return std::nullopt;
    }
    return p ? p : std::optional<Parity>(Parity::Even);
}

std::pair<DiffOp, DiffOp> DiffOp::parity_split() const {
    DiffOp even(lambda_, mu_), odd(lambda_, mu_);
    for (const auto& [k, c] : terms_) {
        Parity word = (k.m + k.n) % 2 == 0 ? Parity::Even : Parity::Odd;
        SuperFn ce = c.even_part(), co = c.odd_part();
        ((word == Parity::Even) ? even : odd).add_term(k, ce);
        ((word == Parity::Even) ? odd : even).add_term(k, co);
    }
    return {even, odd};
}

DiffOp DiffOp::scaled(const Rational& r) const {
    DiffOp d(lambda_, mu_);
    if (r.is_zero()) return d;
    for (const auto& [k, c] : terms_) d.terms_[k] = c.scaled(r);
    return d;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    if (a.lambda_ != b.lambda_ || a.mu_ != b.mu_)
        throw std::invalid_argument("operator sum requires equal weights");
    DiffOp d = a;
    for (const auto& [k, c] : b.terms_) d.add_term(k, c);
    return d;
}

DiffOp DiffOp::multiplication(const SuperFn& f, Rational lambda, Rational mu) {
    DiffOp d(std::move(lambda), std::move(mu));
    d.add_term({0, 0, 0}, f);
    return d;
}

DiffOp DiffOp::dx_power(int l, Rational lambda, Rational mu) {
    DiffOp d(std::move(lambda), std::move(mu));
    d.add_term({l, 0, 0}, SuperFn::one());
    return d;
}

DiffOp DiffOp::dbar_op(int i, Rational lambda, Rational mu) {
    DiffOp d(std::move(lambda), std::move(mu));
    OpKey k;
    (i == 1 ? k.m : k.n) = 1;
    if (i != 1 && i != 2) throw std::domain_error("dbar index must be 1 or 2");
    d.add_term(k, SuperFn::one());
    return d;
}

namespace {

using TermMap = std::map<OpKey, SuperFn>;

void add_to(TermMap& m, OpKey k, const SuperFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

TermMap mult_left(const SuperFn& f, const TermMap& t) {
    TermMap r;
    for (const auto& [k, c] : t) add_to(r, k, f * c);
    return r;
}

// dx o (a W) = a' W + a dx W
TermMap dx_left(const TermMap& t) {
    TermMap r;
    for (const auto& [k, c] : t) {
        add_to(r, k, derive_x(c));
        add_to(r, OpKey{k.l + 1, k.m, k.n}, c);
    }
    return r;
}

// Dbar_i o (a W) = Dbar_i(a) W + (-1)^{a~} a (Dbar_i W), with
// Dbar_i Dbar_i = -dx and Dbar2 Dbar1 = -Dbar1 Dbar2.
TermMap dbar_left(int i, const TermMap& t) {
    TermMap r;
    for (const auto& [k, c] : t) {
        add_to(r, k, dbar(i, c));
        auto push = [&](const SuperFn& part, int sg) {
            if (part.is_zero()) return;
            OpKey nk = k;
            if (i == 1) {
                if (k.m == 0) {
                    nk.m = 1;
                } else {
                    nk = OpKey{k.l + 1, 0, k.n};
                    sg = -sg;
                }
            } else {
                if (k.m == 1) sg = -sg;
                if (k.n == 0) {
                    nk.n = 1;
                } else {
                    nk = OpKey{k.l + 1, k.m, 0};
                    sg = -sg;
                }
            }
            add_to(r, nk, part.scaled(Rational(sg)));
        };
        push(c.even_part(), 1);
        push(c.odd_part(), -1);
    }
    return r;
}

}  // namespace

DiffOp compose(const DiffOp& D1, const DiffOp& D2) {
    if (D1.lambda() != D2.mu())
        throw std::invalid_argument("compose: weight mismatch (" + D1.lambda().str() +
                                    " vs " + D2.mu().str() + ")");
    DiffOp out(D2.lambda(), D1.mu());
    for (const auto& [k, c] : D1.terms()) {
        TermMap t = D2.terms();
        if (k.n) t = dbar_left(2, t);
        if (k.m) t = dbar_left(1, t);
        for (int j = 0; j < k.l; ++j) t = dx_left(t);
        t = mult_left(c, t);
        for (const auto& [nk, nc] : t) out.add_term(nk, nc);
    }
    return out;
}

SuperFn apply(const DiffOp& D, const SuperFn& F) {
    SuperFn out;
    for (const auto& [k, c] : D.terms()) {
        SuperFn v = F;
        if (k.n) v = dbar(2, v);
        if (k.m) v = dbar(1, v);
        for (int j = 0; j < k.l; ++j) v = derive_x(v);
        out += c * v;
    }
    return out;
}

namespace {

DiffOp field_to_op(const VectorField& X, Rational lambda, Rational mu) {
    DiffOp d(std::move(lambda), std::move(mu));
    d.add_term({1, 0, 0}, X.a + X.b1 * SuperFn::theta1() + X.b2 * SuperFn::theta2());
    d.add_term({0, 1, 0}, X.b1);
    d.add_term({0, 0, 1}, X.b2);
    return d;
}

}  // namespace

DiffOp lie_density_op(const SuperFn& f, const Rational& lambda) {
    DiffOp d = field_to_op(hamiltonian_field(f), lambda, lambda);
    d.add_term({0, 0, 0}, derive_x(f).scaled(lambda));
    return d;
}

SuperFn lie_density(const SuperFn& f, const Rational& lambda, const SuperFn& F) {
    return apply(hamiltonian_field(f), F) + derive_x(f).scaled(lambda) * F;
}

DiffOp lie_op(const SuperFn& f, const DiffOp& D) {
    DiffOp out = DiffOp::zero(D.lambda(), D.mu());
    auto [fe, fo] = parity_split(f);
    auto [de, dodd] = D.parity_split();
    const std::pair<const SuperFn*, Parity> fs[] = {{&fe, Parity::Even}, {&fo, Parity::Odd}};
    const std::pair<const DiffOp*, Parity> ds[] = {{&de, Parity::Even}, {&dodd, Parity::Odd}};
    for (const auto& [fp, pf] : fs) {
        if (fp->is_zero()) continue;
        DiffOp lmu = lie_density_op(*fp, D.mu());
        DiffOp llam = lie_density_op(*fp, D.lambda());
        for (const auto& [dp, pd] : ds) {
            if (dp->is_zero()) continue;
            int sg = koszul(pf, pd);
            out = out + compose(lmu, *dp) - compose(*dp, llam).scaled(Rational(sg));
        }
    }
    return out;
}

DiffOp super_commutator(const DiffOp& A, const DiffOp& B) {
    DiffOp out = DiffOp::zero(B.lambda(), A.mu());
    auto [ae, ao] = A.parity_split();
    auto [be, bo] = B.parity_split();
    const std::pair<const DiffOp*, Parity> as[] = {{&ae, Parity::Even}, {&ao, Parity::Odd}};
    const std::pair<const DiffOp*, Parity> bs[] = {{&be, Parity::Even}, {&bo, Parity::Odd}};
    for (const auto& [ap, pa] : as)
        for (const auto& [bp, pb] : bs) {
            if (ap->is_zero() || bp->is_zero()) continue;
            int sg = koszul(pa, pb);
            out = out + compose(*ap, *bp) - compose(*bp, *ap).scaled(Rational(sg));
        }
    return out;
}

}  // namespace spoq
