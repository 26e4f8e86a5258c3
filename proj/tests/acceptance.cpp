// Acceptance suite: every check is an exact identity in rational arithmetic
// (zero tolerance). One line per criterion, with the elapsed time against the
// stated budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spoq/expr.hpp"
#include "spoq/json_io.hpp"
#include "spoq/sampling.hpp"

using namespace spoq;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.size() < 2000) detail += "    failed: " + what + "\n";
        }
    }
};

SuperFn fn(const char* text) { return parse_superfn(text).value; }

bool collides(const Rational& delta, HalfInt max_k) {
    for (int kt = 1; kt <= max_k.twice; ++kt)
        for (int lt = 0; lt < kt; ++lt)
            if (casimir_eigenvalue(HalfInt{kt}, delta) == casimir_eigenvalue(HalfInt{lt}, delta))
                return true;
    return false;
}

void criterion_structure_constants(Check& c) {
    Rational z(0);
    DiffOp dx = DiffOp::dx_power(1, z, z);
    for (int i : {1, 2}) {
        DiffOp di = DiffOp::dbar_op(i, z, z);
        c.expect(compose(di, di) == -dx, "Dbar_i o Dbar_i = -dx");
    }
    DiffOp d1 = DiffOp::dbar_op(1, z, z), d2 = DiffOp::dbar_op(2, z, z);
    c.expect((compose(d1, d2) + compose(d2, d1)).is_zero(), "Dbar1 Dbar2 + Dbar2 Dbar1 = 0");

    Sampler smp(2024);
    for (int t = 0; t < 8; ++t) {
        SuperFn f = smp.superfn(5);
        c.expect(dbar(1, dbar(1, f)) == -derive_x(f), "Dbar1^2 = -dx on functions");
        c.expect(dbar(2, dbar(2, f)) == -derive_x(f), "Dbar2^2 = -dx on functions");
        c.expect((dbar(1, dbar(2, f)) + dbar(2, dbar(1, f))).is_zero(), "anticommutation on functions");
    }

    for (Generator a : kGenerators)
        for (Generator b : kGenerators) {
            SuperFn f = hamiltonian(a), g = hamiltonian(b);
            bool ok = hamiltonian_field(contact_bracket(f, g)) ==
                      bracket(hamiltonian_field(f), hamiltonian_field(g));
            c.expect(ok, std::string("X_{f,g} = [X_f,X_g] for (") + generator_name(a) + ", " +
                             generator_name(b) + ")");
        }
}

void criterion_matrix_realization(Check& c) {
    for (int i = 0; i < 8; ++i)
        c.expect(spo_member(spo_basis_matrix(i)), "basis matrix " + std::to_string(i) + " membership");

    const std::array<Generator, 8> order = {Generator::One,     Generator::Theta1,
                                            Generator::Theta2,  Generator::X,
                                            Generator::Theta12, Generator::XTheta1,
                                            Generator::XTheta2, Generator::XSq};
    auto dual = [](Generator g) -> SpoMatrix {
        switch (g) {
            case Generator::One: return generator_matrix(Generator::XSq).scaled(Rational(-1, 2));
            case Generator::Theta1: return -generator_matrix(Generator::XTheta1);
            case Generator::Theta2: return -generator_matrix(Generator::XTheta2);
            case Generator::X: return generator_matrix(Generator::X);
            case Generator::Theta12: return generator_matrix(Generator::Theta12);
            case Generator::XTheta1: return generator_matrix(Generator::Theta1);
            case Generator::XTheta2: return generator_matrix(Generator::Theta2);
            case Generator::XSq: return generator_matrix(Generator::One).scaled(Rational(-1, 2));
        }
        throw std::logic_error("unknown generator");
    };
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j)
            c.expect(kform(generator_matrix(order[i]), dual(order[j])) == Rational(i == j ? 1 : 0),
                     "K-duality entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

    auto X = [](Generator g) { return hamiltonian_field(hamiltonian(g)); };
    const std::pair<int, VectorField> images[] = {
        {0, X(Generator::X).scaled(Rational(2))},
        {1, X(Generator::XSq)},
        {2, -X(Generator::One)},
        {3, X(Generator::Theta12).scaled(Rational(2))},
        {4, X(Generator::XTheta1).scaled(Rational(-2))},
        {5, X(Generator::XTheta2).scaled(Rational(-2))},
        {6, X(Generator::Theta1).scaled(Rational(2))},
        {7, X(Generator::Theta2).scaled(Rational(2))},
    };
    for (const auto& [i, expect] : images)
        c.expect(projective_embed(spo_basis_matrix(i)) == expect,
                 "embedding image of basis matrix " + std::to_string(i));
}

void criterion_commutator_identities(Check& c) {
    Rational z(0);
    for (Generator g : kGenerators) {
        SuperFn f = hamiltonian(g);
        SuperFn fp = derive_x(f), fpp = derive_x(fp);
        SuperFn ddf = dbar(1, dbar(2, f));
        int fsign = parity_sign(generator_parity(g));
        DiffOp xf = lie_density_op(f, z);

        for (int k = 1; k <= 5; ++k) {
            DiffOp rhs(z, z);
            rhs.add_term({k, 0, 0}, fp.scaled(Rational(-k)));
            rhs.add_term({k - 1, 1, 0}, dbar(1, fp).scaled(Rational(fsign * k, 2)));
            rhs.add_term({k - 1, 0, 1}, dbar(2, fp).scaled(Rational(fsign * k, 2)));
            rhs.add_term({k - 1, 0, 0}, fpp.scaled(Rational(-k * (k - 1), 2)));
            c.expect(super_commutator(xf, DiffOp::dx_power(k, z, z)) == rhs,
                     std::string("[X_f, dx^k], f=") + generator_name(g) + ", k=" + std::to_string(k));

            DiffOp rhs2(z, z);
            rhs2.add_term({k - 1, 0, 0}, fp.scaled(Rational(k)));
            if (k >= 2) rhs2.add_term({k - 2, 0, 0}, fpp.scaled(Rational(k * (k - 1), 2)));
            c.expect(super_commutator(DiffOp::dx_power(k, z, z), DiffOp::multiplication(f, z, z)) == rhs2,
                     std::string("[dx^k, f], f=") + generator_name(g) + ", k=" + std::to_string(k));
        }

        DiffOp rhs3(z, z);
        rhs3.add_term({0, 1, 0}, fp.scaled(-half()));
        rhs3.add_term({0, 0, 1}, ddf.scaled(half()));
        c.expect(super_commutator(xf, DiffOp::dbar_op(1, z, z)) == rhs3,
                 std::string("[X_f, Dbar1], f=") + generator_name(g));

        DiffOp rhs4(z, z);
        rhs4.add_term({0, 0, 1}, fp.scaled(-half()));
        rhs4.add_term({0, 1, 0}, ddf.scaled(-half()));
        c.expect(super_commutator(xf, DiffOp::dbar_op(2, z, z)) == rhs4,
                 std::string("[X_f, Dbar2], f=") + generator_name(g));
    }
}

void criterion_gamma(Check& c) {
    Sampler smp(31415);
    const SuperFn quadratics[] = {fn("x^2"), fn("x*t1"), fn("x*t2")};
    for (int k2 = 1; k2 <= 6; ++k2) {
        HalfInt k{k2};
        for (int trial = 0; trial < 25; ++trial) {
            Rational lam = smp.rational(), delta = smp.rational();
            Symbol s = smp.symbol(k, delta, smp.parity(), 3);
            for (const SuperFn& f : quadratics) {
                GradedSymbol direct = gamma(f, s, lam);
                c.expect(direct == gamma_closed_form(f, s, lam),
                         "gamma = closed form at k=" + k.str());
                for (const auto& [deg, part] : direct.parts())
                    c.expect(deg < k && deg >= k - HalfInt::whole(1),
                             "gamma support in {k-1/2, k-1} at k=" + k.str());
            }
            for (Generator g : kAffineGenerators)
                c.expect(gamma(hamiltonian(g), s, lam).is_zero(),
                         std::string("gamma vanishes on ") + generator_name(g));
        }
    }
}

void criterion_casimir_scalar(Check& c) {
    Sampler smp(27182);
    for (int k2 = 0; k2 <= 6; ++k2) {
        HalfInt k{k2};
        for (int trial = 0; trial < 8; ++trial) {
            Rational lam = smp.rational(), delta = smp.rational();
            Symbol s = smp.symbol(k, delta, smp.parity(), 3);
            GradedSymbol expect(delta);
            expect.add(s.scaled(casimir_eigenvalue(k, delta)));
            c.expect(casimir(s, lam, CasimirRep::L) == expect,
                     "casimir(L) = alpha_k Id at k=" + k.str());
        }
    }
}

void criterion_casimir_difference(Check& c) {
    Sampler smp(16180);
    for (int k2 = 0; k2 <= 6; ++k2) {
        HalfInt k{k2};
        for (int trial = 0; trial < 4; ++trial) {
            Rational lam = smp.rational(), delta = smp.rational();
            Symbol s = smp.symbol(k, delta, smp.parity(), 3);
            GradedSymbol diff = casimir(s, lam, CasimirRep::CalL) - casimir(s, lam, CasimirRep::L);
            c.expect(diff == n_closed_form(s, lam), "calL - L = N at k=" + k.str());
        }
    }
}

void criterion_quantization(Check& c) {
    Sampler smp(14142);
    for (int pair = 0; pair < 50 && c.ok; ++pair) {
        auto [lam, delta] = smp.noncritical_weights(HalfInt::whole(3));
        for (int k2 = 1; k2 <= 6; ++k2) {
            HalfInt k{k2};
            Symbol s = smp.symbol(k, delta, smp.parity(), 3);
            QuantizationResult a = quantize_iterative(s, lam);
            QuantizationResult b = quantize_closed_form(s, lam);
            c.expect(a.status == QuantizeStatus::Unique, "iterative unique at k=" + k.str());
            c.expect(b.status == QuantizeStatus::Unique, "closed form defined at k=" + k.str());
            if (!a.op || !b.op) continue;
            c.expect(*a.op == *b.op, "methods agree at k=" + k.str() + ", lambda=" + lam.str() +
                                         ", delta=" + delta.str());
            c.expect(principal_symbol(*a.op, k) == s, "principal symbol preserved at k=" + k.str());
            for (Generator g : kGenerators) {
                SuperFn f = hamiltonian(g);
                DiffOp lhs = lie_op(f, *a.op);
                QuantizationResult r = quantize_iterative(lie_symbol(f, s), lam);
                bool ok = r.status == QuantizeStatus::Unique && r.op && lhs == *r.op;
                c.expect(ok, std::string("equivariance under ") + generator_name(g) +
                                 " at k=" + k.str() + ", lambda=" + lam.str() + ", delta=" + delta.str());
            }
        }
    }
}

void criterion_criticals_and_obstructions(Check& c) {
    HalfInt max_k = HalfInt::whole(4);
    auto values = critical_values(max_k);
    for (const auto& v : values)
        c.expect(collides(v, max_k), "family value " + v.str() + " really collides");
    Sampler smp(9999);
    for (int t = 0; t < 200; ++t) {
        Rational d = smp.rational(10, 6);
        c.expect(is_critical(d, max_k) == collides(d, max_k),
                 "is_critical agrees with the eigenvalue search at " + d.str());
    }

    // delta = k: obstruction at the first half-step
    {
        Symbol s(HalfInt::whole(1), Rational(1), fn("x"), {}, Parity::Even);
        QuantizationResult r = quantize_iterative(s, Rational(0));
        c.expect(r.status == QuantizeStatus::NoSolution, "no solution at delta=k");
        c.expect(!r.diagnostics.empty() && r.diagnostics.back().pivot.is_zero() &&
                     !r.diagnostics.back().residual_zero,
                 "nonzero residual diagnostics at delta=k");
        Symbol s2(HalfInt::whole(2), Rational(2), fn("x"), {}, Parity::Even);
        QuantizationResult r2 = quantize_iterative(s2, Rational(1, 3));
        c.expect(r2.status == QuantizeStatus::NoSolution, "no solution at delta=k (k=2)");
    }
    // delta = k - 1/2: obstruction at the full step
    {
        Symbol s(HalfInt::whole(1), Rational(1, 2), SuperFn::zero(), fn("x^2"), Parity::Even);
        QuantizationResult r = quantize_iterative(s, Rational(1));
        c.expect(r.status == QuantizeStatus::NoSolution, "no solution at delta=k-1/2");
        c.expect(!r.diagnostics.empty() && r.diagnostics.back().pivot.is_zero() &&
                     !r.diagnostics.back().residual_zero,
                 "nonzero residual diagnostics at delta=k-1/2");
        Symbol s2(HalfInt::whole(2), Rational(3, 2), fn("x^2"), {}, Parity::Even);
        QuantizationResult r2 = quantize_iterative(s2, Rational(1));
        c.expect(r2.status == QuantizeStatus::NoSolution, "no solution at delta=k-1/2 (k=2)");
    }
    // collision at drop 3/2 from k=2 (delta = 4/3): the closed form still
    // produces an equivariant quantization while the solver only reports the
    // ambiguity.
    {
        Rational lam(1, 5), delta(4, 3);
        c.expect(is_critical(delta, HalfInt::whole(2)), "4/3 is critical");
        Sampler local(777);
        Symbol s = local.symbol(HalfInt::whole(2), delta, Parity::Even, 2);
        QuantizationResult it = quantize_iterative(s, lam);
        c.expect(it.status == QuantizeStatus::Ambiguous, "iterative flags the free component");
        QuantizationResult cf = quantize_closed_form(s, lam);
        c.expect(cf.status == QuantizeStatus::Unique, "closed form well-defined at delta=4/3");
        EquivarianceReport rep =
            verify_equivariance(lam, delta, HalfInt::whole(2), 3, 4242, QuantizeMethod::ClosedForm, 2);
        c.expect(rep.all_passed(), "closed form equivariant at delta=4/3");
    }
}

void criterion_worked_value(Check& c) {
    Rational lam(0), delta(1, 3);
    Symbol s(HalfInt::whole(1), delta, fn("x"), {}, Parity::Even);
    DiffOp expect(lam, delta);
    expect.add_term({1, 0, 0}, fn("x"));
    expect.add_term({0, 1, 0}, fn("t1").scaled(Rational(3, 4)));
    expect.add_term({0, 0, 1}, fn("t2").scaled(Rational(3, 4)));

    QuantizationResult it = quantize_iterative(s, lam);
    QuantizationResult cf = quantize_closed_form(s, lam);
    c.expect(it.status == QuantizeStatus::Unique && *it.op == expect, "iterative worked value");
    c.expect(cf.status == QuantizeStatus::Unique && *cf.op == expect, "closed-form worked value");
    for (Generator g : kGenerators) {
        SuperFn f = hamiltonian(g);
        QuantizationResult r = quantize_iterative(lie_symbol(f, s), lam);
        bool ok = r.status == QuantizeStatus::Unique && lie_op(f, expect) == *r.op;
        c.expect(ok, std::string("worked value equivariant under ") + generator_name(g));
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* text;
        double budget_seconds;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "structure constants: Dbar_i^2 = -dx, {Dbar1,Dbar2} = 0, X_{f,g} = [X_f,X_g] (64 pairs)",
         1.0, criterion_structure_constants},
        {2, "matrix realization: membership, K-duality (64 pairs), embedding images", 1.0,
         criterion_matrix_realization},
        {3, "commutator identities with dx^k and Dbar_i for all generators, k <= 5", 5.0,
         criterion_commutator_identities},
        {4, "gamma: closed form = direct, vanishing on the affine subalgebra (k <= 3)", 30.0,
         criterion_gamma},
        {5, "density-action casimir is alpha_k Id on every degree k <= 3", 30.0,
         criterion_casimir_scalar},
        {6, "operator-action minus density-action casimir equals N (k <= 3)", 30.0,
         criterion_casimir_difference},
        {7, "50 noncritical weights, k in {1/2..3}: methods agree, symbol preserved, equivariant",
         120.0, criterion_quantization},
        {8, "critical set vs search (max k = 4); obstruction statuses; continuity case", 60.0,
         criterion_criticals_and_obstructions},
        {9, "worked value k=1, lambda=0, delta=1/3, S=(x,0) by both methods", 1.0,
         criterion_worked_value},
    };

    bool all_ok = true;
    for (const auto& cr : criteria) {
        Check chk;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(chk);
        } catch (const std::exception& e) {
            chk.ok = false;
            chk.detail += std::string("    exception: ") + e.what() + "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < cr.budget_seconds;
        bool ok = chk.ok && in_budget;
        all_ok = all_ok && ok;
        std::printf("%s [%d] %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", cr.id, cr.text,
                    secs, cr.budget_seconds);
        if (!chk.ok) std::fputs(chk.detail.c_str(), stdout);
        if (chk.ok && !in_budget) std::printf("    exceeded the time budget\n");
    }
    return all_ok ? 0 : 1;
}
