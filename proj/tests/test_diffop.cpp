#include "testutil.hpp"

using namespace spoq;
using namespace spoq::testutil;

namespace {

DiffOp random_op(Sampler& smp, int max_l, Rational lam, Rational mu) {
    DiffOp d(lam, mu);
    int terms = smp.uniform_int(1, 4);
    for (int t = 0; t < terms; ++t)
        d.add_term({smp.uniform_int(0, max_l), smp.uniform_int(0, 1), smp.uniform_int(0, 1)},
                   smp.superfn(3));
    return d;
}

}  // namespace

TEST_CASE("normal ordering basics") {
    Rational z(0);
    CHECK(compose(op_dbar(1), op_dbar(1)) == -op_dx(1));
    CHECK(compose(op_dbar(2), op_dbar(2)) == -op_dx(1));
    // Dbar2 o Dbar1 = -Dbar1 o Dbar2
    DiffOp d12(z, z);
    d12.add_term({0, 1, 1}, SuperFn::one());
    CHECK(compose(op_dbar(2), op_dbar(1)) == -d12);
    CHECK(compose(op_dbar(1), op_dbar(2)) == d12);

    // Dbar1 o (t1 Id) = 1 - t1 Dbar1
    DiffOp expect(z, z);
    expect.add_term({0, 0, 0}, SuperFn::one());
    expect.add_term({0, 1, 0}, -fn("t1"));
    CHECK(compose(op_dbar(1), op_mult(fn("t1"))) == expect);

    // dx^2 o (x^2 Id) = x^2 dx^2 + 4x dx + 2
    DiffOp expect2(z, z);
    expect2.add_term({2, 0, 0}, fn("x^2"));
    expect2.add_term({1, 0, 0}, fn("4*x"));
    expect2.add_term({0, 0, 0}, fn("2"));
    CHECK(compose(op_dx(2), op_mult(fn("x^2"))) == expect2);
}

TEST_CASE("compose rejects weight mismatch") {
    DiffOp a(Rational(0), Rational(1));
    a.add_term({1, 0, 0}, SuperFn::one());
    DiffOp b(Rational(0), Rational(0));
    b.add_term({1, 0, 0}, SuperFn::one());
    CHECK_THROWS_AS(compose(b, a), std::invalid_argument);
    CHECK_NOTHROW(compose(a, b));
}

TEST_CASE("operator application") {
    CHECK(apply(op_dx(1), fn("x^2")) == fn("2*x"));
    DiffOp d12(Rational(0), Rational(0));
    d12.add_term({0, 1, 1}, SuperFn::one());
    CHECK(apply(d12, fn("t1*t2")) == -fn("1"));
    CHECK(apply(DiffOp::zero(Rational(0), Rational(0)), fn("x + t1")).is_zero());
}

TEST_CASE("composition agrees with application, and is associative") {
    Sampler smp(31);
    for (int t = 0; t < 6; ++t) {
        Rational z(0);
        DiffOp a = random_op(smp, 2, z, z), b = random_op(smp, 2, z, z), c = random_op(smp, 2, z, z);
        SuperFn F = smp.superfn(3);
        CHECK(apply(compose(a, b), F) == apply(a, apply(b, F)));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("operator order and parity") {
    DiffOp d(Rational(0), Rational(0));
    d.add_term({1, 1, 0}, fn("x"));
    CHECK(*d.order() == HalfInt{3});
    d.add_term({2, 1, 1}, fn("t1"));
    CHECK(*d.order() == HalfInt::whole(3));
    CHECK(!DiffOp::zero(Rational(0), Rational(0)).order().has_value());

    DiffOp odd(Rational(0), Rational(0));
    odd.add_term({0, 1, 0}, fn("x"));
    odd.add_term({1, 0, 0}, fn("t2"));
    CHECK(odd.parity() == Parity::Odd);
    auto [e, o] = d.parity_split();
    CHECK((e + o) == d);
}

TEST_CASE("density action basics") {
    CHECK(lie_density(fn("1"), Rational(7), fn("x^2")) == fn("2*x"));
    // weight 2 along x on the density x: x + 2x
    CHECK(lie_density(fn("x"), Rational(2), fn("x")) == fn("3*x"));
}

TEST_CASE("lie derivative of operators: simple commutators") {
    // along the unit Hamiltonian the action is the plain commutator with dx
    DiffOp d = op_dx(1, Rational(1, 3), Rational(1, 3));
    CHECK(lie_op(fn("1"), d).is_zero());
    DiffOp ax(Rational(1, 3), Rational(1, 3));
    ax.add_term({1, 0, 0}, fn("x^2+x"));
    DiffOp expect(Rational(1, 3), Rational(1, 3));
    expect.add_term({1, 0, 0}, fn("2*x+1"));
    CHECK(lie_op(fn("1"), ax) == expect);
}

TEST_CASE("density action is a homomorphism on generator pairs") {
    Rational lam(2, 3);
    for (Generator a : kGenerators)
        for (Generator b : kGenerators) {
            SuperFn f = hamiltonian(a), g = hamiltonian(b);
            DiffOp lhs = lie_density_op(contact_bracket(f, g), lam);
            DiffOp rhs = super_commutator(lie_density_op(f, lam), lie_density_op(g, lam));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("generator commutator identities with powers of dx and with Dbar") {
    Rational z(0);
    for (Generator g : kGenerators) {
        SuperFn f = hamiltonian(g);
        SuperFn fp = derive_x(f), fpp = derive_x(derive_x(f));
        int fsign = parity_sign(generator_parity(g));
        DiffOp xf = lie_density_op(f, z);

        for (int kk = 1; kk <= 5; ++kk) {
            // [X_f, dx^k] = -k f' dx^k + (k/2)(-1)^{f~}(Dbar1(f') dx^{k-1} Dbar1
            //               + Dbar2(f') dx^{k-1} Dbar2) - k(k-1)/2 f'' dx^{k-1}
            DiffOp lhs = super_commutator(xf, op_dx(kk));
            DiffOp rhs(z, z);
            rhs.add_term({kk, 0, 0}, fp.scaled(Rational(-kk)));
            rhs.add_term({kk - 1, 1, 0}, dbar(1, fp).scaled(Rational(fsign * kk, 2)));
            rhs.add_term({kk - 1, 0, 1}, dbar(2, fp).scaled(Rational(fsign * kk, 2)));
            rhs.add_term({kk - 1, 0, 0}, fpp.scaled(Rational(-kk * (kk - 1), 2)));
            CHECK(lhs == rhs);

            // [dx^k, f] = k f' dx^{k-1} + k(k-1)/2 f'' dx^{k-2}
            DiffOp lhs2 = super_commutator(op_dx(kk), op_mult(f));
            DiffOp rhs2(z, z);
            rhs2.add_term({kk - 1, 0, 0}, fp.scaled(Rational(kk)));
            if (kk >= 2) rhs2.add_term({kk - 2, 0, 0}, fpp.scaled(Rational(kk * (kk - 1), 2)));
            CHECK(lhs2 == rhs2);
        }

        // [X_f, Dbar1] = -(1/2) f' Dbar1 + (1/2) Dbar1 Dbar2(f) Dbar2
        SuperFn dd = dbar(1, dbar(2, f));
        DiffOp rhs3(z, z);
        rhs3.add_term({0, 1, 0}, fp.scaled(-half()));
        rhs3.add_term({0, 0, 1}, dd.scaled(half()));
        CHECK(super_commutator(xf, op_dbar(1)) == rhs3);

        // [X_f, Dbar2] = -(1/2) f' Dbar2 - (1/2) Dbar1 Dbar2(f) Dbar1
        DiffOp rhs4(z, z);
        rhs4.add_term({0, 0, 1}, fp.scaled(-half()));
        rhs4.add_term({0, 1, 0}, dd.scaled(-half()));
        CHECK(super_commutator(xf, op_dbar(2)) == rhs4);
    }
}

TEST_CASE("lie derivative preserves the filtration order") {
    Sampler smp(33);
    Rational lam(1, 2), mu(1, 4);
    for (int t = 0; t < 5; ++t) {
        DiffOp d = random_op(smp, 4, lam, mu);
        for (Generator g : kGenerators) {
            DiffOp r = lie_op(hamiltonian(g), d);
            if (!r.is_zero()) CHECK(*r.order() <= *d.order());
        }
    }
}
