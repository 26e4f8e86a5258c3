#include "testutil.hpp"

using namespace spoq;
using namespace spoq::testutil;

TEST_CASE("membership of the standard basis") {
    for (int i = 0; i < 8; ++i) CHECK(spo_member(spo_basis_matrix(i)));
    CHECK_FALSE(spo_member(SpoMatrix::identity()));
    CHECK(spo_member(SpoMatrix::zero()));
}

TEST_CASE("supertranspose and supertrace") {
    SpoMatrix m = spo_basis_matrix(4);
    SpoMatrix st = m.supertranspose();
    CHECK(st.at(1, 2) == Rational(-1));  // upper-right block is -A3^t
    CHECK(st.at(2, 0) == Rational(1));   // lower-left block is A2^t
    CHECK(SpoMatrix::identity().supertrace() == Rational(0));
}

TEST_CASE("pairing values") {
    SpoMatrix m_one = generator_matrix(Generator::One);
    SpoMatrix m_x = generator_matrix(Generator::X);
    SpoMatrix m_xsq = generator_matrix(Generator::XSq);
    CHECK(kform(m_one, m_xsq.scaled(-half())) == Rational(1));
    CHECK(kform(m_x, m_x) == Rational(1));
    CHECK(kform(m_one, m_one) == Rational(0));
    CHECK_THROWS_AS(kform(SpoMatrix::identity(), m_x), std::invalid_argument);
}

namespace {

// Scalar factors of the dual basis, indexed like kGenerators.
spoq::SpoMatrix dual_matrix(spoq::Generator g) {
    using spoq::Generator;
    switch (g) {
        case Generator::One: return generator_matrix(Generator::XSq).scaled(spoq::Rational(-1, 2));
        case Generator::Theta1: return -generator_matrix(Generator::XTheta1);
        case Generator::Theta2: return -generator_matrix(Generator::XTheta2);
        case Generator::X: return generator_matrix(Generator::X);
        case Generator::Theta12: return generator_matrix(Generator::Theta12);
        case Generator::XTheta1: return generator_matrix(Generator::Theta1);
        case Generator::XTheta2: return generator_matrix(Generator::Theta2);
        case Generator::XSq: return generator_matrix(Generator::One).scaled(spoq::Rational(-1, 2));
    }
    throw std::logic_error("unknown generator");
}

}  // namespace

TEST_CASE("duality of the two bases: all 64 pairings") {
    const std::array<Generator, 8> order = {Generator::One,     Generator::Theta1,
                                            Generator::Theta2,  Generator::X,
                                            Generator::Theta12, Generator::XTheta1,
                                            Generator::XTheta2, Generator::XSq};
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            Rational expect(i == j ? 1 : 0);
            CHECK(kform(generator_matrix(order[i]), dual_matrix(order[j])) == expect);
        }
}

TEST_CASE("embedding images of the standard basis") {
    auto X = [](Generator g) { return hamiltonian_field(hamiltonian(g)); };
    CHECK(projective_embed(spo_basis_matrix(0)) == X(Generator::X).scaled(Rational(2)));
    CHECK(projective_embed(spo_basis_matrix(1)) == X(Generator::XSq));
    CHECK(projective_embed(spo_basis_matrix(2)) == -X(Generator::One));
    CHECK(projective_embed(spo_basis_matrix(3)) == X(Generator::Theta12).scaled(Rational(2)));
    CHECK(projective_embed(spo_basis_matrix(4)) == X(Generator::XTheta1).scaled(Rational(-2)));
    CHECK(projective_embed(spo_basis_matrix(5)) == X(Generator::XTheta2).scaled(Rational(-2)));
    CHECK(projective_embed(spo_basis_matrix(6)) == X(Generator::Theta1).scaled(Rational(2)));
    CHECK(projective_embed(spo_basis_matrix(7)) == X(Generator::Theta2).scaled(Rational(2)));
    CHECK_THROWS_AS(projective_embed(SpoMatrix::identity()), std::invalid_argument);
}

TEST_CASE("embedding is a homomorphism on all basis pairs") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            SpoMatrix a = spo_basis_matrix(i), b = spo_basis_matrix(j);
            CHECK(projective_embed(matrix_bracket(a, b)) ==
                  bracket(projective_embed(a), projective_embed(b)));
        }
}

TEST_CASE("generator matrices embed back to their fields") {
    for (Generator g : kGenerators)
        CHECK(projective_embed(generator_matrix(g)) == hamiltonian_field(hamiltonian(g)));
}
