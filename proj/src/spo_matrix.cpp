#include "spoq/spo_matrix.hpp"

#include <stdexcept>

namespace spoq {

SpoMatrix SpoMatrix::identity() {
    SpoMatrix m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = Rational(1);
    return m;
}

bool SpoMatrix::is_zero() const {
    for (const auto& row : e)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

SpoMatrix SpoMatrix::supertranspose() const {
    SpoMatrix st;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational v = e[j][i];
            if (i <= 1 && j >= 2) v = -v;  // the odd block A3 picks up a sign
            st.e[i][j] = v;
        }
    return st;
}

Rational SpoMatrix::supertrace() const { return e[0][0] + e[1][1] - e[2][2] - e[3][3]; }

std::pair<SpoMatrix, SpoMatrix> SpoMatrix::parity_split() const {
    SpoMatrix even, odd;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool diag_block = (i <= 1) == (j <= 1);
            (diag_block ? even : odd).e[i][j] = e[i][j];
        }
    return {even, odd};
}

SpoMatrix SpoMatrix::scaled(const Rational& r) const {
    SpoMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.e[i][j] = e[i][j] * r;
    return m;
}

SpoMatrix operator+(const SpoMatrix& a, const SpoMatrix& b) {
    SpoMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.e[i][j] = a.e[i][j] + b.e[i][j];
    return m;
}

SpoMatrix operator*(const SpoMatrix& a, const SpoMatrix& b) {
    SpoMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s;
            for (int k = 0; k < 4; ++k) s += a.e[i][k] * b.e[k][j];
            m.e[i][j] = s;
        }
    return m;
}

namespace {

SpoMatrix structure_form() {
    SpoMatrix g;
    g.e[0][1] = Rational(-1);
    g.e[1][0] = Rational(1);
    g.e[2][2] = Rational(1);
    g.e[3][3] = Rational(1);
    return g;
}

}  // namespace

bool spo_member(const SpoMatrix& A) {
    static const SpoMatrix G = structure_form();
    return (A.supertranspose() * G + G * A).is_zero();
}

Rational kform(const SpoMatrix& A, const SpoMatrix& B) {
    if (!spo_member(A) || !spo_member(B))
        throw std::invalid_argument("kform requires members of the matrix algebra");
    return Rational(2) * (A * B).supertrace();
}

SpoMatrix matrix_bracket(const SpoMatrix& A, const SpoMatrix& B) {
    auto [ae, ao] = A.parity_split();
    auto [be, bo] = B.parity_split();
    SpoMatrix r = ae * be - be * ae;
    r = r + (ae * bo - bo * ae);
    r = r + (ao * be - be * ao);
    r = r + (ao * bo + bo * ao);  // odd-odd super bracket is the anticommutator
    return r;
}

VectorField projective_embed(const SpoMatrix& A) {
    if (!spo_member(A)) throw std::invalid_argument("projective_embed requires a member of the matrix algebra");

    // Normalize the projective representative so the corner entry vanishes.
    SpoMatrix B = A - SpoMatrix::identity().scaled(A.at(0, 0));

    const std::array<SuperFn, 4> coord = {SuperFn::zero(), SuperFn::x(), SuperFn::theta1(),
                                          SuperFn::theta2()};
    auto par = [](int idx) { return idx == 1 ? Parity::Even : Parity::Odd; };

    std::array<SuperFn, 4> comp{};  // coefficient of d/dy^i, i = 1..3

    for (int i = 1; i <= 3; ++i) comp[i] -= SuperFn::constant(B.at(i, 0));

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (B.at(i, j).is_zero()) continue;
            int sg = (par(j) == Parity::Odd && (par(i) + par(j)) == Parity::Odd) ? -1 : 1;
            comp[i] -= coord[j].scaled(B.at(i, j) * Rational(sg));
        }

    for (int j = 1; j <= 3; ++j) {
        const Rational& xi = B.at(0, j);
        if (xi.is_zero()) continue;
        Rational c = xi * Rational(parity_sign(par(j)));
        for (int i = 1; i <= 3; ++i) comp[i] += (coord[j] * coord[i]).scaled(c);
    }

    return {comp[1], comp[2], comp[3]};
}

SuperFn hamiltonian(Generator g) {
    switch (g) {
        case Generator::One: return SuperFn::one();
        case Generator::X: return SuperFn::x();
        case Generator::Theta1: return SuperFn::theta1();
        case Generator::Theta2: return SuperFn::theta2();
        case Generator::Theta12: return SuperFn::theta12();
        case Generator::XSq: return SuperFn::from_poly(Poly::monomial(2, Rational(1)));
        case Generator::XTheta1: return {{}, Poly::x(), {}, {}};
        case Generator::XTheta2: return {{}, {}, Poly::x(), {}};
    }
    throw std::logic_error("unknown generator");
}

Parity generator_parity(Generator g) {
    switch (g) {
        case Generator::Theta1:
        case Generator::Theta2:
        case Generator::XTheta1:
        case Generator::XTheta2: return Parity::Odd;
        default: return Parity::Even;
    }
}

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::One: return "1";
        case Generator::X: return "x";
        case Generator::Theta1: return "t1";
        case Generator::Theta2: return "t2";
        case Generator::Theta12: return "t1*t2";
        case Generator::XSq: return "x^2";
        case Generator::XTheta1: return "x*t1";
        case Generator::XTheta2: return "x*t2";
    }
    return "?";
}

SpoMatrix spo_basis_matrix(int i) {
    SpoMatrix m;
    auto set = [&m](int r, int c, int v) { m.e[r][c] = Rational(v); };
    switch (i) {
        case 0: set(0, 0, 1); set(1, 1, -1); break;
        case 1: set(0, 1, 1); break;
        case 2: set(1, 0, 1); break;
        case 3: set(2, 3, 1); set(3, 2, -1); break;
        case 4: set(0, 2, 1); set(2, 1, 1); break;
        case 5: set(0, 3, 1); set(3, 1, 1); break;
        case 6: set(1, 2, 1); set(2, 0, -1); break;
        case 7: set(1, 3, 1); set(3, 0, -1); break;
        default: throw std::domain_error("basis index must be 0..7");
    }
    return m;
}

SpoMatrix generator_matrix(Generator g) {
    // Fixed by the images of the basis matrices under projective_embed:
    // 2X_x, X_{x^2}, -X_1, 2X_{t1 t2}, -2X_{x t1}, -2X_{x t2}, 2X_{t1}, 2X_{t2}.
    switch (g) {
        case Generator::X: return spo_basis_matrix(0).scaled(half());
        case Generator::XSq: return spo_basis_matrix(1);
        case Generator::One: return -spo_basis_matrix(2);
        case Generator::Theta12: return spo_basis_matrix(3).scaled(half());
        case Generator::XTheta1: return spo_basis_matrix(4).scaled(-half());
        case Generator::XTheta2: return spo_basis_matrix(5).scaled(-half());
        case Generator::Theta1: return spo_basis_matrix(6).scaled(half());
        case Generator::Theta2: return spo_basis_matrix(7).scaled(half());
    }
    throw std::logic_error("unknown generator");
}

}  // namespace spoq
