#pragma once

#include <array>

#include "spoq/vectorfield.hpp"

namespace spoq {

/// 4x4 exact-rational matrix in the gl(2|2) block convention: rows/columns
/// 0,1 even and 2,3 odd, blocks (A1 A2 / A3 A4).
struct SpoMatrix {
    std::array<std::array<Rational, 4>, 4> e{};

    static SpoMatrix zero() { return {}; }
    static SpoMatrix identity();

    Rational& at(int r, int c) { return e[r][c]; }
    const Rational& at(int r, int c) const { return e[r][c]; }

    bool is_zero() const;
    SpoMatrix supertranspose() const;
    Rational supertrace() const;

    /// (even block-diagonal part, odd block-off-diagonal part).
    std::pair<SpoMatrix, SpoMatrix> parity_split() const;

    SpoMatrix scaled(const Rational& r) const;
    SpoMatrix operator-() const { return scaled(Rational(-1)); }
    friend SpoMatrix operator+(const SpoMatrix& a, const SpoMatrix& b);
    friend SpoMatrix operator-(const SpoMatrix& a, const SpoMatrix& b) { return a + (-b); }
    friend SpoMatrix operator*(const SpoMatrix& a, const SpoMatrix& b);
    friend bool operator==(const SpoMatrix& a, const SpoMatrix& b) { return a.e == b.e; }
    friend bool operator!=(const SpoMatrix& a, const SpoMatrix& b) { return !(a == b); }
};

/// Membership test A^{st} G + G A = 0, G = diag(J, Id), J = [[0,-1],[1,0]].
bool spo_member(const SpoMatrix& A);

/// K(A,B) = 2 str(AB). Rejects arguments outside the algebra.
Rational kform(const SpoMatrix& A, const SpoMatrix& B);

/// Super commutator of matrices, extended bilinearly over the block parities.
SpoMatrix matrix_bracket(const SpoMatrix& A, const SpoMatrix& B);

/// Embedding into vector fields through the projective action on the
/// affine chart (x, t1, t2). Rejects arguments outside the algebra.
VectorField projective_embed(const SpoMatrix& A);

/// The eight contact Hamiltonians spanning the algebra; the first five span
/// the affine subalgebra.
enum class Generator { One, X, Theta1, Theta2, Theta12, XSq, XTheta1, XTheta2 };

inline constexpr std::array<Generator, 8> kGenerators = {
    Generator::One,     Generator::X,   Generator::Theta1,  Generator::Theta2,
    Generator::Theta12, Generator::XSq, Generator::XTheta1, Generator::XTheta2};

inline constexpr std::array<Generator, 5> kAffineGenerators = {
    Generator::One, Generator::X, Generator::Theta1, Generator::Theta2, Generator::Theta12};

SuperFn hamiltonian(Generator g);
Parity generator_parity(Generator g);
const char* generator_name(Generator g);

/// The standard basis of the matrix algebra, i = 0..7, ordered as in the
/// sp(2) / o(2) / odd-block presentation.
SpoMatrix spo_basis_matrix(int i);

/// Matrix realizing X_g under projective_embed; the single correspondence
/// table every duality/Casimir computation goes through.
SpoMatrix generator_matrix(Generator g);

}  // namespace spoq
