#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "spoq/spo_matrix.hpp"
#include "spoq/symbol.hpp"

namespace spoq {

/// Casimir eigenvalue on degree-k symbols with weight shift delta:
/// (delta - k)^2 for integer k, (delta - k)^2 - 1/4 for half-odd k.
Rational casimir_eigenvalue(HalfInt k, const Rational& delta);

/// One summand coeff * action(dual) o action(primal) of the Casimir.
struct CasimirTerm {
    Rational coeff;
    Generator dual;
    Generator primal;
};

/// The eight summands, ordered as in the expansion
///   -1/2 L_{x^2} L_1 - L_{x t1} L_{t1} - L_{x t2} L_{t2} + L_x^2
///   + L_{t1 t2}^2 + L_{t1} L_{x t1} + L_{t2} L_{x t2} - 1/2 L_1 L_{x^2};
/// K-duality against kform is asserted by the test suite.
const std::array<CasimirTerm, 8>& casimir_terms();

enum class CasimirRep { L, CalL };

GradedSymbol casimir(const Symbol& S, const Rational& lambda, CasimirRep rep);
GradedSymbol casimir(const GradedSymbol& S, const Rational& lambda, CasimirRep rep);

/// Critical weight shifts: values of delta at which two Casimir eigenvalues
/// alpha_k = alpha_l collide for some l < k <= max_k. Generated from the
/// closed-form families and cross-checked against the pairwise search.
std::set<Rational> critical_values(HalfInt max_k);
bool is_critical(const Rational& delta, HalfInt max_k);

enum class QuantizeStatus { Unique, NoSolution, Ambiguous };

struct PivotDiagnostic {
    HalfInt degree;
    Rational pivot;  // alpha_k - alpha_degree
    bool residual_zero;
};

struct QuantizationResult {
    QuantizeStatus status = QuantizeStatus::Unique;
    std::optional<GradedSymbol> graded;
    std::optional<DiffOp> op;
    std::vector<PivotDiagnostic> diagnostics;
};

/// Raised when a closed-form coefficient has a vanishing denominator.
class ZeroDenominatorError : public std::runtime_error {
public:
    ZeroDenominatorError(std::string coefficient, HalfInt degree);
    const std::string& coefficient() const { return coefficient_; }
    HalfInt degree() const { return degree_; }

private:
    std::string coefficient_;
    HalfInt degree_;
};

/// Degree-by-degree solution of the eigenvector system: each lower component
/// is obtained by dividing the projected N-image by alpha_k - alpha_degree.
/// Vanishing pivot with nonzero right-hand side reports NoSolution; with a
/// zero right-hand side the free component is set to zero and the result is
/// flagged Ambiguous.
QuantizationResult quantize_iterative(const Symbol& S, const Rational& lambda);

/// Closed-form coefficients C_l, D_l, E_l (integer degree) and their primed
/// variants (half-odd degree). Well-defined whenever the denominators
/// alpha_k - alpha_{k-i} (integer i) and alpha_k - alpha_{k-1/2} are nonzero,
/// which is weaker than non-criticality; throws ZeroDenominatorError otherwise.
QuantizationResult quantize_closed_form(const Symbol& S, const Rational& lambda);

enum class QuantizeMethod { Iterative, ClosedForm };
QuantizationResult quantize(const Symbol& S, const Rational& lambda, QuantizeMethod method);

struct EquivarianceReport {
    Rational lambda, delta;
    HalfInt degree;
    int trials = 0;
    std::array<int, 8> failures_per_generator{};
    std::vector<std::string> counterexamples;
    int generators_passed() const;
    bool all_passed() const { return generators_passed() == 8 && usable; }
    bool usable = true;  // false when the quantization itself was unavailable
    std::string unusable_reason;
};

/// Exact operator-level check of L^cal_{X_f} o Q = Q o L_{X_f} over all eight
/// generators on random homogeneous symbols. Trials are independent.
EquivarianceReport verify_equivariance(const Rational& lambda, const Rational& delta, HalfInt k,
                                       int trials, unsigned long long seed, QuantizeMethod method,
                                       int max_degree = 6);

}  // namespace spoq
