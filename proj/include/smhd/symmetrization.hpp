#pragma once

#include <string>

#include "smhd/core.hpp"
#include "smhd/discontinuity.hpp"

namespace smhd {

/// Lambda-parameterised symmetric form B0 dt U + B1 d1 U + B2 d2 U = 0 of the
/// system in the unknown (h, v, B). Obtained from the primary form by mixing
/// the momentum and induction rows with weight lambda and using div(hB) = 0
/// in the height row.
struct SecondaryMatrices {
    Matrix5d B0;
    Matrix5d B1;
    Matrix5d B2;
};

SecondaryMatrices secondary_matrices(const State& u, double lambda, const PhysParams& p);

/// h > 0 and |lambda| < 1; exactly the set where B0 is positive definite.
bool secondary_hyperbolic(const State& u, double lambda);

struct ResidualDecomposition {
    Vector5d primaryResidual;   ///< A0 dt U + A1 d1 U + A2 d2 U
    double divergenceTerm = 0;  ///< (B . grad) h + h div B = div(hB)
    Vector5d secondaryResidual; ///< B0 dt U + B1 d1 U + B2 d2 U
    double reconstructionError = 0;
    double scale = 1;           ///< magnitude of the products entering both residuals
};

/// Checks the identity
///   secondary[0]   = primary[0] - (g lambda / h) div(hB)
///   secondary[1:2] = primary[1:2] - lambda primary[3:4]
///   secondary[3:4] = primary[3:4] - lambda primary[1:2]
/// for arbitrary derivative tuples of U = (h, v, B).
ResidualDecomposition secondary_residual_decomposition(const State& u, const Vector5d& dt, const Vector5d& dx1,
                                                       const Vector5d& dx2, double lambda, const PhysParams& p);

struct SymmetrizerChoice {
    double lambdaPlus = 0.0;
    double lambdaMinus = 0.0;
    bool hyperbolicPlus = true;
    bool hyperbolicMinus = true;
};

/// Choice with |lambda+| = |lambda-| = |[v2]| / (|B2+| + |B2-|) solving
/// lambda+ B2+ - lambda- B2- = [v2]. Throws ZeroTangentialField if both B2 vanish.
SymmetrizerChoice lambda_for_cvs(const State& hatPlus, const State& hatMinus);

enum class CvsTag {
    SufficientlyStable,
    NscStable,
    NscUnstable,
    ExceptionalPoint,
    Inconclusive,
};

std::string to_string(CvsTag tag);

struct CvsVerdict {
    CvsTag tag = CvsTag::Inconclusive;
    double margin = 0.0;       ///< distance to the nearest boundary of the tested condition
    int exceptionalIndex = 0;  ///< 1..4: equalities of the exceptional set, 5: |[v2]| = 2|B2|,
                               ///< 6: |[v2]| = 2 sqrt(B2^2 + 2 g h)
};

/// Sufficient condition |B2+| + |B2-| - |[v2]| >= eps with max(|B2+|, |B2-|) >= eps.
/// Failure is Inconclusive, never unstable.
CvsVerdict cvs_sufficient_verdict(const State& hatPlus, const State& hatMinus, double epsilon,
                                  double tol = kDefaultTolerance);

/// Necessary and sufficient linear condition for the symmetric case B2+ = -B2-:
///   |[v2]| <= 2|B2+|  or  |[v2]| >= 2 sqrt(B2+^2 + 2 g h),
/// with the strict version and the exceptional equalities checked in the band tol.
CvsVerdict cvs_nsc_verdict(const State& hatPlus, const State& hatMinus, const PhysParams& p,
                           double tol = kDefaultTolerance);

/// Jump [(B1(U_hat) U . U)] of the boundary flux of the energy identity for
/// linearised perturbations U+- at x1 = 0. The perturbations must satisfy
///   v1+- - v2_hat+- d2phi equal on both sides, [h] = 0, B1+- = B2_hat+- d2phi.
double boundary_energy_term(const State& hatPlus, const State& hatMinus, const SymmetrizerChoice& choice,
                            const Vector5d& tracePlus, const Vector5d& traceMinus, double slopePerturbation,
                            const PhysParams& p, double tol = kDefaultTolerance);

/// Reduced form 2 g h+ [v2_hat - lambda_hat B2_hat] d2phi of the same jump.
double boundary_energy_reduced(const State& hatPlus, const State& hatMinus, const SymmetrizerChoice& choice,
                               const Vector5d& tracePlus, double slopePerturbation, const PhysParams& p);

} // namespace smhd
