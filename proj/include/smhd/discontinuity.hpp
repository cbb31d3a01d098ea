#pragma once

#include <string>

#include "smhd/core.hpp"

namespace smhd {

/// Two one-sided states on a front x1 = phi(t, x2). `plus` lives in
/// x1 > phi, `minus` in x1 < phi.
struct SidePair {
    State plus;
    State minus;
    FrontGeometry front;
    PhysParams params;
};

/// Normal/tangential decomposition of one side with respect to N = (1, -d2 phi).
struct SideTrace {
    double m = 0.0;    ///< mass flux h (vN - dt phi)
    double b = 0.0;    ///< h BN
    double vN = 0.0;   ///< v1 - v2 d2 phi
    double vTau = 0.0; ///< v1 d2 phi + v2
    double BN = 0.0;
    double BTau = 0.0;
};

struct TraceQuantities {
    SideTrace plus;
    SideTrace minus;
    double hMean = 0.0; ///< h+ + h- (the bracket <h>, not an average)
    double normSq = 1.0;
};

SideTrace side_trace(const State& u, const FrontGeometry& f);
TraceQuantities trace_quantities(const SidePair& sp);

/// Rebuilds (a1, a2) from its normal and tangential parts for slope d2 phi.
Vector2d from_normal_tangential(double normal, double tangential, double slope);

/// Residual of the reduced jump conditions
///   [m], [b], [h](m^2 - b^2 - g/2 |N|^2 <h> h+ h-), m[v_tau] - b[B_tau], m[B_tau] - b[v_tau]
/// with m, b taken as the two-sided averages. `entryScale` holds the magnitude
/// of the terms that cancel in each entry.
struct RHResidual {
    Vector5d r = Vector5d::Zero();
    Vector5d entryScale = Vector5d::Ones();
    double scale = 1.0; ///< max(1, entryScale)

    /// max_i |r_i| / max(1, entryScale_i)
    double relative() const;
};

RHResidual rh_residual(const SidePair& sp);

enum class DiscontinuityTag {
    Shock,
    CurrentVortexSheet,
    AlfvenDiscontinuity,
    Continuous,
    Inadmissible,
};

std::string to_string(DiscontinuityTag tag);

struct DiscontinuityKind {
    DiscontinuityTag tag = DiscontinuityTag::Continuous;
    std::string reason; ///< set for Inadmissible
    std::string note;   ///< diagnostic remark, e.g. the m = 0, b != 0 branch
};

constexpr double kDefaultTolerance = 1e-9;

/// Zero band tol * max(1, |m+|, |b+|, g <h>^2).
double zero_threshold(const TraceQuantities& tq, const PhysParams& p, double tol);

/// Branch order: Inadmissible, Continuous, CurrentVortexSheet, Alfven, Shock.
/// Throws AmbiguousClassification when the two sides fall into different
/// branches under the zero band or when no branch applies.
DiscontinuityKind classify(const SidePair& sp, double tol = kDefaultTolerance);

/// Flips B on both sides so that B_N >= 0 (on the plus side, or the minus side
/// when B_N+ vanishes).
SidePair canonicalize_field_sign(const SidePair& sp);

/// Mirror x1 -> -x1: swaps the sides, negates v1, B1, dt phi and d2 phi.
SidePair mirror(const SidePair& sp);

} // namespace smhd
