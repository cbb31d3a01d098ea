#pragma once

#include <array>
#include <optional>

#include "smhd/discontinuity.hpp"

namespace smhd {

/// Closed-form eigenvalues of A0^{-1}(A1 - A2 d2 phi), ascending:
///   vN - cgN, vN - |caN|, vN, vN + |caN|, vN + cgN
/// with caN = B_N and cgN = sqrt(B_N^2 + g h |N|^2).
struct CharacteristicSpeeds {
    std::array<double, 5> lambda{};
    double vN = 0.0;
    double cgN = 0.0;
    double caN = 0.0;
};

CharacteristicSpeeds characteristic_speed_set(const State& u, const FrontGeometry& f, const PhysParams& p);
std::array<double, 5> characteristic_speeds(const State& u, const FrontGeometry& f, const PhysParams& p);

/// det of the boundary matrix from the factorised form
///   g / h^6 * m (m^2 - b^2) (m^2 - b^2 - g |N|^2 h^3).
double det_boundary_matrix_closed_form(const State& u, const FrontGeometry& f, const PhysParams& p);

struct HugoniotState {
    State plus;
    double frontSpeed = 0.0;
};

/// Downstream state on the one-parameter Hugoniot family through `minus`,
/// parameterised by h+. Tangential components of v and B are carried over.
HugoniotState hugoniot_downstream(const State& minus, double slope, double hPlus, const PhysParams& p,
                                  int massFluxSign = +1);

struct LaxVerdict {
    std::optional<int> k; ///< shock family index from the ordered-speed scan
    bool satisfied = false;
    bool kTwoExcluded = true; ///< the k = 2 inequalities were found contradictory
};

struct ShockDiagnostics {
    std::array<double, 5> eigenPlus{};
    std::array<double, 5> eigenMinus{};
    double cgNPlus = 0.0, cgNMinus = 0.0;
    double caNPlus = 0.0, caNMinus = 0.0;
    double detPlus = 0.0, detMinus = 0.0;
    double frontSpeed = 0.0;
    LaxVerdict lax;
    double heightJump = 0.0; ///< h+ - h- in the canonical orientation (m > 0)
    bool relabeled = false;  ///< sides were mirrored to make m > 0
    bool fieldFlipped = false;
};

/// Lax conditions in the orientation m > 0, B_N >= 0:
///   vN- - dt phi > cgN-,   caN+ < vN+ - dt phi < cgN+.
/// Throws NotAShock unless the pair classifies as a shock.
ShockDiagnostics lax_verdict(const SidePair& sp, double tol = kDefaultTolerance);

/// Rectilinear reference shock x1 = 0 in the frame v2+- = 0.
struct RectilinearShock {
    double hMinus = 1.0, hPlus = 1.0;
    double v1Minus = 0.0, v1Plus = 0.0;
    double B1Minus = 0.0, B1Plus = 0.0;
    double B2 = 0.0;

    double ratio() const { return hPlus / hMinus; }
    State minus() const { return make_state(hMinus, v1Minus, 0.0, B1Minus, B2); }
    State plus() const { return make_state(hPlus, v1Plus, 0.0, B1Plus, B2); }
    SidePair side_pair(const PhysParams& p) const { return SidePair{plus(), minus(), FrontGeometry{}, p}; }
};

RectilinearShock rectilinear_shock(double hMinus, double R, double B1Plus, double B2, const PhysParams& p);

/// Dimensionless coefficients of the linearised shock problem behind the front.
struct LinearizedShockSetup {
    double M = 0.0;  ///< downstream Froude number v1+/c+
    double M1 = 0.0; ///< B1+/c+
    double M2 = 0.0; ///< B2+/c+
    double Mstar = 0.0;
    double R = 1.0;
    double beta = 0.0;
    double d0 = 0.0;
    double ell0 = 0.0;
    double a0 = 0.0;

    Vector2d calB() const { return {M1, M2}; }
};

/// Throws LaxViolation unless M1 < M < Mstar.
LinearizedShockSetup linearized_setup(const RectilinearShock& s, const PhysParams& p);

} // namespace smhd
