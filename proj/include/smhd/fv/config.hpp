#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smhd/fv/grid.hpp"
#include "smhd/shock.hpp"

namespace smhd::fv {

enum class Boundary { Outflow, Periodic };

/// Piecewise-constant data: `left` for x1 < interface, `right` beyond.
struct RiemannInit {
    State left = make_state(1, 0, 0, 0, 0);
    State right = make_state(1, 0, 0, 0, 0);
    double interface = 0.0;
};

/// Rectilinear shock with its front displaced to x1 = position + amplitude cos(wavenumber x2).
struct ShockFrontInit {
    double hMinus = 1.0;
    double R = 2.0;
    double B1Plus = 0.5;
    double B2 = 0.0;
    double amplitude = 0.0;
    double wavenumber = 0.0;
    double position = 0.0;
};

/// Smooth periodic cellular vortex on the unit square with div(hB) = 0:
///   hB = A (sin 2pi x cos 2pi y, -cos 2pi x sin 2pi y),  v = a (same pattern),
///   h = 1 + eta sin 2pi (x + y).
struct VortexInit {
    double fieldAmplitude = 0.2;
    double heightAmplitude = 0.1;
    double flowAmplitude = 0.1;
};

/// Compact pressure pulse for the linearised problem behind a rectilinear shock.
/// With `balanced` the field is B = -calB p so that div B + calB . grad p = 0.
struct LinearPulseInit {
    double hMinus = 1.0;
    double R = 2.0;
    double B1Plus = 0.5;
    double B2 = 0.0;
    double amplitude = 1.0;
    double center1 = 4.0;
    double center2 = 3.0;
    double radius = 1.5;
    bool balanced = true;
};

using InitialData = std::variant<RiemannInit, ShockFrontInit, VortexInit, LinearPulseInit>;

struct SimConfig {
    int dimensions = 1;
    Grid grid;
    double cfl = 0.45;
    double endTime = 1.0;
    PhysParams params;
    Boundary x1Boundary = Boundary::Outflow; ///< x2 is always periodic
    std::optional<double> fixedDt;
    std::optional<double> positivityFloor; ///< opt-in clipping h >= floor
    int sampleEvery = 1;
    InitialData initial = RiemannInit{};
    std::vector<double> snapshotTimes; ///< extra snapshots, landed on exactly
    double constraintTolerance = 1e-8;

    // Programmatic hooks (not part of the JSON schema).
    std::function<Vector5d(double x1, double x2)> customInitial; ///< primitive (or linear) state per point
    std::function<Vector5d(double x1, double x2, double t)> source; ///< conserved-variable forcing
};

/// Throws InvalidConfig (or CflViolation for a Courant number outside (0, 1)).
void validate(const SimConfig& cfg);

SimConfig parse_sim_config(const std::string& jsonText);
SimConfig load_sim_config(const std::string& path);
std::string sim_config_to_json(const SimConfig& cfg);

} // namespace smhd::fv
