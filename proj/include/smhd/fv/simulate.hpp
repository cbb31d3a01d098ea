#pragma once

#include <array>
#include <vector>

#include "smhd/fv/config.hpp"
#include "smhd/fv/grid.hpp"

namespace smhd::fv {

/// One row of the time series. For the linearised solver the five integrals
/// are those of (p, v1, v2, B1, B2), divNorm is the constraint residual,
/// frontAmp is the L2 norm of the front perturbation and energy is I(t).
struct Sample {
    double t = 0.0;
    std::array<double, 5> integrals{};
    double hMin = 0.0, hMax = 0.0;
    double divNorm = 0.0;
    double frontPosition = 0.0; ///< mean crossing position (NaN without a front)
    double frontAmp = 0.0;      ///< half-range of per-row crossings; 1D: |displacement|
    double frontWidth = 0.0;    ///< widest 10%-90% band over rows
    double energy = 0.0;
    double conservationDefect = 0.0; ///< max per-step relative defect so far
};

/// Norms of the linearised run: L2 and L2-plus-difference-quotient of U,
/// boundary trace, and front perturbation.
struct LinearNorms {
    double t = 0.0;
    double l2 = 0.0;
    double h1Proxy = 0.0;
    double trace = 0.0;
    double phi = 0.0;
    double energy = 0.0;
    double constraint = 0.0;
};

struct Snapshot {
    double t = 0.0;
    Field values; ///< primitive (h, v, B), or (p, v, B) for linear runs
    std::vector<double> phi;
};

struct SimResult {
    std::vector<Sample> series;
    std::vector<LinearNorms> linear;
    Snapshot final;
    std::vector<Snapshot> snapshots; ///< at cfg.snapshotTimes
    int steps = 0;
    double hReferenceLow = 0.0, hReferenceHigh = 0.0; ///< levels used for front tracking
};

/// First-order HLL finite-volume run on a single row (ny = 1).
SimResult simulate_1d(const SimConfig& cfg);

/// Unsplit first-order HLL run, periodic in x2.
SimResult simulate_2d(const SimConfig& cfg);

/// Stationary rectilinear shock with a cosine front displacement.
SimResult perturbed_shock_experiment(const RectilinearShock& shock, double amplitude, double wavenumber,
                                     SimConfig cfg);

/// Linearised constant-coefficient problem behind a shock on x1 > 0, periodic
/// in x2, with the five boundary relations imposed at x1 = 0.
SimResult linear_halfplane_simulate(const LinearizedShockSetup& setup, const SimConfig& cfg);

/// Dispatches on the initial data and dimension.
SimResult run(const SimConfig& cfg);

/// Forward-difference discrete div(hB) (RMS). First-order consistent.
double divergence_norm(const Field& conserved, Boundary x1Boundary);

struct FrontMeasure {
    double position = 0.0;
    double amplitude = 0.0;
    double width = 0.0;
};

/// Mid-level crossing per row with linear interpolation; width is the widest
/// distance between the 10% and 90% crossings.
FrontMeasure measure_front(const Field& primitive, double hLow, double hHigh);

} // namespace smhd::fv
