#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "smhd/discontinuity.hpp"

namespace smhd::cli {

struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;

    double at(int i) const { return lo + (hi - lo) * i / (count - 1); }
};

/// Verdict functions: "lax" over (hMinus, R, B1Plus, B2); "cvs-sufficient" over
/// (v2jump, B2plus, B2minus, h, epsilon); "cvs-nsc" over (v2jump, B2plus, h).
struct SweepSpec {
    std::string verdict = "cvs-nsc";
    Axis x{"v2jump", 0.0, 5.0, 200};
    Axis y{"B2plus", 0.0, 2.0, 200};
    std::map<std::string, double> fixed;
    double g = 1.0;
    double tol = kDefaultTolerance;
};

enum class VerdictCode : int { Stable = 0, Unstable = 1, Exceptional = 2, Inconclusive = 3 };

struct SweepPoint {
    double x = 0.0;
    double y = 0.0;
    VerdictCode code = VerdictCode::Inconclusive;
    std::string label;
};

/// "name:lo:hi:count". Throws InvalidConfig.
Axis parse_axis(const std::string& text);

/// Reads {"verdict", "x": {"name", "range", "count"}, "y", "fixed", "g", "tol"}.
SweepSpec parse_sweep_spec(const std::string& jsonText);

/// Throws InvalidConfig for unknown verdicts or parameters, counts < 2,
/// non-finite or empty ranges.
void validate(const SweepSpec& spec);

/// Row-major with x fastest; order independent of evaluation order.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepPoint>& points);

/// Polylines (in data coordinates) of the exceptional set and the condition
/// boundaries, available for cvs-nsc and cvs-sufficient sweeps over (v2jump, B2plus).
struct Curve {
    std::string label;
    std::vector<std::pair<double, double>> points;
};
std::vector<Curve> exceptional_curves(const SweepSpec& spec);

struct SweepOptions {
    SweepSpec spec;
    std::string input;
    std::string out;
    std::string format; ///< "csv", "svg", or empty for both (stdout gets csv)
};

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err);

} // namespace smhd::cli
