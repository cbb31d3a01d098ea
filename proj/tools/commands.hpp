#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "smhd/discontinuity.hpp"

namespace smhd::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kRejected = 2, ///< Inadmissible pair, or a shock violating the Lax conditions
    kPositivityLoss = 3,
    kCflViolation = 4,
};

struct ClassifyOptions {
    std::string input;
    std::string out;
    std::string format = "json";
    double tol = kDefaultTolerance;
    double epsilon = 0.1;
    double g = 1.0; ///< used only when the input carries no "g"
};

struct ShockOptions {
    double hMinus = 1.0;
    double R = 2.0;
    double B1Plus = 0.5;
    double B2 = 0.0;
    double g = 1.0;
    double tol = kDefaultTolerance;
    std::string out;
    std::string format = "json";
};

struct CvsOptions {
    std::string input;
    std::optional<double> v2jump, b2plus, b2minus, h;
    double g = 1.0;
    double epsilon = 0.1;
    double tol = kDefaultTolerance;
    std::string out;
    std::string format = "json";
};

struct SimulateOptions {
    std::string config;
    std::string out = ".";
    std::string format = "csv";
};

int cmd_classify(const ClassifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_shock(const ShockOptions& o, std::ostream& out, std::ostream& err);
int cmd_stability_shock(const ShockOptions& o, std::ostream& out, std::ostream& err);
int cmd_stability_cvs(const CvsOptions& o, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err);

/// Writes `text` to dir/name, creating dir. Throws InvalidConfig on failure.
void write_file(const std::string& dir, const std::string& name, const std::string& text);

} // namespace smhd::cli
