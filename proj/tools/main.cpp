#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sweep.hpp"

namespace {

void add_shock_flags(CLI::App* cmd, smhd::cli::ShockOptions& o)
{
    cmd->add_option("--hminus", o.hMinus, "upstream height h-")->capture_default_str();
    cmd->add_option("--ratio,-R", o.R, "height ratio R = h+/h-")->capture_default_str();
    cmd->add_option("--b1plus", o.B1Plus, "downstream normal field B1+ (> 0)")->capture_default_str();
    cmd->add_option("--b2", o.B2, "tangential field B2 (continuous)")->capture_default_str();
    cmd->add_option("--g", o.g, "gravity")->capture_default_str();
    cmd->add_option("--tol", o.tol, "classification tolerance")->capture_default_str();
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--format", o.format, "json or text")->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    using namespace smhd::cli;
    CLI::App app{"Shallow-water MHD discontinuities, stability verdicts and finite-volume runs"};
    app.require_subcommand(1);

    ClassifyOptions classifyOpts;
    auto* classifyCmd = app.add_subcommand("classify", "classify a two-sided state pair");
    classifyCmd->add_option("--input,input", classifyOpts.input, "state-pair or shock-bundle JSON")->required();
    classifyCmd->add_option("--out", classifyOpts.out, "output directory");
    classifyCmd->add_option("--format", classifyOpts.format, "json or text")->capture_default_str();
    classifyCmd->add_option("--tol", classifyOpts.tol, "classification tolerance")->capture_default_str();
    classifyCmd->add_option("--epsilon", classifyOpts.epsilon, "margin of the sufficient CVS condition")
        ->capture_default_str();
    classifyCmd->add_option("--g", classifyOpts.g, "gravity when the input has none")->capture_default_str();

    ShockOptions shockOpts;
    auto* shockCmd = app.add_subcommand("shock", "build a rectilinear shock with diagnostics");
    add_shock_flags(shockCmd, shockOpts);

    auto* stabilityCmd = app.add_subcommand("stability", "stability verdicts");
    stabilityCmd->require_subcommand(1);
    ShockOptions stabShockOpts;
    auto* stabShockCmd = stabilityCmd->add_subcommand("shock", "uniform stability of a rectilinear shock");
    add_shock_flags(stabShockCmd, stabShockOpts);

    CvsOptions cvsOpts;
    auto* cvsCmd = stabilityCmd->add_subcommand("cvs", "current-vortex sheet verdicts");
    cvsCmd->add_option("--input", cvsOpts.input, "state-pair JSON");
    cvsCmd->add_option("--v2jump", cvsOpts.v2jump, "[v2] = v2+ - v2-");
    cvsCmd->add_option("--b2plus", cvsOpts.b2plus, "B2+");
    cvsCmd->add_option("--b2minus", cvsOpts.b2minus, "B2- (default -B2+)");
    cvsCmd->add_option("--height", cvsOpts.h, "common height (default 1)");
    cvsCmd->add_option("--g", cvsOpts.g, "gravity")->capture_default_str();
    cvsCmd->add_option("--epsilon", cvsOpts.epsilon, "margin of the sufficient condition")->capture_default_str();
    cvsCmd->add_option("--tol", cvsOpts.tol, "tolerance for the exceptional equalities")->capture_default_str();
    cvsCmd->add_option("--out", cvsOpts.out, "output directory");
    cvsCmd->add_option("--format", cvsOpts.format, "json or text")->capture_default_str();

    SweepOptions sweepOpts;
    std::string xAxis, yAxis;
    std::vector<std::string> fixed;
    auto* sweepCmd = app.add_subcommand("sweep", "evaluate a verdict over a 2D parameter grid");
    sweepCmd->add_option("--verdict", sweepOpts.spec.verdict, "lax, cvs-sufficient or cvs-nsc")
        ->capture_default_str();
    sweepCmd->add_option("--x", xAxis, "name:lo:hi:count");
    sweepCmd->add_option("--y", yAxis, "name:lo:hi:count");
    sweepCmd->add_option("--fixed", fixed, "name=value (repeatable)");
    sweepCmd->add_option("--g", sweepOpts.spec.g, "gravity")->capture_default_str();
    sweepCmd->add_option("--tol", sweepOpts.spec.tol, "verdict tolerance")->capture_default_str();
    sweepCmd->add_option("--input", sweepOpts.input, "sweep spec JSON (overrides the flags)");
    sweepCmd->add_option("--out", sweepOpts.out, "output directory (sweep.csv, sweep.svg)");
    sweepCmd->add_option("--format", sweepOpts.format, "csv or svg (default: both into --out, csv to stdout)");

    SimulateOptions simOpts;
    auto* simCmd = app.add_subcommand("simulate", "run a finite-volume or linearised simulation");
    simCmd->add_option("--input,config", simOpts.config, "simulation config JSON");
    simCmd->add_option("--out", simOpts.out, "output directory")->capture_default_str();
    simCmd->add_option("--format", simOpts.format, "csv")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    if (*classifyCmd)
        return cmd_classify(classifyOpts, std::cout, std::cerr);
    if (*shockCmd)
        return cmd_shock(shockOpts, std::cout, std::cerr);
    if (*stabShockCmd)
        return cmd_stability_shock(stabShockOpts, std::cout, std::cerr);
    if (*cvsCmd)
        return cmd_stability_cvs(cvsOpts, std::cout, std::cerr);
    if (*sweepCmd) {
        try {
            if (!xAxis.empty())
                sweepOpts.spec.x = parse_axis(xAxis);
            if (!yAxis.empty())
                sweepOpts.spec.y = parse_axis(yAxis);
            for (const auto& f : fixed) {
                const auto eq = f.find('=');
                if (eq == std::string::npos)
                    throw smhd::Error(smhd::ErrorKind::InvalidConfig, "--fixed expects name=value, got '" + f + "'");
                sweepOpts.spec.fixed[f.substr(0, eq)] = std::stod(f.substr(eq + 1));
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kInputError;
        }
        return cmd_sweep(sweepOpts, std::cout, std::cerr);
    }
    if (*simCmd) {
        if (simOpts.config.empty())
            std::cerr << simCmd->help();
        return cmd_simulate(simOpts, std::cout, std::cerr);
    }
    return kInputError;
}
