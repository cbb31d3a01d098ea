#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smhd/fv/io.hpp"
#include "smhd/json_io.hpp"

namespace smhd::cli {

using io::json;

namespace {

std::string fmt(double x)
{
    return fv::format_number(x);
}

bool valid_format(const std::string& f, std::initializer_list<const char*> allowed)
{
    return std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return f == a; });
}

int bad_format(const std::string& f, std::ostream& err)
{
    err << "error: unsupported --format '" << f << "'\n";
    return kInputError;
}

/// Emits a JSON document on stdout (json) or a short summary (text), and
/// mirrors the JSON into out/<name> when an output directory is given.
void emit(const json& doc, const std::string& text, const ClassifyOptions& o, const std::string& name,
          std::ostream& out)
{
    if (!o.out.empty())
        write_file(o.out, name, io::dump(doc));
    out << (o.format == "text" ? text : io::dump(doc));
}

json cvs_report(const State& hatPlus, const State& hatMinus, const PhysParams& p, double epsilon, double tol)
{
    json r;
    r["v2Jump"] = hatPlus.v(1) - hatMinus.v(1);
    r["epsilon"] = epsilon;
    r["choice"] = io::to_json(lambda_for_cvs(hatPlus, hatMinus));
    r["sufficient"] = io::to_json(cvs_sufficient_verdict(hatPlus, hatMinus, epsilon, tol));
    try {
        r["nsc"] = io::to_json(cvs_nsc_verdict(hatPlus, hatMinus, p, tol));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotSymmetricCase)
            throw;
        r["nsc"] = nullptr;
        r["nscNote"] = "necessary and sufficient condition is only available for B2+ = -B2-";
    }
    return r;
}

std::string cvs_text(const json& r)
{
    std::ostringstream s;
    s << "lambda+: " << fmt(r["choice"]["lambdaPlus"].get<double>())
      << "  lambda-: " << fmt(r["choice"]["lambdaMinus"].get<double>()) << '\n';
    s << "sufficient: " << r["sufficient"]["verdict"].get<std::string>()
      << " (margin " << fmt(r["sufficient"]["margin"].get<double>()) << ")\n";
    if (r["nsc"].is_null())
        s << "nsc: n/a (" << r["nscNote"].get<std::string>() << ")\n";
    else {
        s << "nsc: " << r["nsc"]["verdict"].get<std::string>();
        if (r["nsc"].contains("exceptionalIndex"))
            s << " (" << r["nsc"]["exceptionalIndex"].get<int>() << ")";
        s << '\n';
    }
    return s.str();
}

struct ShockBundle {
    json doc;
    int code = kOk;
    std::string text;
};

ShockBundle shock_bundle(const ShockOptions& o)
{
    PhysParams p{o.g};
    validate(p);
    if (o.R == 1.0)
        throw Error(ErrorKind::DegenerateHeight, "R = 1 gives [h] = 0, no shock");
    const RectilinearShock s = rectilinear_shock(o.hMinus, o.R, o.B1Plus, o.B2, p);
    const SidePair sp = s.side_pair(p);
    const DiscontinuityKind kind = classify(sp, o.tol);
    const ShockDiagnostics d = lax_verdict(sp, o.tol);

    ShockBundle b;
    b.doc["input"] = {{"hMinus", o.hMinus}, {"R", o.R}, {"B1Plus", o.B1Plus}, {"B2", o.B2}, {"g", o.g}};
    b.doc["shock"] = io::to_json(s);
    b.doc["pair"] = io::to_json(sp);
    b.doc["classification"] = io::to_json(kind);
    b.doc["diagnostics"] = io::to_json(d);
    std::ostringstream t;
    t << "shock: h- " << fmt(s.hMinus) << " -> h+ " << fmt(s.hPlus) << ", v1- " << fmt(s.v1Minus) << ", v1+ "
      << fmt(s.v1Plus) << ", B1- " << fmt(s.B1Minus) << '\n';
    t << "lax: " << (d.lax.satisfied ? "satisfied" : "violated");
    if (d.lax.k)
        t << " (k=" << *d.lax.k << ")";
    t << '\n';
    if (o.R > 1.0) {
        const LinearizedShockSetup ls = linearized_setup(s, p);
        b.doc["linearized"] = io::to_json(ls);
        t << "M " << fmt(ls.M) << "  M1 " << fmt(ls.M1) << "  Mstar " << fmt(ls.Mstar) << "  d0 " << fmt(ls.d0)
          << "  ell0 " << fmt(ls.ell0) << "  a0 " << fmt(ls.a0) << '\n';
    } else {
        b.doc["linearized"] = nullptr;
        b.doc["warning"] = "Lax violated: [h]<=0";
        b.code = kRejected;
        t << "warning: Lax violated: [h]<=0\n";
    }
    b.text = t.str();
    return b;
}

int report_error(const Error& e, std::ostream& err)
{
    err << "error: " << e.what() << '\n';
    return kInputError;
}

} // namespace

void write_file(const std::string& dir, const std::string& name, const std::string& text)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::InvalidConfig, "cannot write '" + path.string() + "'");
    f << text;
}

int cmd_classify(const ClassifyOptions& o, std::ostream& out, std::ostream& err)
{
    if (!valid_format(o.format, {"json", "text"}))
        return bad_format(o.format, err);
    try {
        json in = io::read_json_file(o.input);
        if (in.is_object() && in.contains("pair"))
            in = in.at("pair");
        if (in.is_object() && !in.contains("g"))
            in["g"] = o.g;
        const SidePair sp = io::side_pair_from_json(in);
        const DiscontinuityKind kind = classify(sp, o.tol);
        const RHResidual rh = rh_residual(sp);

        json doc = io::to_json(kind);
        doc["traces"] = io::to_json(trace_quantities(sp));
        doc["rhResidual"] = io::to_json(rh);
        std::ostringstream t;
        t << "kind: " << to_string(kind.tag) << '\n';
        if (!kind.reason.empty())
            t << "reason: " << kind.reason << '\n';
        if (!kind.note.empty())
            t << "note: " << kind.note << '\n';
        t << "rh residual: " << fmt(rh.relative()) << '\n';

        if (kind.tag == DiscontinuityTag::Shock) {
            const ShockDiagnostics d = lax_verdict(sp, o.tol);
            doc["lax"] = io::to_json(d);
            t << "lax: " << (d.lax.satisfied ? "satisfied" : "violated");
            if (d.lax.k)
                t << ", k=" << *d.lax.k;
            t << '\n';
        } else if (kind.tag == DiscontinuityTag::CurrentVortexSheet) {
            const json r = cvs_report(sp.plus, sp.minus, sp.params, o.epsilon, o.tol);
            doc["cvs"] = r;
            t << cvs_text(r);
        }
        emit(doc, t.str(), o, "classify.json", out);
        return kind.tag == DiscontinuityTag::Inadmissible ? kRejected : kOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_shock(const ShockOptions& o, std::ostream& out, std::ostream& err)
{
    if (!valid_format(o.format, {"json", "text"}))
        return bad_format(o.format, err);
    try {
        const ShockBundle b = shock_bundle(o);
        if (!o.out.empty())
            write_file(o.out, "shock.json", io::dump(b.doc));
        out << (o.format == "text" ? b.text : io::dump(b.doc));
        if (b.code != kOk)
            err << "Lax violated: [h]<=0\n";
        return b.code;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_stability_shock(const ShockOptions& o, std::ostream& out, std::ostream& err)
{
    if (!valid_format(o.format, {"json", "text"}))
        return bad_format(o.format, err);
    try {
        const ShockBundle b = shock_bundle(o);
        const bool stable = b.doc["diagnostics"]["lax"]["satisfied"].get<bool>();
        json doc{{"verdict", stable ? "UniformlyStable" : "Unstable"},
                 {"heightIncrease", b.doc["diagnostics"]["heightJump"].get<double>() > 0.0},
                 {"lax", b.doc["diagnostics"]["lax"]},
                 {"linearized", b.doc["linearized"]}};
        const std::string text = std::string("verdict: ") + (stable ? "UniformlyStable" : "Unstable") +
                                 " ([h] " + (stable ? ">" : "<=") + " 0)\n";
        if (!o.out.empty())
            write_file(o.out, "stability.json", io::dump(doc));
        out << (o.format == "text" ? text : io::dump(doc));
        return stable ? kOk : kRejected;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_stability_cvs(const CvsOptions& o, std::ostream& out, std::ostream& err)
{
    if (!valid_format(o.format, {"json", "text"}))
        return bad_format(o.format, err);
    try {
        State plus, minus;
        PhysParams p{o.g};
        if (!o.input.empty()) {
            json in = io::read_json_file(o.input);
            if (in.is_object() && in.contains("pair"))
                in = in.at("pair");
            if (in.is_object() && !in.contains("g"))
                in["g"] = o.g;
            const SidePair sp = io::side_pair_from_json(in);
            plus = sp.plus;
            minus = sp.minus;
            p = sp.params;
        } else {
            if (!o.v2jump || !o.b2plus)
                throw Error(ErrorKind::InvalidConfig, "give --input or at least --v2jump and --b2plus");
            const double h = o.h.value_or(1.0);
            const double b2m = o.b2minus.value_or(-*o.b2plus);
            plus = make_state(h, 0.0, 0.5 * *o.v2jump, 0.0, *o.b2plus);
            minus = make_state(h, 0.0, -0.5 * *o.v2jump, 0.0, b2m);
        }
        validate(p);
        const json r = cvs_report(plus, minus, p, o.epsilon, o.tol);
        if (!o.out.empty())
            write_file(o.out, "stability_cvs.json", io::dump(r));
        out << (o.format == "text" ? cvs_text(r) : io::dump(r));
        return kOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.config.empty()) {
        err << "usage: smhd simulate --input <config.json> [--out <dir>]\n";
        return kInputError;
    }
    if (!valid_format(o.format, {"csv"}))
        return bad_format(o.format, err);
    fv::SimConfig cfg;
    try {
        cfg = fv::load_sim_config(o.config);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::CflViolation ? kCflViolation : kInputError;
    }
    try {
        const fv::SimResult r = fv::run(cfg);
        const bool linear = std::holds_alternative<fv::LinearPulseInit>(cfg.initial);

        std::ostringstream series, snap;
        fv::write_series_csv(series, r);
        fv::write_snapshot_csv(snap, r.final, linear);
        write_file(o.out, "series.csv", series.str());
        write_file(o.out, "final.csv", snap.str());

        json s;
        s["steps"] = r.steps;
        s["tEnd"] = r.final.t;
        s["dx"] = cfg.grid.dx();
        double divMax = 0.0;
        for (const auto& x : r.series)
            divMax = std::max(divMax, x.divNorm);
        if (linear) {
            std::ostringstream norms;
            fv::write_linear_norms_csv(norms, r);
            write_file(o.out, "linear_norms.csv", norms.str());
            double ratioMax = 0.0;
            const double n0 = r.linear.front().l2;
            for (const auto& n : r.linear)
                ratioMax = std::max(ratioMax, n0 > 0.0 ? n.l2 / n0 : 0.0);
            s["normRatioMax"] = ratioMax;
            s["normRatioFinal"] = n0 > 0.0 ? r.linear.back().l2 / n0 : 0.0;
            s["constraintMax"] = divMax;
        } else {
            double defect = 0.0;
            for (const auto& x : r.series)
                defect = std::max(defect, x.conservationDefect);
            s["divergenceInitial"] = r.series.front().divNorm;
            s["divergenceMax"] = divMax;
            s["conservationDefectMax"] = defect;
            const bool tracked = !std::isnan(r.series.front().frontAmp);
            if (tracked && cfg.dimensions == 1) {
                double drift = 0.0;
                for (const auto& x : r.series)
                    drift = std::max(drift, x.frontAmp);
                s["frontDrift"] = drift;
                s["frontDriftOverDx"] = drift / cfg.grid.dx();
            } else if (tracked) {
                const double a0 = r.series.front().frontAmp, aT = r.series.back().frontAmp;
                s["frontAmpInitial"] = a0;
                s["frontAmpFinal"] = aT;
                s["frontAmpRatio"] = a0 > 0.0 ? aT / a0 : 0.0;
                s["frontWidthFinal"] = r.series.back().frontWidth;
            }
        }
        write_file(o.out, "summary.json", io::dump(s));
        out << io::dump(s);
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::PositivityLoss: return kPositivityLoss;
        case ErrorKind::CflViolation: return kCflViolation;
        default: return kInputError;
        }
    }
}

} // namespace smhd::cli
