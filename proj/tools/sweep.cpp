#include "sweep.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "smhd/fv/io.hpp"
#include "smhd/json_io.hpp"
#include "smhd/symmetrization.hpp"
#include "svg.hpp"

namespace smhd::cli {

using io::json;

namespace {

const std::map<std::string, std::set<std::string>>& parameters()
{
    static const std::map<std::string, std::set<std::string>> p = {
        {"lax", {"hMinus", "R", "B1Plus", "B2"}},
        {"cvs-sufficient", {"v2jump", "B2plus", "B2minus", "h", "epsilon"}},
        {"cvs-nsc", {"v2jump", "B2plus", "h"}},
    };
    return p;
}

double value(const std::map<std::string, double>& v, const std::string& key, double fallback)
{
    const auto it = v.find(key);
    return it == v.end() ? fallback : it->second;
}

SweepPoint evaluate(const SweepSpec& spec, double x, double y)
{
    std::map<std::string, double> v = spec.fixed;
    v[spec.x.name] = x;
    v[spec.y.name] = y;
    const PhysParams p{spec.g};
    SweepPoint pt{x, y, VerdictCode::Inconclusive, "Inconclusive"};

    try {
        if (spec.verdict == "lax") {
            const double R = value(v, "R", 2.0);
            if (R == 1.0) {
                pt.label = "NoShock";
                return pt;
            }
            const RectilinearShock s =
                rectilinear_shock(value(v, "hMinus", 1.0), R, value(v, "B1Plus", 0.5), value(v, "B2", 0.0), p);
            const bool ok = lax_verdict(s.side_pair(p), spec.tol).lax.satisfied;
            pt.code = ok ? VerdictCode::Stable : VerdictCode::Unstable;
            pt.label = ok ? "LaxSatisfied" : "LaxViolated";
            return pt;
        }

        const double h = value(v, "h", 1.0);
        const double jump = value(v, "v2jump", 0.0);
        const double b2p = value(v, "B2plus", 1.0);
        const double b2m = spec.verdict == "cvs-nsc" ? -b2p : value(v, "B2minus", -b2p);
        const State plus = make_state(h, 0.0, 0.5 * jump, 0.0, b2p);
        const State minus = make_state(h, 0.0, -0.5 * jump, 0.0, b2m);
        const CvsVerdict cv = spec.verdict == "cvs-nsc"
                                  ? cvs_nsc_verdict(plus, minus, p, spec.tol)
                                  : cvs_sufficient_verdict(plus, minus, value(v, "epsilon", 0.1), spec.tol);
        pt.label = to_string(cv.tag);
        switch (cv.tag) {
        case CvsTag::SufficientlyStable:
        case CvsTag::NscStable: pt.code = VerdictCode::Stable; break;
        case CvsTag::NscUnstable: pt.code = VerdictCode::Unstable; break;
        case CvsTag::ExceptionalPoint:
            pt.code = VerdictCode::Exceptional;
            pt.label += "(" + std::to_string(cv.exceptionalIndex) + ")";
            break;
        case CvsTag::Inconclusive: pt.code = VerdictCode::Inconclusive; break;
        }
    } catch (const Error& e) {
        pt.code = VerdictCode::Inconclusive;
        pt.label = std::string(to_string(e.kind()));
    }
    return pt;
}

Axis axis_from_json(const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("name") || !j.contains("range") || !j.contains("count"))
        throw Error(ErrorKind::InvalidConfig, where + ": expected {name, range, count}");
    const auto& r = j.at("range");
    if (!j.at("name").is_string() || !r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number() ||
        !j.at("count").is_number_integer())
        throw Error(ErrorKind::InvalidConfig, where + ": malformed axis");
    return Axis{j.at("name").get<std::string>(), r[0].get<double>(), r[1].get<double>(), j.at("count").get<int>()};
}

} // namespace

Axis parse_axis(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 4)
        throw Error(ErrorKind::InvalidConfig, "axis '" + text + "' must be name:lo:hi:count");
    try {
        std::size_t used = 0;
        Axis a;
        a.name = parts[0];
        a.lo = std::stod(parts[1], &used);
        if (used != parts[1].size())
            throw std::invalid_argument("lo");
        a.hi = std::stod(parts[2], &used);
        if (used != parts[2].size())
            throw std::invalid_argument("hi");
        a.count = std::stoi(parts[3], &used);
        if (used != parts[3].size())
            throw std::invalid_argument("count");
        return a;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidConfig, "axis '" + text + "' has a malformed number");
    }
}

SweepSpec parse_sweep_spec(const std::string& jsonText)
{
    const json j = io::parse_json(jsonText);
    if (!j.is_object())
        throw Error(ErrorKind::InvalidConfig, "sweep spec must be an object");
    SweepSpec s;
    if (j.contains("verdict")) {
        if (!j.at("verdict").is_string())
            throw Error(ErrorKind::InvalidConfig, "verdict must be a string");
        s.verdict = j.at("verdict").get<std::string>();
    }
    if (!j.contains("x") || !j.contains("y"))
        throw Error(ErrorKind::InvalidConfig, "sweep spec needs axes 'x' and 'y'");
    s.x = axis_from_json(j.at("x"), "x");
    s.y = axis_from_json(j.at("y"), "y");
    if (j.contains("fixed")) {
        if (!j.at("fixed").is_object())
            throw Error(ErrorKind::InvalidConfig, "fixed must be an object of numbers");
        for (const auto& [k, v] : j.at("fixed").items()) {
            if (!v.is_number())
                throw Error(ErrorKind::InvalidConfig, "fixed." + k + " must be a number");
            s.fixed[k] = v.get<double>();
        }
    }
    if (j.contains("g"))
        s.g = j.at("g").get<double>();
    if (j.contains("tol"))
        s.tol = j.at("tol").get<double>();
    validate(s);
    return s;
}

void validate(const SweepSpec& spec)
{
    const auto it = parameters().find(spec.verdict);
    if (it == parameters().end())
        throw Error(ErrorKind::InvalidConfig, "unknown verdict '" + spec.verdict + "' (lax, cvs-sufficient, cvs-nsc)");
    const auto& allowed = it->second;
    for (const Axis* a : {&spec.x, &spec.y}) {
        if (!allowed.count(a->name))
            throw Error(ErrorKind::InvalidConfig, "parameter '" + a->name + "' is not swept by " + spec.verdict);
        if (a->count < 2)
            throw Error(ErrorKind::InvalidConfig, "axis '" + a->name + "' needs at least 2 samples");
        if (!std::isfinite(a->lo) || !std::isfinite(a->hi) || !(a->hi > a->lo))
            throw Error(ErrorKind::InvalidConfig, "axis '" + a->name + "' needs a finite range with hi > lo");
    }
    if (spec.x.name == spec.y.name)
        throw Error(ErrorKind::InvalidConfig, "the two axes must differ");
    for (const auto& [k, v] : spec.fixed) {
        if (!allowed.count(k))
            throw Error(ErrorKind::InvalidConfig, "fixed parameter '" + k + "' is not used by " + spec.verdict);
        if (!std::isfinite(v))
            throw Error(ErrorKind::InvalidConfig, "fixed parameter '" + k + "' must be finite");
    }
    validate(PhysParams{spec.g});
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec)
{
    validate(spec);
    std::vector<SweepPoint> pts;
    pts.reserve(static_cast<std::size_t>(spec.x.count) * spec.y.count);
    for (int j = 0; j < spec.y.count; ++j)
        for (int i = 0; i < spec.x.count; ++i)
            pts.push_back(evaluate(spec, spec.x.at(i), spec.y.at(j)));
    return pts;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepPoint>& points)
{
    os << spec.x.name << ',' << spec.y.name << ",code,verdict\n";
    for (const auto& p : points)
        os << fv::format_number(p.x) << ',' << fv::format_number(p.y) << ',' << static_cast<int>(p.code) << ','
           << p.label << '\n';
}

std::vector<Curve> exceptional_curves(const SweepSpec& spec)
{
    std::vector<Curve> curves;
    if (spec.verdict == "lax")
        return curves;
    const bool xJump = spec.x.name == "v2jump" && spec.y.name == "B2plus";
    const bool yJump = spec.y.name == "v2jump" && spec.x.name == "B2plus";
    if (!xJump && !yJump)
        return curves;

    const Axis& bAxis = xJump ? spec.y : spec.x;
    const double gh = spec.g * value(spec.fixed, "h", 1.0);
    const auto add = [&](const std::string& label, auto&& f) {
        for (double sign : {1.0, -1.0}) {
            Curve c{label, {}};
            constexpr int n = 200;
            for (int k = 0; k <= n; ++k) {
                const double b = bAxis.lo + (bAxis.hi - bAxis.lo) * k / n;
                const double jump = sign * f(std::abs(b));
                c.points.push_back(xJump ? std::make_pair(jump, b) : std::make_pair(b, jump));
            }
            curves.push_back(std::move(c));
        }
    };

    if (spec.verdict == "cvs-nsc") {
        add("|[v2]| = |B2|", [](double b) { return b; });
        add("|[v2]| = sqrt(B2^2 + gh) - |B2|", [&](double b) { return std::sqrt(b * b + gh) - b; });
        add("|[v2]| = sqrt(B2^2 + gh)", [&](double b) { return std::sqrt(b * b + gh); });
        add("|[v2]| = |B2| sqrt((B2^2 + 2gh)/(B2^2 + gh))",
            [&](double b) { return b * std::sqrt((b * b + 2.0 * gh) / (b * b + gh)); });
        add("|[v2]| = 2|B2|", [](double b) { return 2.0 * b; });
        add("|[v2]| = 2 sqrt(B2^2 + 2gh)", [&](double b) { return 2.0 * std::sqrt(b * b + 2.0 * gh); });
    } else {
        const auto it = spec.fixed.find("B2minus");
        const std::optional<double> b2m =
            it == spec.fixed.end() ? std::nullopt : std::optional<double>(std::abs(it->second));
        add("|[v2]| = |B2+| + |B2-|", [b2m](double b) { return b + b2m.value_or(b); });
    }
    return curves;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err)
{
    if (!o.format.empty() && o.format != "csv" && o.format != "svg") {
        err << "error: unsupported --format '" << o.format << "' (csv, svg)\n";
        return kInputError;
    }
    try {
        SweepSpec spec = o.spec;
        if (!o.input.empty())
            spec = parse_sweep_spec(io::read_json_file(o.input).dump());
        validate(spec);
        const auto points = run_sweep(spec);
        std::ostringstream csv;
        write_sweep_csv(csv, spec, points);
        const bool wantCsv = o.format.empty() || o.format == "csv";
        const bool wantSvg = o.format.empty() || o.format == "svg";
        std::string svg;
        if (wantSvg)
            svg = render_heatmap(spec, points, exceptional_curves(spec));
        if (!o.out.empty()) {
            if (wantCsv)
                write_file(o.out, "sweep.csv", csv.str());
            if (wantSvg)
                write_file(o.out, "sweep.svg", svg);
            out << "wrote " << points.size() << " points to " << o.out << '\n';
        } else {
            out << (o.format == "svg" ? svg : csv.str());
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace smhd::cli
