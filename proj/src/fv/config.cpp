#include "smhd/fv/config.hpp"

#include <cmath>
#include <set>

#include "smhd/json_io.hpp"

namespace smhd::fv {

using io::json;

namespace {

[[noreturn]] void config_error(const std::string& where, const std::string& what)
{
    throw Error(ErrorKind::InvalidConfig, where + ": " + what);
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key))
            config_error(where, "unknown field '" + key + "'");
    }
}

double num(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        config_error(where, std::string("missing field '") + key + "'");
    if (!j.at(key).is_number())
        config_error(where + "." + key, "expected a number");
    return j.at(key).get<double>();
}

double num_or(const json& j, const char* key, double fallback, const std::string& where)
{
    return j.contains(key) ? num(j, key, where) : fallback;
}

int int_at(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        config_error(where, std::string("missing field '") + key + "'");
    if (!j.at(key).is_number_integer())
        config_error(where + "." + key, "expected an integer");
    return j.at(key).get<int>();
}

std::pair<double, double> range_at(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        config_error(where, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        config_error(where + "." + key, "expected [min, max]");
    return {v[0].get<double>(), v[1].get<double>()};
}

InitialData parse_initial(const json& j)
{
    const std::string where = "initial";
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        config_error(where, "expected an object with a string 'type'");
    const std::string type = j.at("type").get<std::string>();

    if (type == "riemann") {
        reject_unknown(j, {"type", "left", "right", "interface"}, where);
        RiemannInit r;
        if (!j.contains("left") || !j.contains("right"))
            config_error(where, "riemann data needs 'left' and 'right'");
        r.left = io::state_from_json(j.at("left"), where + ".left");
        r.right = io::state_from_json(j.at("right"), where + ".right");
        r.interface = num_or(j, "interface", 0.0, where);
        return r;
    }
    if (type == "rectilinear_shock") {
        reject_unknown(j, {"type", "hMinus", "R", "B1Plus", "B2", "amplitude", "wavenumber", "position"}, where);
        ShockFrontInit s;
        s.hMinus = num(j, "hMinus", where);
        s.R = num(j, "R", where);
        s.B1Plus = num(j, "B1Plus", where);
        s.B2 = num_or(j, "B2", 0.0, where);
        s.amplitude = num_or(j, "amplitude", 0.0, where);
        s.wavenumber = num_or(j, "wavenumber", 0.0, where);
        s.position = num_or(j, "position", 0.0, where);
        return s;
    }
    if (type == "vortex") {
        reject_unknown(j, {"type", "fieldAmplitude", "heightAmplitude", "flowAmplitude"}, where);
        VortexInit v;
        v.fieldAmplitude = num_or(j, "fieldAmplitude", v.fieldAmplitude, where);
        v.heightAmplitude = num_or(j, "heightAmplitude", v.heightAmplitude, where);
        v.flowAmplitude = num_or(j, "flowAmplitude", v.flowAmplitude, where);
        return v;
    }
    if (type == "linear_pulse") {
        reject_unknown(j,
                       {"type", "hMinus", "R", "B1Plus", "B2", "amplitude", "center", "radius", "balanced"},
                       where);
        LinearPulseInit l;
        l.hMinus = num_or(j, "hMinus", l.hMinus, where);
        l.R = num_or(j, "R", l.R, where);
        l.B1Plus = num_or(j, "B1Plus", l.B1Plus, where);
        l.B2 = num_or(j, "B2", l.B2, where);
        l.amplitude = num_or(j, "amplitude", l.amplitude, where);
        if (j.contains("center")) {
            const auto [c1, c2] = range_at(j, "center", where);
            l.center1 = c1;
            l.center2 = c2;
        }
        l.radius = num_or(j, "radius", l.radius, where);
        if (j.contains("balanced")) {
            if (!j.at("balanced").is_boolean())
                config_error(where + ".balanced", "expected a boolean");
            l.balanced = j.at("balanced").get<bool>();
        }
        return l;
    }
    config_error(where + ".type", "unknown initial data type '" + type + "'");
}

json initial_to_json(const InitialData& init)
{
    struct Visitor {
        json operator()(const RiemannInit& r) const
        {
            return json{{"type", "riemann"},
                        {"left", io::to_json(r.left)},
                        {"right", io::to_json(r.right)},
                        {"interface", r.interface}};
        }
        json operator()(const ShockFrontInit& s) const
        {
            return json{{"type", "rectilinear_shock"}, {"hMinus", s.hMinus},       {"R", s.R},
                        {"B1Plus", s.B1Plus},          {"B2", s.B2},               {"amplitude", s.amplitude},
                        {"wavenumber", s.wavenumber},  {"position", s.position}};
        }
        json operator()(const VortexInit& v) const
        {
            return json{{"type", "vortex"},
                        {"fieldAmplitude", v.fieldAmplitude},
                        {"heightAmplitude", v.heightAmplitude},
                        {"flowAmplitude", v.flowAmplitude}};
        }
        json operator()(const LinearPulseInit& l) const
        {
            return json{{"type", "linear_pulse"},
                        {"hMinus", l.hMinus},
                        {"R", l.R},
                        {"B1Plus", l.B1Plus},
                        {"B2", l.B2},
                        {"amplitude", l.amplitude},
                        {"center", json::array({l.center1, l.center2})},
                        {"radius", l.radius},
                        {"balanced", l.balanced}};
        }
    };
    return std::visit(Visitor{}, init);
}

} // namespace

void validate(const SimConfig& cfg)
{
    if (cfg.dimensions != 1 && cfg.dimensions != 2)
        throw Error(ErrorKind::InvalidConfig, "dimensions must be 1 or 2");
    if (!(cfg.cfl > 0.0 && cfg.cfl < 1.0))
        throw Error(ErrorKind::CflViolation, "Courant number must lie in (0, 1)");
    if (!(cfg.endTime > 0.0) || !std::isfinite(cfg.endTime))
        throw Error(ErrorKind::InvalidConfig, "endTime must be positive");
    validate(cfg.params);
    const Grid& g = cfg.grid;
    if (g.nx < 8)
        throw Error(ErrorKind::InvalidConfig, "nx must be at least 8");
    if (cfg.dimensions == 1 && g.ny != 1)
        throw Error(ErrorKind::InvalidConfig, "1D runs use ny = 1");
    if (cfg.dimensions == 2 && g.ny < 8)
        throw Error(ErrorKind::InvalidConfig, "ny must be at least 8 in 2D");
    if (!(g.x1max > g.x1min) || !(g.x2max > g.x2min) || !std::isfinite(g.x1max - g.x1min) ||
        !std::isfinite(g.x2max - g.x2min))
        throw Error(ErrorKind::InvalidConfig, "domain extents must be finite with max > min");
    if (cfg.fixedDt && !(*cfg.fixedDt > 0.0))
        throw Error(ErrorKind::InvalidConfig, "fixedDt must be positive");
    if (cfg.positivityFloor && !(*cfg.positivityFloor > 0.0))
        throw Error(ErrorKind::InvalidConfig, "positivityFloor must be positive");
    if (cfg.sampleEvery < 1)
        throw Error(ErrorKind::InvalidConfig, "sampleEvery must be at least 1");
    for (double t : cfg.snapshotTimes)
        if (!(t > 0.0 && t <= cfg.endTime))
            throw Error(ErrorKind::InvalidConfig, "snapshot times must lie in (0, endTime]");
    if (!(cfg.constraintTolerance > 0.0))
        throw Error(ErrorKind::InvalidConfig, "constraintTolerance must be positive");
}

SimConfig parse_sim_config(const std::string& jsonText)
{
    const json j = io::parse_json(jsonText);
    if (!j.is_object())
        config_error("config", "expected a JSON object");
    reject_unknown(j,
                   {"dimensions", "grid", "cfl", "endTime", "g", "boundary", "fixedDt", "positivityFloor",
                    "sampleEvery", "initial", "snapshotTimes", "constraintTolerance"},
                   "config");

    SimConfig cfg;
    cfg.dimensions = int_at(j, "dimensions", "config");
    if (!j.contains("grid") || !j.at("grid").is_object())
        config_error("config", "missing object 'grid'");
    const json& g = j.at("grid");
    reject_unknown(g, {"nx", "ny", "x1", "x2"}, "grid");
    cfg.grid.nx = int_at(g, "nx", "grid");
    cfg.grid.ny = g.contains("ny") ? int_at(g, "ny", "grid") : 1;
    std::tie(cfg.grid.x1min, cfg.grid.x1max) = range_at(g, "x1", "grid");
    if (g.contains("x2"))
        std::tie(cfg.grid.x2min, cfg.grid.x2max) = range_at(g, "x2", "grid");

    cfg.cfl = num_or(j, "cfl", cfg.cfl, "config");
    cfg.endTime = num(j, "endTime", "config");
    cfg.params.g = num_or(j, "g", 1.0, "config");
    if (j.contains("boundary")) {
        const json& b = j.at("boundary");
        if (!b.is_object())
            config_error("boundary", "expected an object");
        reject_unknown(b, {"x1", "x2"}, "boundary");
        if (b.contains("x1")) {
            const std::string s = b.at("x1").is_string() ? b.at("x1").get<std::string>() : "";
            if (s == "outflow")
                cfg.x1Boundary = Boundary::Outflow;
            else if (s == "periodic")
                cfg.x1Boundary = Boundary::Periodic;
            else
                config_error("boundary.x1", "expected \"outflow\" or \"periodic\"");
        }
        if (b.contains("x2") && !(b.at("x2").is_string() && b.at("x2").get<std::string>() == "periodic"))
            config_error("boundary.x2", "x2 is always \"periodic\"");
    }
    if (j.contains("fixedDt"))
        cfg.fixedDt = num(j, "fixedDt", "config");
    if (j.contains("positivityFloor"))
        cfg.positivityFloor = num(j, "positivityFloor", "config");
    if (j.contains("sampleEvery"))
        cfg.sampleEvery = int_at(j, "sampleEvery", "config");
    if (j.contains("snapshotTimes")) {
        const auto& s = j.at("snapshotTimes");
        if (!s.is_array())
            config_error("snapshotTimes", "expected an array of numbers");
        for (const auto& t : s) {
            if (!t.is_number())
                config_error("snapshotTimes", "expected an array of numbers");
            cfg.snapshotTimes.push_back(t.get<double>());
        }
    }
    cfg.constraintTolerance = num_or(j, "constraintTolerance", cfg.constraintTolerance, "config");
    if (!j.contains("initial"))
        config_error("config", "missing object 'initial'");
    cfg.initial = parse_initial(j.at("initial"));
    validate(cfg);
    return cfg;
}

SimConfig load_sim_config(const std::string& path)
{
    return parse_sim_config(io::read_json_file(path).dump());
}

std::string sim_config_to_json(const SimConfig& cfg)
{
    json j{{"dimensions", cfg.dimensions},
           {"grid",
            {{"nx", cfg.grid.nx},
             {"ny", cfg.grid.ny},
             {"x1", json::array({cfg.grid.x1min, cfg.grid.x1max})},
             {"x2", json::array({cfg.grid.x2min, cfg.grid.x2max})}}},
           {"cfl", cfg.cfl},
           {"endTime", cfg.endTime},
           {"g", cfg.params.g},
           {"boundary", {{"x1", cfg.x1Boundary == Boundary::Periodic ? "periodic" : "outflow"}, {"x2", "periodic"}}},
           {"sampleEvery", cfg.sampleEvery},
           {"constraintTolerance", cfg.constraintTolerance},
           {"initial", initial_to_json(cfg.initial)}};
    if (cfg.fixedDt)
        j["fixedDt"] = *cfg.fixedDt;
    if (cfg.positivityFloor)
        j["positivityFloor"] = *cfg.positivityFloor;
    if (!cfg.snapshotTimes.empty())
        j["snapshotTimes"] = cfg.snapshotTimes;
    return io::dump(j);
}

} // namespace smhd::fv
