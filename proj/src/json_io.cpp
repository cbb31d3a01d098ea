#include "smhd/json_io.hpp"

#include <fstream>
#include <sstream>

namespace smhd::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw Error(ErrorKind::InvalidConfig, where + ": " + what);
}

double number_at(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        schema_error(where, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number())
        schema_error(where + "." + key, "expected a number");
    return v.get<double>();
}

Vector2d pair_at(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        schema_error(where, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        schema_error(where + "." + key, "expected an array of two numbers");
    return {v[0].get<double>(), v[1].get<double>()};
}

json vec(const Vector2d& x)
{
    return json::array({x(0), x(1)});
}

template <std::size_t N>
json arr(const std::array<double, N>& a)
{
    json out = json::array();
    for (double x : a)
        out.push_back(x);
    return out;
}

} // namespace

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidConfig, std::string("malformed JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidConfig, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

json to_json(const State& u)
{
    return json{{"h", u.h}, {"v", vec(u.v)}, {"B", vec(u.B)}};
}

State state_from_json(const json& j, const std::string& where)
{
    if (!j.is_object())
        schema_error(where, "expected an object with h, v, B");
    State u;
    u.h = number_at(j, "h", where);
    u.v = pair_at(j, "v", where);
    u.B = pair_at(j, "B", where);
    return u;
}

json to_json(const SidePair& sp)
{
    return json{{"plus", to_json(sp.plus)},
                {"minus", to_json(sp.minus)},
                {"front", {{"slope", sp.front.slope}, {"speed", sp.front.speed}}},
                {"g", sp.params.g}};
}

SidePair side_pair_from_json(const json& j)
{
    if (!j.is_object())
        schema_error("pair", "expected an object with plus, minus");
    SidePair sp;
    if (!j.contains("plus") || !j.contains("minus"))
        schema_error("pair", "fields 'plus' and 'minus' are required");
    sp.plus = state_from_json(j.at("plus"), "pair.plus");
    sp.minus = state_from_json(j.at("minus"), "pair.minus");
    if (j.contains("front")) {
        const auto& f = j.at("front");
        if (!f.is_object())
            schema_error("pair.front", "expected an object");
        sp.front.slope = f.contains("slope") ? number_at(f, "slope", "pair.front") : 0.0;
        sp.front.speed = f.contains("speed") ? number_at(f, "speed", "pair.front") : 0.0;
    }
    if (j.contains("g"))
        sp.params.g = number_at(j, "g", "pair");
    validate(sp.params);
    return sp;
}

json to_json(const SideTrace& t)
{
    return json{{"m", t.m}, {"b", t.b}, {"vN", t.vN}, {"vTau", t.vTau}, {"BN", t.BN}, {"BTau", t.BTau}};
}

json to_json(const TraceQuantities& tq)
{
    return json{{"plus", to_json(tq.plus)}, {"minus", to_json(tq.minus)}, {"hSum", tq.hMean}, {"normSq", tq.normSq}};
}

json to_json(const RHResidual& r)
{
    json comps = json::array();
    for (int i = 0; i < 5; ++i)
        comps.push_back(r.r(i));
    return json{{"components", comps}, {"relative", r.relative()}, {"scale", r.scale}};
}

json to_json(const DiscontinuityKind& k)
{
    json out{{"kind", to_string(k.tag)}};
    if (!k.reason.empty())
        out["reason"] = k.reason;
    if (!k.note.empty())
        out["note"] = k.note;
    return out;
}

json to_json(const LaxVerdict& v)
{
    return json{{"satisfied", v.satisfied},
                {"k", v.k ? json(*v.k) : json(nullptr)},
                {"kTwoExcluded", v.kTwoExcluded}};
}

json to_json(const ShockDiagnostics& d)
{
    return json{{"eigenPlus", arr(d.eigenPlus)},
                {"eigenMinus", arr(d.eigenMinus)},
                {"cgNPlus", d.cgNPlus},
                {"cgNMinus", d.cgNMinus},
                {"caNPlus", d.caNPlus},
                {"caNMinus", d.caNMinus},
                {"detPlus", d.detPlus},
                {"detMinus", d.detMinus},
                {"frontSpeed", d.frontSpeed},
                {"lax", to_json(d.lax)},
                {"heightJump", d.heightJump},
                {"relabeled", d.relabeled},
                {"fieldFlipped", d.fieldFlipped}};
}

json to_json(const RectilinearShock& s)
{
    return json{{"hMinus", s.hMinus}, {"hPlus", s.hPlus},   {"v1Minus", s.v1Minus}, {"v1Plus", s.v1Plus},
                {"B1Minus", s.B1Minus}, {"B1Plus", s.B1Plus}, {"B2", s.B2},         {"R", s.ratio()}};
}

json to_json(const LinearizedShockSetup& s)
{
    return json{{"M", s.M},         {"M1", s.M1},     {"M2", s.M2}, {"Mstar", s.Mstar}, {"R", s.R},
                {"beta", s.beta}, {"d0", s.d0}, {"ell0", s.ell0}, {"a0", s.a0}};
}

json to_json(const SymmetrizerChoice& c)
{
    return json{{"lambdaPlus", c.lambdaPlus},
                {"lambdaMinus", c.lambdaMinus},
                {"hyperbolicPlus", c.hyperbolicPlus},
                {"hyperbolicMinus", c.hyperbolicMinus}};
}

json to_json(const CvsVerdict& v)
{
    json out{{"verdict", to_string(v.tag)}, {"margin", v.margin}};
    if (v.exceptionalIndex != 0)
        out["exceptionalIndex"] = v.exceptionalIndex;
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace smhd::io
