#include <doctest.h>

#include <sstream>

#include "smhd/fv/config.hpp"
#include "smhd/fv/io.hpp"
#include "smhd/json_io.hpp"

using namespace smhd;
using namespace smhd::fv;

namespace {

const char* kShockConfig = R"({
  "dimensions": 2,
  "grid": {"nx": 64, "ny": 16, "x1": [-2, 2], "x2": [0, 1]},
  "cfl": 0.4,
  "endTime": 1.5,
  "g": 2.0,
  "boundary": {"x1": "outflow", "x2": "periodic"},
  "sampleEvery": 5,
  "snapshotTimes": [0.5],
  "initial": {"type": "rectilinear_shock", "hMinus": 1, "R": 2, "B1Plus": 0.5, "amplitude": 0.01, "wavenumber": 6.28}
})";

ErrorKind kind_of(const std::string& text)
{
    try {
        parse_sim_config(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidConfig;
}

} // namespace

TEST_CASE("config parsing and round trip")
{
    const SimConfig c = parse_sim_config(kShockConfig);
    CHECK(c.dimensions == 2);
    CHECK(c.grid.nx == 64);
    CHECK(c.grid.ny == 16);
    CHECK(c.grid.x1min == -2.0);
    CHECK(c.cfl == 0.4);
    CHECK(c.params.g == 2.0);
    CHECK(c.sampleEvery == 5);
    REQUIRE(std::holds_alternative<ShockFrontInit>(c.initial));
    CHECK(std::get<ShockFrontInit>(c.initial).amplitude == 0.01);

    const SimConfig back = parse_sim_config(sim_config_to_json(c));
    CHECK(sim_config_to_json(back) == sim_config_to_json(c));
}

TEST_CASE("every initial-data type round-trips")
{
    for (const char* init : {
             R"({"type": "riemann", "left": {"h": 1, "v": [0, 0], "B": [0, 0]}, "right": {"h": 2, "v": [1, 0], "B": [0.5, 0]}})",
             R"({"type": "vortex", "fieldAmplitude": 0.3})",
             R"({"type": "linear_pulse", "center": [5, 2], "radius": 1, "balanced": false})",
         }) {
        const std::string text = std::string(R"({"dimensions": 2, "grid": {"nx": 16, "ny": 16, "x1": [0, 1], "x2": [0, 1]},
            "endTime": 1, "initial": )") + init + "}";
        const SimConfig c = parse_sim_config(text);
        CHECK(sim_config_to_json(parse_sim_config(sim_config_to_json(c))) == sim_config_to_json(c));
    }
}

TEST_CASE("invalid configs are rejected with the right kind")
{
    const std::string good = kShockConfig;
    auto with = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    CHECK(kind_of(with("\"cfl\": 0.4", "\"cfl\": 1.2")) == ErrorKind::CflViolation);
    CHECK(kind_of(with("\"cfl\": 0.4", "\"cfl\": 0")) == ErrorKind::CflViolation);
    CHECK(kind_of(with("\"nx\": 64", "\"nx\": 4")) == ErrorKind::InvalidConfig);
    CHECK(kind_of(with("\"endTime\": 1.5", "\"endTime\": -1")) == ErrorKind::InvalidConfig);
    CHECK(kind_of(with("\"sampleEvery\"", "\"sampleEvry\"")) == ErrorKind::InvalidConfig);
    CHECK(kind_of(with("\"outflow\"", "\"reflective\"")) == ErrorKind::InvalidConfig);
    CHECK(kind_of(with("rectilinear_shock", "mystery")) == ErrorKind::InvalidConfig);
    CHECK(kind_of("{not json") == ErrorKind::InvalidConfig);
    CHECK(kind_of("[1, 2]") == ErrorKind::InvalidConfig);
}

TEST_CASE("state and pair JSON")
{
    const State u = make_state(1.5, 0.1, -0.2, 0.3, 0.4);
    const State back = io::state_from_json(io::to_json(u));
    CHECK(back.as_vector() == u.as_vector());

    const SidePair sp{u, make_state(2, 0, 0, 0, 0), FrontGeometry{0.1, -0.3}, PhysParams{9.8}};
    const SidePair b = io::side_pair_from_json(io::to_json(sp));
    CHECK(b.plus.as_vector() == sp.plus.as_vector());
    CHECK(b.minus.as_vector() == sp.minus.as_vector());
    CHECK(b.front.slope == 0.1);
    CHECK(b.front.speed == -0.3);
    CHECK(b.params.g == 9.8);

    CHECK_THROWS_AS(io::state_from_json(io::json::parse(R"({"h": 1, "v": [0]})")), Error);
    CHECK_THROWS_AS(io::side_pair_from_json(io::json::parse(R"({"plus": {"h": 1, "v": [0, 0], "B": [0, 0]}})")),
                    Error);
}

TEST_CASE("csv writers")
{
    SimResult r;
    Sample s;
    s.t = 0.5;
    s.integrals = {1, 2, 3, 4, 5};
    s.divNorm = 0.25;
    s.frontAmp = std::nan("");
    s.energy = 7;
    r.series.push_back(s);
    std::ostringstream os;
    write_series_csv(os, r);
    CHECK(os.str() == "t,mass,momX,momY,fluxBx,fluxBy,divNorm,frontAmp,energy\n0.5,1,2,3,4,5,0.25,nan,7\n");

    Snapshot snap;
    snap.values = Field(Grid{8, 1, 0.0, 1.0, 0.0, 1.0});
    std::ostringstream ss;
    write_snapshot_csv(ss, snap);
    CHECK(ss.str().rfind("x1,x2,h,v1,v2,B1,B2\n", 0) == 0);
    std::ostringstream ls;
    write_snapshot_csv(ls, snap, true);
    CHECK(ls.str().rfind("x1,x2,p,v1,v2,B1,B2\n", 0) == 0);

    std::ostringstream ln;
    write_linear_norms_csv(ln, r);
    CHECK(ln.str() == "t,l2,h1Proxy,trace,phi,energy,constraint\n");
    CHECK(format_number(0.1) == "0.10000000000000001");
}
