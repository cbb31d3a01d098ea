#include <doctest.h>

#include "oracles.hpp"
#include "smhd/discontinuity.hpp"
#include "smhd/shock.hpp"

using namespace smhd;
using smhd::testing::Sampler;

namespace {

SidePair rational_shock_pair()
{
    return SidePair{make_state(2, 1, 0, 0.5, 0), make_state(1, 2, 0, 1, 0), FrontGeometry{}, PhysParams{1.0}};
}

} // namespace

TEST_CASE("trace quantities")
{
    SidePair sp{make_state(1, 1, 1, 0, 0), make_state(1, 1, 1, 0, 0), FrontGeometry{1.0, 0.0}, PhysParams{}};
    auto tq = trace_quantities(sp);
    CHECK(tq.plus.vN == doctest::Approx(0.0));
    CHECK(tq.plus.vTau == doctest::Approx(2.0));
    CHECK(tq.normSq == 2.0);

    sp = SidePair{make_state(2, 1, 3, 0, 0), make_state(1, 0, -1, 0, 0), FrontGeometry{}, PhysParams{}};
    tq = trace_quantities(sp);
    CHECK(tq.plus.m == 2.0);
    CHECK(tq.plus.vN == 1.0);
    CHECK(tq.plus.vTau == 3.0);
    CHECK(tq.hMean == 3.0);

    Sampler s(41);
    for (int n = 0; n < 1000; ++n) {
        const State u = s.state();
        const FrontGeometry f = s.front();
        const SideTrace t = side_trace(u, f);
        const double scale = 1.0 + u.as_vector().cwiseAbs().maxCoeff() * f.normal_sq();
        REQUIRE((from_normal_tangential(t.vN, t.vTau, f.slope) - u.v).norm() < 1e-13 * scale);
        REQUIRE((from_normal_tangential(t.BN, t.BTau, f.slope) - u.B).norm() < 1e-13 * scale);
    }
}

TEST_CASE("jump-condition residual")
{
    const State u = make_state(1.3, 0.4, -0.2, 0.1, 0.6);
    SidePair same{u, u, FrontGeometry{0.0, 0.4}, PhysParams{}};
    CHECK(rh_residual(same).r.isZero());

    const RHResidual exact = rh_residual(rational_shock_pair());
    CHECK(exact.r.cwiseAbs().maxCoeff() < 1e-12);

    SidePair broken = rational_shock_pair();
    broken.plus.B(0) += 0.1;
    const RHResidual r = rh_residual(broken);
    CHECK(std::abs(r.r(1)) > 0.1);
    CHECK(r.r(0) == 0.0);
    CHECK(r.r(3) == 0.0);
    CHECK(r.r(4) == 0.0);
}

TEST_CASE("classification of the worked examples")
{
    SidePair cvs{make_state(1, 0, 0.25, 0, 1), make_state(1, 0, -0.25, 0, -1), FrontGeometry{}, PhysParams{}};
    CHECK(classify(cvs).tag == DiscontinuityTag::CurrentVortexSheet);

    SidePair alfven{make_state(1, 0.5, 1, 0.5, 1), make_state(1, 0.5, 0, 0.5, 0), FrontGeometry{}, PhysParams{}};
    CHECK(rh_residual(alfven).r.cwiseAbs().maxCoeff() == 0.0);
    CHECK(classify(alfven).tag == DiscontinuityTag::AlfvenDiscontinuity);

    CHECK(classify(rational_shock_pair()).tag == DiscontinuityTag::Shock);

    const State u = make_state(1.5, 0.3, -0.2, 0.1, 0.4);
    CHECK(classify(SidePair{u, u, FrontGeometry{0.0, 0.3}, PhysParams{}}).tag == DiscontinuityTag::Continuous);

    SidePair bad = rational_shock_pair();
    bad.plus.h = 3.0;
    const auto k = classify(bad);
    CHECK(k.tag == DiscontinuityTag::Inadmissible);
    CHECK_FALSE(k.reason.empty());
}

TEST_CASE("zero mass flux with nonzero normal field is continuous with a note")
{
    const State u = make_state(1.0, 0.0, 0.3, 0.7, -0.2);
    const auto k = classify(SidePair{u, u, FrontGeometry{}, PhysParams{}});
    CHECK(k.tag == DiscontinuityTag::Continuous);
}

TEST_CASE("classification is invariant under tangential boosts and mirroring")
{
    Sampler s(43);
    int shocks = 0;
    for (int n = 0; n < 500; ++n) {
        const State minus = s.state(0.5, 3.0, 2.0);
        const double hPlus = s.uniform(0.5, 3.0);
        if (std::abs(hPlus - minus.h) < 1e-3)
            continue;
        const auto hs = hugoniot_downstream(minus, 0.0, hPlus, PhysParams{});
        SidePair sp{hs.plus, minus, FrontGeometry{0.0, hs.frontSpeed}, PhysParams{}};
        const auto base = classify(sp).tag;
        REQUIRE(base == DiscontinuityTag::Shock);
        ++shocks;

        const double boost = s.uniform(-2, 2);
        SidePair boosted = sp;
        boosted.plus.v(1) += boost;
        boosted.minus.v(1) += boost;
        REQUIRE(classify(boosted).tag == base);
        REQUIRE(classify(mirror(sp)).tag == base);
        REQUIRE(classify(canonicalize_field_sign(sp)).tag == base);
    }
    CHECK(shocks > 400);
}

TEST_CASE("with m^2 != b^2 a zero residual forces continuous tangential components")
{
    Sampler s(47);
    for (int n = 0; n < 200; ++n) {
        const double m = s.uniform(-2, 2), b = s.uniform(-2, 2);
        if (std::abs(m * m - b * b) < 1e-2)
            continue;
        Eigen::Matrix2d A;
        A << m, -b, -b, m;
        const Eigen::Vector2d jumps = A.fullPivLu().solve(Eigen::Vector2d::Zero());
        REQUIRE(jumps.norm() == 0.0);
        REQUIRE(std::abs(A.determinant()) > 0.0);
    }
}

TEST_CASE("field-sign canonicalisation makes the normal field non-negative")
{
    SidePair sp = rational_shock_pair();
    sp.plus.B *= -1.0;
    sp.minus.B *= -1.0;
    const SidePair c = canonicalize_field_sign(sp);
    CHECK(c.plus.B(0) == 0.5);
    CHECK(c.minus.B(0) == 1.0);
}

TEST_CASE("classification rejects non-positive heights")
{
    SidePair sp = rational_shock_pair();
    sp.minus.h = 0.0;
    CHECK_THROWS_AS(classify(sp), Error);
}
