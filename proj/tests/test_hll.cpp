#include <doctest.h>

#include "oracles.hpp"
#include "smhd/fv/hll.hpp"

using namespace smhd;
using smhd::fv::hll_flux;

TEST_CASE("consistency with the physical flux")
{
    smhd::testing::Sampler s(109);
    for (int n = 0; n < 1000; ++n) {
        const State u = s.state();
        const double a = s.uniform(0, 2 * M_PI);
        const Vector2d nrm(std::cos(a), std::sin(a));
        const Vector5d f = hll_flux(u, u, nrm, PhysParams{});
        const Vector5d e = normal_flux(u, nrm, PhysParams{});
        REQUIRE((f - e).cwiseAbs().maxCoeff() < 1e-13 * (1 + e.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("supersonic data gives the upwind flux")
{
    const PhysParams p{};
    const State l = make_state(1, 5, 0.2, 0.3, 0.1), r = make_state(1.2, 4.5, -0.1, 0.2, 0.4);
    const Vector2d nrm(1, 0);
    CHECK((hll_flux(l, r, nrm, p) - normal_flux(l, nrm, p)).norm() == doctest::Approx(0.0));
    const State l2 = make_state(1, -5, 0.2, 0.3, 0.1), r2 = make_state(1.2, -4.5, -0.1, 0.2, 0.4);
    CHECK((hll_flux(l2, r2, nrm, p) - normal_flux(r2, nrm, p)).norm() == doctest::Approx(0.0));
}

TEST_CASE("reflected pair has zero mass flux")
{
    const PhysParams p{};
    const State l = make_state(1.3, 0.7, 0.2, 0.4, -0.1);
    const State r = make_state(1.3, -0.7, 0.2, -0.4, -0.1);
    const Vector5d f = hll_flux(l, r, Vector2d(1, 0), p);
    CHECK(f(0) == doctest::Approx(0.0));

    // swapping and mirroring the pair negates the odd rows only
    const Vector5d g = hll_flux(make_state(1.1, 0.3, 0.2, 0.1, 0.5), make_state(0.8, -0.2, 0.1, 0.3, -0.4),
                                Vector2d(1, 0), p);
    const Vector5d h = hll_flux(make_state(0.8, 0.2, 0.1, -0.3, -0.4), make_state(1.1, -0.3, 0.2, -0.1, 0.5),
                                Vector2d(1, 0), p);
    CHECK(g(0) == doctest::Approx(-h(0)));
    CHECK(g(1) == doctest::Approx(h(1)));
    CHECK(g(2) == doctest::Approx(-h(2)));
    CHECK(g(4) == doctest::Approx(-h(4)));
}

TEST_CASE("fast speeds bracket all characteristic speeds")
{
    smhd::testing::Sampler s(113);
    for (int n = 0; n < 500; ++n) {
        const State u = s.state();
        const auto [lo, hi] = fv::fast_speeds(u, Vector2d(1, 0), PhysParams{});
        const auto m = quasilinear_matrices(u, PhysParams{});
        const auto ev = smhd::testing::pencil_eigenvalues(m.A1, m.A0);
        REQUIRE(lo <= ev[0] + 1e-12 * (1 + std::abs(ev[0])));
        REQUIRE(hi >= ev[4] - 1e-12 * (1 + std::abs(ev[4])));
    }
}

TEST_CASE("hll rejects non-positive heights")
{
    CHECK_THROWS_AS(hll_flux(make_state(0, 0, 0, 0, 0), make_state(1, 0, 0, 0, 0), Vector2d(1, 0), PhysParams{}),
                    Error);
}
