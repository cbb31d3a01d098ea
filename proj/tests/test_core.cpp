#include <doctest.h>

#include "oracles.hpp"
#include "smhd/core.hpp"

using namespace smhd;
using smhd::testing::Sampler;

TEST_CASE("conserved and primitive variables round-trip")
{
    const State u = make_state(2.0, 1.0, -0.5, 0.25, 3.0);
    const Conserved q = conserved_from_primitive(u);
    CHECK(q(0) == 2.0);
    CHECK(q(1) == 2.0);
    CHECK(q(2) == -1.0);
    CHECK(q(3) == 0.5);
    CHECK(q(4) == 6.0);

    Sampler s(7);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const State a = s.state();
        const State b = primitive_from_conserved(conserved_from_primitive(a));
        const Vector5d ua = a.as_vector(), ub = b.as_vector();
        worst = std::max(worst, (ua - ub).cwiseAbs().maxCoeff() / ua.cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("non-positive height is rejected")
{
    for (double h : {0.0, -1.0, std::nan("")}) {
        const State u = make_state(h, 0, 0, 0, 0);
        CHECK_THROWS_AS(conserved_from_primitive(u), Error);
        CHECK_THROWS_AS(fluxes(u, PhysParams{}), Error);
        CHECK_THROWS_AS(quasilinear_matrices(u, PhysParams{}), Error);
        CHECK_THROWS_AS(gravity_wave_speed(u, PhysParams{}), Error);
    }
    try {
        fluxes(make_state(-1, 0, 0, 0, 0), PhysParams{});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveHeight);
    }
}

TEST_CASE("fluxes match worked values")
{
    const PhysParams p{1.0};
    auto [f1, f2] = fluxes(make_state(1, 0, 0, 0, 0), p);
    CHECK(f1.isApprox((Vector5d() << 0, 0.5, 0, 0, 0).finished()));
    CHECK(f2.isApprox((Vector5d() << 0, 0, 0.5, 0, 0).finished()));

    std::tie(f1, f2) = fluxes(make_state(1, 1, 0, 1, 0), p);
    CHECK((f1 - (Vector5d() << 1, 0.5, 0, 0, 0).finished()).norm() == doctest::Approx(0.0));
}

TEST_CASE("fluxes agree with the hand-expanded components")
{
    Sampler s(11);
    for (int n = 0; n < 2000; ++n) {
        const State u = s.state();
        const double g = s.uniform(0.1, 10.0);
        const auto [f1, f2] = fluxes(u, PhysParams{g});
        const auto [e1, e2] = smhd::testing::hand_fluxes(u, g);
        const double scale = 1.0 + e1.cwiseAbs().maxCoeff() + e2.cwiseAbs().maxCoeff();
        REQUIRE((f1 - e1).cwiseAbs().maxCoeff() < 1e-14 * scale);
        REQUIRE((f2 - e2).cwiseAbs().maxCoeff() < 1e-14 * scale);
    }
}

TEST_CASE("flux Jacobian equals the conjugated quasilinear matrices up to the constraint coupling")
{
    Sampler s(13);
    for (int n = 0; n < 500; ++n) {
        const State u = s.state(0.2, 5.0, 2.0);
        const double g = s.uniform(0.5, 2.0);
        const auto m = quasilinear_matrices(u, PhysParams{g});
        const Matrix5d J = conserved_jacobian(u);
        for (int a = 0; a < 2; ++a) {
            const Matrix5d& A = a == 0 ? m.A1 : m.A2;
            const Matrix5d transported = J * m.A0.inverse() * A * J.inverse();
            const Matrix5d dF = smhd::testing::flux_jacobian(u, a, g);
            const double scale = 1.0 + dF.cwiseAbs().maxCoeff();
            REQUIRE((transported - dF - constraint_coupling(u, a)).cwiseAbs().maxCoeff() < 1e-6 * scale);
        }
    }
}

TEST_CASE("the constraint coupling vanishes on divergence-free data")
{
    const State u = make_state(1.3, 0.2, -0.4, 0.7, 0.1);
    Vector5d dq = Vector5d::Zero();
    dq(3) = 0.8;
    Vector5d dq2 = Vector5d::Zero();
    dq2(4) = -0.8;
    const Vector5d total = constraint_coupling(u, 0) * dq + constraint_coupling(u, 1) * dq2;
    CHECK(total.norm() == doctest::Approx(0.0));
}

TEST_CASE("quasilinear matrices at rest")
{
    const auto m = quasilinear_matrices(make_state(1, 0, 0, 0, 0), PhysParams{1.0});
    CHECK(m.A0.isApprox(Matrix5d::Identity()));
    Matrix5d expected = Matrix5d::Zero();
    expected(0, 1) = expected(1, 0) = 1.0;
    CHECK(m.A1.isApprox(expected));
}

TEST_CASE("quasilinear matrices are symmetric with positive A0")
{
    Sampler s(17);
    for (int n = 0; n < 2000; ++n) {
        const State u = s.state();
        const PhysParams p{s.uniform(0.1, 10.0)};
        for (auto form : {MatrixForm::PrimitiveHeight, MatrixForm::PressureForm}) {
            const auto m = quasilinear_matrices(u, p, form);
            REQUIRE((m.A1 - m.A1.transpose()).cwiseAbs().maxCoeff() == 0.0);
            REQUIRE((m.A2 - m.A2.transpose()).cwiseAbs().maxCoeff() == 0.0);
            REQUIRE((m.A0 - m.A0.transpose()).cwiseAbs().maxCoeff() == 0.0);
            REQUIRE(Eigen::SelfAdjointEigenSolver<Matrix5d>(m.A0).eigenvalues().minCoeff() > 0.0);
        }
    }
}

TEST_CASE("height and pressure forms share characteristic speeds")
{
    Sampler s(19);
    for (int n = 0; n < 1000; ++n) {
        const State u = s.state();
        const FrontGeometry f = s.front();
        const PhysParams p{s.uniform(0.1, 10.0)};
        const auto a = quasilinear_matrices(u, p, MatrixForm::PrimitiveHeight);
        const auto b = quasilinear_matrices(u, p, MatrixForm::PressureForm);
        const Vector2d nrm = f.normal();
        const auto ea = smhd::testing::pencil_eigenvalues(a.along(nrm), a.A0);
        const auto eb = smhd::testing::pencil_eigenvalues(b.along(nrm), b.A0);
        for (int k = 0; k < 5; ++k)
            REQUIRE(std::abs(ea[k] - eb[k]) < 1e-10 * (1.0 + std::abs(ea[k])));
    }
}

TEST_CASE("boundary matrix")
{
    Sampler s(23);
    const State u = s.state();
    const PhysParams p{1.0};
    CHECK(boundary_matrix(u, FrontGeometry{}, p) == quasilinear_matrices(u, p).A1);
    for (int n = 0; n < 100; ++n) {
        const Matrix5d b = boundary_matrix(s.state(), s.front(), p);
        REQUIRE((b - b.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("gravity wave speed")
{
    CHECK(gravity_wave_speed(make_state(1, 0, 0, 0, 0), PhysParams{1.0}) == 1.0);
    CHECK(gravity_wave_speed(make_state(2, 0, 0, 0, 0), PhysParams{1.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(gravity_wave_speed(make_state(0.25, 0, 0, 0, 0), PhysParams{9.8}) == doctest::Approx(std::sqrt(2.45)));
}

TEST_CASE("energy density")
{
    CHECK(energy_density(make_state(2, 1, 0, 0, 1), PhysParams{1.0}) == doctest::Approx(0.5 * 2 * 2 + 0.5 * 4));
}

TEST_CASE("gravity must be positive")
{
    CHECK_THROWS_AS(validate(PhysParams{0.0}), Error);
    CHECK_THROWS_AS(validate(PhysParams{-1.0}), Error);
    CHECK_NOTHROW(validate(PhysParams{9.81}));
}
