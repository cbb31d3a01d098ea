#include <doctest.h>

#include "oracles.hpp"
#include "smhd/symmetrization.hpp"

using namespace smhd;
using smhd::testing::Sampler;

TEST_CASE("lambda = 0 recovers the primary symmetric form")
{
    Sampler s(83);
    for (int n = 0; n < 500; ++n) {
        const State u = s.state();
        const PhysParams p{s.uniform(0.1, 10)};
        const auto b = secondary_matrices(u, 0.0, p);
        const auto a = quasilinear_matrices(u, p);
        REQUIRE(b.B0 == a.A0);
        REQUIRE(b.B1 == a.A1);
        REQUIRE(b.B2 == a.A2);
    }
}

TEST_CASE("secondary matrices are symmetric")
{
    Sampler s(89);
    for (int n = 0; n < 500; ++n) {
        const auto b = secondary_matrices(s.state(), s.uniform(-3, 3), PhysParams{s.uniform(0.1, 10)});
        REQUIRE(b.B0 == b.B0.transpose());
        REQUIRE(b.B1 == b.B1.transpose());
        REQUIRE(b.B2 == b.B2.transpose());
    }
}

TEST_CASE("B0 block structure and definiteness boundary")
{
    const State u = make_state(1, 0, 0, 0, 0);
    const auto b = secondary_matrices(u, 0.5, PhysParams{1.0});
    CHECK(b.B0(1, 3) == -0.5);
    CHECK(b.B0(2, 4) == -0.5);
    CHECK(Eigen::SelfAdjointEigenSolver<Matrix5d>(b.B0).eigenvalues().minCoeff() == doctest::Approx(0.5));
    const auto one = secondary_matrices(u, 1.0, PhysParams{1.0});
    CHECK(std::abs(one.B0.determinant()) < 1e-15);

    CHECK(secondary_hyperbolic(u, 0.999));
    CHECK_FALSE(secondary_hyperbolic(u, 1.0));
    CHECK_FALSE(secondary_hyperbolic(u, -1.0));
    CHECK_FALSE(secondary_hyperbolic(make_state(0, 0, 0, 0, 0), 0.0));

    Sampler s(97);
    for (int n = 0; n < 1000; ++n) {
        const State v = make_state(s.uniform(0.01, 5), 0, 0, 0, 0);
        const double lam = s.uniform(-2, 2);
        const double minEig =
            Eigen::SelfAdjointEigenSolver<Matrix5d>(secondary_matrices(v, lam, PhysParams{}).B0).eigenvalues().minCoeff();
        REQUIRE(secondary_hyperbolic(v, lam) == (minEig > 0.0));
    }
}

TEST_CASE("secondary residual identity")
{
    const State u0 = make_state(1.2, 0.3, -0.1, 0.5, 0.2);
    const auto zero = secondary_residual_decomposition(u0, Vector5d::Zero(), Vector5d::Zero(), Vector5d::Zero(), 0.4,
                                                       PhysParams{});
    CHECK(zero.primaryResidual.isZero());
    CHECK(zero.secondaryResidual.isZero());
    CHECK(zero.divergenceTerm == 0.0);

    Sampler s(101);
    for (int n = 0; n < 10000; ++n) {
        const State u = s.state();
        const PhysParams p{s.uniform(0.1, 10)};
        const auto d = secondary_residual_decomposition(u, s.vec5(3), s.vec5(3), s.vec5(3), s.uniform(-0.99, 0.99), p);
        REQUIRE(d.reconstructionError < 1e-12 * d.scale);
    }
}

TEST_CASE("smooth divergence-free solutions solve both forms")
{
    Sampler s(103);
    for (int n = 0; n < 500; ++n) {
        const State u = s.state(0.5, 3, 2);
        const PhysParams p{};
        Vector5d d1 = s.vec5(), d2 = s.vec5();
        // choose d2 B2 so that (B . grad) h + h div B = 0
        d2(4) = -((u.B(0) * d1(0) + u.B(1) * d2(0)) / u.h + d1(3));
        const auto m = quasilinear_matrices(u, p);
        const Vector5d dt = -m.A0.inverse() * (m.A1 * d1 + m.A2 * d2);
        const auto r = secondary_residual_decomposition(u, dt, d1, d2, s.uniform(-0.9, 0.9), p);
        REQUIRE(std::abs(r.divergenceTerm) < 1e-12 * (1 + r.scale));
        REQUIRE(r.primaryResidual.cwiseAbs().maxCoeff() < 1e-12 * r.scale);
        REQUIRE(r.secondaryResidual.cwiseAbs().maxCoeff() < 1e-12 * r.scale);
    }
}

TEST_CASE("lambda selection for current-vortex sheets")
{
    auto c = lambda_for_cvs(make_state(1, 0, 0.3, 0, 1), make_state(1, 0, 0.3, 0, -1));
    CHECK(c.lambdaPlus == 0.0);
    CHECK(c.lambdaMinus == 0.0);
    CHECK(c.hyperbolicPlus);

    const State plus = make_state(1, 0, 0.25, 0, 1), minus = make_state(1, 0, -0.25, 0, -1);
    c = lambda_for_cvs(plus, minus);
    // k = |[v2]| / (|B2+| + |B2-|) = 0.25; lambda+ B2+ - lambda- B2- = [v2] fixes lambda- = +0.25
    CHECK(c.lambdaPlus == doctest::Approx(0.25));
    CHECK(c.lambdaMinus == doctest::Approx(0.25));
    CHECK(c.lambdaPlus * 1.0 - c.lambdaMinus * -1.0 == doctest::Approx(0.5));
    CHECK(c.hyperbolicPlus);
    CHECK(c.hyperbolicMinus);

    c = lambda_for_cvs(make_state(1, 0, 1, 0, 1), make_state(1, 0, -1, 0, -1));
    CHECK(std::abs(c.lambdaPlus) == 1.0);
    CHECK_FALSE(c.hyperbolicPlus);
    CHECK_FALSE(c.hyperbolicMinus);

    CHECK_THROWS_AS(lambda_for_cvs(make_state(1, 0, 1, 0, 0), make_state(1, 0, 0, 0, 0)), Error);

    Sampler s(107);
    for (int n = 0; n < 10000; ++n) {
        const State a = make_state(1, 0, s.uniform(-3, 3), 0, s.uniform(-3, 3));
        const State b = make_state(1, 0, s.uniform(-3, 3), 0, s.uniform(-3, 3));
        const auto ch = lambda_for_cvs(a, b);
        const double jump = a.v(1) - b.v(1);
        REQUIRE(std::abs(ch.lambdaPlus * a.B(1) - ch.lambdaMinus * b.B(1) - jump) < 1e-14 * (1 + std::abs(jump)));
        const bool ssc = std::abs(jump) < std::abs(a.B(1)) + std::abs(b.B(1));
        REQUIRE(ch.hyperbolicPlus == ssc);
        REQUIRE(ch.hyperbolicMinus == ssc);
    }
}

TEST_CASE("sufficient condition verdicts")
{
    const State plus = make_state(1, 0, 0.25, 0, 1), minus = make_state(1, 0, -0.25, 0, -1);
    auto v = cvs_sufficient_verdict(plus, minus, 0.1);
    CHECK(v.tag == CvsTag::SufficientlyStable);
    CHECK(v.margin == doctest::Approx(1.5));

    v = cvs_sufficient_verdict(make_state(1, 0, 1.25, 0, 1), make_state(1, 0, -1.25, 0, -1), 0.1);
    CHECK(v.tag == CvsTag::Inconclusive);

    CHECK_THROWS_AS(cvs_sufficient_verdict(make_state(1, 0, 1, 0, 0), make_state(1, 0, 0, 0, 0), 0.1), Error);
    CHECK_THROWS_AS(cvs_sufficient_verdict(make_state(1, 0, 1, 0, 1), make_state(2, 0, 0, 0, 1), 0.1), Error);
}

TEST_CASE("necessary and sufficient verdicts in the symmetric case")
{
    const PhysParams p{1.0};
    auto sym = [](double jump, double b) {
        return std::pair{make_state(1, 0, 0.5 * jump, 0, b), make_state(1, 0, -0.5 * jump, 0, -b)};
    };
    auto [a, b] = sym(0.5, 1.0);
    CHECK(cvs_nsc_verdict(a, b, p).tag == CvsTag::NscStable);
    std::tie(a, b) = sym(3.0, 1.0);
    CHECK(cvs_nsc_verdict(a, b, p).tag == CvsTag::NscUnstable);
    std::tie(a, b) = sym(1.0, 1.0);
    auto v = cvs_nsc_verdict(a, b, p);
    CHECK(v.tag == CvsTag::ExceptionalPoint);
    CHECK(v.exceptionalIndex == 1);
    std::tie(a, b) = sym(4.0, 1.0);
    CHECK(cvs_nsc_verdict(a, b, p).tag == CvsTag::NscStable);
    std::tie(a, b) = sym(2.0, 1.0);
    v = cvs_nsc_verdict(a, b, p);
    CHECK(v.tag == CvsTag::ExceptionalPoint);
    CHECK(v.exceptionalIndex == 5);
    std::tie(a, b) = sym(2.0 * std::sqrt(3.0), 1.0);
    v = cvs_nsc_verdict(a, b, p);
    CHECK(v.tag == CvsTag::ExceptionalPoint);
    CHECK(v.exceptionalIndex == 6);

    CHECK_THROWS_AS(cvs_nsc_verdict(make_state(1, 0, 0, 0, 1), make_state(1, 0, 0, 0, -0.5), p), Error);
}

TEST_CASE("sufficiently stable implies nsc-stable or exceptional")
{
    const PhysParams p{1.0};
    int violations = 0, sufficient = 0;
    for (int i = 0; i < 200; ++i)
        for (int j = 0; j < 200; ++j) {
            const double jump = 5.0 * i / 199.0, b2 = 2.0 * j / 199.0;
            const State a = make_state(1, 0, 0.5 * jump, 0, b2), bm = make_state(1, 0, -0.5 * jump, 0, -b2);
            if (b2 == 0.0)
                continue;
            const auto suff = cvs_sufficient_verdict(a, bm, 0.1);
            if (suff.tag != CvsTag::SufficientlyStable)
                continue;
            ++sufficient;
            const auto nsc = cvs_nsc_verdict(a, bm, p);
            violations += nsc.tag != CvsTag::NscStable && nsc.tag != CvsTag::ExceptionalPoint;
        }
    CHECK(sufficient > 1000);
    CHECK(violations == 0);
}

TEST_CASE("boundary energy term")
{
    const PhysParams p{1.0};
    const State plus = make_state(1, 0, 0.25, 0, 1), minus = make_state(1, 0, -0.25, 0, -1);
    const double slope = 0.2, hPert = 0.3;
    Vector5d tp, tm;
    tp << hPert, 0.1 + 0.25 * slope, 0.7, 1.0 * slope, -0.4;
    tm << hPert, 0.1 - 0.25 * slope, -0.3, -1.0 * slope, 0.9;

    const auto choice = lambda_for_cvs(plus, minus);
    CHECK(std::abs(boundary_energy_term(plus, minus, choice, tp, tm, slope, p)) < 1e-12);

    const SymmetrizerChoice none{};
    // 2 g h [v1 - lambda B1] with [v1] = [v2_hat] d2phi
    const double expected = 2.0 * p.g * hPert * 0.5 * slope;
    CHECK(boundary_energy_term(plus, minus, none, tp, tm, slope, p) == doctest::Approx(expected));
    CHECK(boundary_energy_reduced(plus, minus, none, tp, slope, p) == doctest::Approx(expected));

    Vector5d fp = tp, fm = tm;
    fp(1) = fm(1) = 0.1;
    fp(3) = fm(3) = 0.0;
    CHECK(boundary_energy_term(plus, minus, none, fp, fm, 0.0, p) == doctest::Approx(0.0));

    Vector5d broken = tp;
    broken(0) += 0.1;
    CHECK_THROWS_AS(boundary_energy_term(plus, minus, none, broken, tm, slope, p), Error);
}
