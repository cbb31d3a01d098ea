#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "smhd/core.hpp"

namespace smhd::testing {

/// Deterministic sampler over the ranges used throughout the property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 20240611) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    State state(double hLo = 0.1, double hHi = 10.0, double amp = 3.0)
    {
        return make_state(uniform(hLo, hHi), uniform(-amp, amp), uniform(-amp, amp), uniform(-amp, amp),
                          uniform(-amp, amp));
    }

    FrontGeometry front(double slope = 2.0, double speed = 3.0)
    {
        return FrontGeometry{uniform(-slope, slope), uniform(-speed, speed)};
    }

    Vector5d vec5(double amp = 1.0)
    {
        Vector5d v;
        for (int i = 0; i < 5; ++i)
            v(i) = uniform(-amp, amp);
        return v;
    }

private:
    std::mt19937_64 rng_;
};

/// Componentwise fluxes written out by hand from the conservation-law form.
inline std::pair<Vector5d, Vector5d> hand_fluxes(const State& u, double g)
{
    const double h = u.h, v1 = u.v(0), v2 = u.v(1), b1 = u.B(0), b2 = u.B(1);
    Vector5d f1, f2;
    f1 << h * v1, h * v1 * v1 - h * b1 * b1 + 0.5 * g * h * h, h * v1 * v2 - h * b1 * b2, 0.0,
        h * b2 * v1 - h * b1 * v2;
    f2 << h * v2, h * v2 * v1 - h * b2 * b1, h * v2 * v2 - h * b2 * b2 + 0.5 * g * h * h,
        h * b1 * v2 - h * b2 * v1, 0.0;
    return {f1, f2};
}

/// Generalised eigenvalues of (K, A0), ascending; A0 symmetric positive definite.
inline std::array<double, 5> pencil_eigenvalues(const Matrix5d& K, const Matrix5d& A0)
{
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix5d> es(K, A0);
    std::array<double, 5> out{};
    for (int i = 0; i < 5; ++i)
        out[i] = es.eigenvalues()(i);
    std::sort(out.begin(), out.end());
    return out;
}

/// Jacobian of the conserved-variable flux by complex-step differentiation.
inline Matrix5d flux_jacobian(const State& u, int axis, double g)
{
    using C = std::complex<double>;
    const Vector5d q = conserved_from_primitive(u);
    Matrix5d J;
    constexpr double step = 1e-30;
    for (int k = 0; k < 5; ++k) {
        Vector5<C> qc = q.cast<C>();
        qc(k) += C(0.0, step);
        const auto uc = primitive_from_conserved<C>(qc);
        const auto [f1, f2] = fluxes<C>(uc, PhysParams{g});
        const Vector5<C>& f = axis == 0 ? f1 : f2;
        for (int r = 0; r < 5; ++r)
            J(r, k) = f(r).imag() / step;
    }
    return J;
}

inline double rel_err(double a, double b, double floor = 1e-300)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

} // namespace smhd::testing
