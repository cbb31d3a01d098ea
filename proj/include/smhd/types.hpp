#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "smhd/error.hpp"

namespace smhd {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector5 = Eigen::Matrix<Scalar, 5, 1>;
template <typename Scalar>
using Matrix5 = Eigen::Matrix<Scalar, 5, 5>;

using Vector2d = Vector2<double>;
using Vector5d = Vector5<double>;
using Matrix5d = Matrix5<double>;

/// Real part of a scalar; lets the templated core run on complex-step scalars.
inline double value_of(double x) noexcept { return x; }
template <typename T>
double value_of(const std::complex<T>& z) noexcept
{
    return static_cast<double>(z.real());
}

struct PhysParams {
    double g = 1.0;
};

inline void validate(const PhysParams& p)
{
    if (!(p.g > 0.0) || !std::isfinite(p.g))
        throw Error(ErrorKind::InvalidConfig, "gravity g must be positive and finite");
}

/// Pointwise primitive state U = (h, v, B).
template <typename Scalar>
struct StateT {
    Scalar h{1};
    Vector2<Scalar> v = Vector2<Scalar>::Zero();
    Vector2<Scalar> B = Vector2<Scalar>::Zero();

    Vector5<Scalar> as_vector() const
    {
        Vector5<Scalar> u;
        u << h, v(0), v(1), B(0), B(1);
        return u;
    }

    static StateT from_vector(const Vector5<Scalar>& u)
    {
        return StateT{u(0), Vector2<Scalar>(u(1), u(2)), Vector2<Scalar>(u(3), u(4))};
    }
};

using State = StateT<double>;

inline State make_state(double h, double v1, double v2, double b1, double b2)
{
    return State{h, Vector2d(v1, v2), Vector2d(b1, b2)};
}

template <typename Scalar>
void require_positive_height(const Scalar& h)
{
    const double hv = value_of(h);
    if (!(hv > 0.0) || !std::isfinite(hv))
        throw Error(ErrorKind::NonPositiveHeight, "height must be positive, got " + std::to_string(hv));
}

/// Local geometry of a front x1 = phi(t, x2): slope = d2 phi, speed = dt phi.
struct FrontGeometry {
    double slope = 0.0;
    double speed = 0.0;

    /// N = (1, -d2 phi); not normalised.
    Vector2d normal() const { return {1.0, -slope}; }
    double normal_sq() const { return 1.0 + slope * slope; }
};

} // namespace smhd
