#pragma once

#include <utility>

#include "smhd/core.hpp"

namespace smhd {

template <typename Scalar>
using Vector7 = Eigen::Matrix<Scalar, 7, 1>;
template <typename Scalar>
using Matrix7 = Eigen::Matrix<Scalar, 7, 7>;

/// 2D compressible isentropic elastodynamics state with the polytropic law
/// p = A rho^gamma. F1 and F2 are the columns of the deformation gradient.
template <typename Scalar>
struct ElasticStateT {
    Scalar rho{1};
    Vector2<Scalar> v = Vector2<Scalar>::Zero();
    Vector2<Scalar> F1 = Vector2<Scalar>::Zero();
    Vector2<Scalar> F2 = Vector2<Scalar>::Zero();
    double A = 0.5;
    double gamma = 2.0;

    Scalar pressure() const
    {
        using std::pow;
        return Scalar(A) * pow(rho, Scalar(gamma));
    }

    /// c^2 = p'(rho).
    Scalar sound_speed_sq() const
    {
        using std::pow;
        return Scalar(A * gamma) * pow(rho, Scalar(gamma - 1.0));
    }
};

using ElasticState = ElasticStateT<double>;

/// rho := h, F1 := B, F2 := 0, p = (g/2) rho^2.
template <typename Scalar>
ElasticStateT<Scalar> embed_elastodynamics(const StateT<Scalar>& u, const PhysParams& p)
{
    require_positive_height(u.h);
    ElasticStateT<Scalar> e;
    e.rho = u.h;
    e.v = u.v;
    e.F1 = u.B;
    e.F2 = Vector2<Scalar>::Zero();
    e.A = 0.5 * p.g;
    e.gamma = 2.0;
    return e;
}

/// Conserved (rho, rho v, rho F1, rho F2) fluxes along x1 and x2.
template <typename Scalar>
std::pair<Vector7<Scalar>, Vector7<Scalar>> elastic_fluxes(const ElasticStateT<Scalar>& e)
{
    require_positive_height(e.rho);
    const Scalar& r = e.rho;
    const Scalar pr = e.pressure();
    const Scalar v1 = e.v(0), v2 = e.v(1);
    Vector7<Scalar> f1, f2;
    f1(0) = r * v1;
    f2(0) = r * v2;
    // rho v (x) v - sum_j rho F_j (x) F_j + p I
    Eigen::Matrix<Scalar, 2, 2> stress;
    stress << r * v1 * v1 + pr, r * v1 * v2, r * v2 * v1, r * v2 * v2 + pr;
    for (const auto* col : {&e.F1, &e.F2}) {
        const auto& F = *col;
        stress(0, 0) -= r * F(0) * F(0);
        stress(0, 1) -= r * F(0) * F(1);
        stress(1, 0) -= r * F(1) * F(0);
        stress(1, 1) -= r * F(1) * F(1);
    }
    f1(1) = stress(0, 0);
    f1(2) = stress(1, 0);
    f2(1) = stress(0, 1);
    f2(2) = stress(1, 1);
    // dt(rho F_j) + curl(rho F_j x v) = 0, same structure as the induction law
    int row = 3;
    for (const auto* col : {&e.F1, &e.F2}) {
        const auto& F = *col;
        const Scalar w = r * (F(0) * v2 - F(1) * v1);
        f1(row) = Scalar(0);
        f1(row + 1) = -w;
        f2(row) = w;
        f2(row + 1) = Scalar(0);
        row += 2;
    }
    return {f1, f2};
}

template <typename Scalar>
struct ElasticMatricesT {
    Matrix7<Scalar> A0, A1, A2;
};

/// Symmetric quasilinear matrices for the unknown (p, v, F1, F2).
template <typename Scalar>
ElasticMatricesT<Scalar> elastic_matrices(const ElasticStateT<Scalar>& e)
{
    require_positive_height(e.rho);
    const Scalar& r = e.rho;
    const Scalar rc2 = r * e.sound_speed_sq();
    ElasticMatricesT<Scalar> m;
    m.A0 = r * Matrix7<Scalar>::Identity();
    m.A0(0, 0) = Scalar(1) / rc2;

    auto spatial = [&](int a) {
        Matrix7<Scalar> s = Matrix7<Scalar>::Zero();
        const Scalar va = e.v(a);
        s(0, 0) = va / rc2;
        s(0, 1 + a) = Scalar(1);
        s(1 + a, 0) = Scalar(1);
        for (int k = 0; k < 2; ++k)
            s(1 + k, 1 + k) = r * va;
        int block = 3;
        for (const auto* col : {&e.F1, &e.F2}) {
            // (F_j . grad) along axis a picks the a-th component of column j
            const Scalar fa = (*col)(a);
            for (int k = 0; k < 2; ++k) {
                s(block + k, block + k) = r * va;
                s(1 + k, block + k) = -r * fa;
                s(block + k, 1 + k) = -r * fa;
            }
            block += 2;
        }
        return s;
    };
    m.A1 = spatial(0);
    m.A2 = spatial(1);
    return m;
}

/// Drops the two F2 rows (and columns) of an elastodynamics vector/matrix.
template <typename Scalar>
Vector5<Scalar> drop_second_column_rows(const Vector7<Scalar>& x)
{
    return x.template head<5>();
}

template <typename Scalar>
Matrix5<Scalar> drop_second_column_rows(const Matrix7<Scalar>& m)
{
    return m.template topLeftCorner<5, 5>();
}

} // namespace smhd
