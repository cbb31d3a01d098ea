#pragma once

#include <utility>

#include "smhd/types.hpp"

namespace smhd {

/// q = (h, h v1, h v2, h B1, h B2).
template <typename Scalar>
using ConservedT = Vector5<Scalar>;
using Conserved = ConservedT<double>;

template <typename Scalar>
ConservedT<Scalar> conserved_from_primitive(const StateT<Scalar>& u, const PhysParams& = {})
{
    require_positive_height(u.h);
    ConservedT<Scalar> q;
    q << u.h, u.h * u.v(0), u.h * u.v(1), u.h * u.B(0), u.h * u.B(1);
    return q;
}

/// Inverse of conserved_from_primitive. No positivity floor is applied.
template <typename Scalar>
StateT<Scalar> primitive_from_conserved(const ConservedT<Scalar>& q)
{
    require_positive_height(q(0));
    const Scalar h = q(0);
    return StateT<Scalar>{h, Vector2<Scalar>(q(1) / h, q(2) / h), Vector2<Scalar>(q(3) / h, q(4) / h)};
}

/// Physical fluxes of the conservation-law form along x1 and x2.
///
/// The induction law dt(hB) + curl(hB x v) = 0 is expanded with the scalar
/// out-of-plane product w = h (B1 v2 - B2 v1):
///   dt(hB1) + d2 w = 0,   dt(hB2) - d1 w = 0.
/// Hence the hB1 row of F1 and the hB2 row of F2 vanish identically.
template <typename Scalar>
std::pair<Vector5<Scalar>, Vector5<Scalar>> fluxes(const StateT<Scalar>& u, const PhysParams& p)
{
    require_positive_height(u.h);
    const Scalar& h = u.h;
    const Scalar v1 = u.v(0), v2 = u.v(1), b1 = u.B(0), b2 = u.B(1);
    const Scalar pressure = Scalar(0.5 * p.g) * h * h;
    const Scalar w = h * (b1 * v2 - b2 * v1);

    Vector5<Scalar> f1, f2;
    f1 << h * v1, h * v1 * v1 - h * b1 * b1 + pressure, h * v1 * v2 - h * b1 * b2, Scalar(0), -w;
    f2 << h * v2, h * v1 * v2 - h * b1 * b2, h * v2 * v2 - h * b2 * b2 + pressure, w, Scalar(0);
    return {f1, f2};
}

/// n1 F1 + n2 F2.
template <typename Scalar>
Vector5<Scalar> normal_flux(const StateT<Scalar>& u, const Vector2d& n, const PhysParams& p)
{
    const auto [f1, f2] = fluxes(u, p);
    return Scalar(n(0)) * f1 + Scalar(n(1)) * f2;
}

template <typename Scalar>
Scalar gravity_wave_speed(const StateT<Scalar>& u, const PhysParams& p)
{
    require_positive_height(u.h);
    using std::sqrt;
    return sqrt(Scalar(p.g) * u.h);
}

enum class MatrixForm {
    PrimitiveHeight, ///< unknown (h, v, B), A0 = diag(g/h, I4)
    PressureForm,    ///< unknown (p, v, B) with p = g h^2 / 2, A0 = diag(1/(h c^2), h I4)
};

template <typename Scalar>
struct MatrixSetT {
    Matrix5<Scalar> A0;
    Matrix5<Scalar> A1;
    Matrix5<Scalar> A2;
    MatrixForm form = MatrixForm::PrimitiveHeight;

    /// A1 n1 + A2 n2.
    Matrix5<Scalar> along(const Vector2d& n) const { return Scalar(n(0)) * A1 + Scalar(n(1)) * A2; }
};

using MatrixSet = MatrixSetT<double>;

namespace detail {

// One spatial matrix of the symmetric form. `a` is the velocity/field axis
// (0 or 1), `head` the (0,0) entry, `cross` the coupling to v_a, `scale` the
// factor on the (v, B) blocks.
template <typename Scalar>
Matrix5<Scalar> spatial_matrix(int a, const Scalar& head, const Scalar& cross, const Scalar& scale,
                               const Scalar& va, const Scalar& ba)
{
    Matrix5<Scalar> m = Matrix5<Scalar>::Zero();
    m(0, 0) = head;
    m(0, 1 + a) = cross;
    m(1 + a, 0) = cross;
    for (int k = 0; k < 2; ++k) {
        m(1 + k, 1 + k) = scale * va;
        m(3 + k, 3 + k) = scale * va;
        m(1 + k, 3 + k) = -scale * ba;
        m(3 + k, 1 + k) = -scale * ba;
    }
    return m;
}

} // namespace detail

/// Symmetric matrices of A0 dt U + A1 d1 U + A2 d2 U = 0.
template <typename Scalar>
MatrixSetT<Scalar> quasilinear_matrices(const StateT<Scalar>& u, const PhysParams& p,
                                        MatrixForm form = MatrixForm::PrimitiveHeight)
{
    require_positive_height(u.h);
    const Scalar g(p.g);
    const Scalar& h = u.h;
    MatrixSetT<Scalar> m;
    m.form = form;
    m.A0 = Matrix5<Scalar>::Identity();
    if (form == MatrixForm::PrimitiveHeight) {
        m.A0(0, 0) = g / h;
        m.A1 = detail::spatial_matrix<Scalar>(0, g * u.v(0) / h, g, Scalar(1), u.v(0), u.B(0));
        m.A2 = detail::spatial_matrix<Scalar>(1, g * u.v(1) / h, g, Scalar(1), u.v(1), u.B(1));
    } else {
        const Scalar hc2 = h * g * h; // h c^2 with c^2 = g h
        m.A0 *= h;
        m.A0(0, 0) = Scalar(1) / hc2;
        m.A1 = detail::spatial_matrix<Scalar>(0, u.v(0) / hc2, Scalar(1), h, u.v(0), u.B(0));
        m.A2 = detail::spatial_matrix<Scalar>(1, u.v(1) / hc2, Scalar(1), h, u.v(1), u.B(1));
    }
    return m;
}

/// Boundary matrix A1 - A0 dt(phi) - A2 d2(phi) in the PrimitiveHeight form.
template <typename Scalar>
Matrix5<Scalar> boundary_matrix(const StateT<Scalar>& u, const FrontGeometry& f, const PhysParams& p)
{
    const auto m = quasilinear_matrices(u, p, MatrixForm::PrimitiveHeight);
    return m.A1 - Scalar(f.speed) * m.A0 - Scalar(f.slope) * m.A2;
}

/// Jacobian d q / d U of the primitive-to-conserved map.
template <typename Scalar>
Matrix5<Scalar> conserved_jacobian(const StateT<Scalar>& u)
{
    Matrix5<Scalar> j = Matrix5<Scalar>::Zero();
    j(0, 0) = Scalar(1);
    for (int k = 0; k < 2; ++k) {
        j(1 + k, 0) = u.v(k);
        j(3 + k, 0) = u.B(k);
        j(1 + k, 1 + k) = u.h;
        j(3 + k, 3 + k) = u.h;
    }
    return j;
}

/// Term that separates the quasilinear system from the conservation-law form.
///
/// In conserved variables the quasilinear system reads
///   dt q + sum_a (dF_a/dq + C_a) d_a q = 0,
/// where C_a d_a q = (0, B, v) d_a(h B_a) carries the div(hB) contributions
/// that the conservative momentum and induction rows drop. So
///   J A0^{-1} A_a J^{-1} = dF_a/dq + C_a   with J = dq/dU.
template <typename Scalar>
Matrix5<Scalar> constraint_coupling(const StateT<Scalar>& u, int axis)
{
    Matrix5<Scalar> c = Matrix5<Scalar>::Zero();
    const int col = 3 + axis;
    c(1, col) = u.B(0);
    c(2, col) = u.B(1);
    c(3, col) = u.v(0);
    c(4, col) = u.v(1);
    return c;
}

/// Total energy density h(|v|^2 + |B|^2)/2 + g h^2/2.
template <typename Scalar>
Scalar energy_density(const StateT<Scalar>& u, const PhysParams& p)
{
    const Scalar kinetic = u.v(0) * u.v(0) + u.v(1) * u.v(1) + u.B(0) * u.B(0) + u.B(1) * u.B(1);
    return Scalar(0.5) * u.h * kinetic + Scalar(0.5 * p.g) * u.h * u.h;
}

} // namespace smhd
