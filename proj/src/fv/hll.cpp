#include "smhd/fv/hll.hpp"

#include <algorithm>
#include <cmath>

namespace smhd::fv {

std::pair<double, double> fast_speeds(const State& u, const Vector2d& n, const PhysParams& p)
{
    require_positive_height(u.h);
    const double vn = u.v.dot(n);
    const double bn = u.B.dot(n);
    const double cg = std::sqrt(bn * bn + p.g * u.h * n.squaredNorm());
    return {vn - cg, vn + cg};
}

Vector5d hll_flux(const State& left, const State& right, const Vector2d& unitNormal, const PhysParams& p)
{
    const auto [lminL, lmaxL] = fast_speeds(left, unitNormal, p);
    const auto [lminR, lmaxR] = fast_speeds(right, unitNormal, p);
    const double sl = std::min(lminL, lminR);
    const double sr = std::max(lmaxL, lmaxR);

    if (sl >= 0.0)
        return normal_flux(left, unitNormal, p);
    if (sr <= 0.0)
        return normal_flux(right, unitNormal, p);

    const Vector5d fl = normal_flux(left, unitNormal, p);
    const Vector5d fr = normal_flux(right, unitNormal, p);
    const Vector5d ql = conserved_from_primitive(left, p);
    const Vector5d qr = conserved_from_primitive(right, p);
    return (sr * fl - sl * fr + sl * sr * (qr - ql)) / (sr - sl);
}

} // namespace smhd::fv
