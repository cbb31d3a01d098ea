#include "smhd/discontinuity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace smhd {

SideTrace side_trace(const State& u, const FrontGeometry& f)
{
    require_positive_height(u.h);
    const double s = f.slope;
    SideTrace t;
    t.vN = u.v(0) - u.v(1) * s;
    t.vTau = u.v(0) * s + u.v(1);
    t.BN = u.B(0) - u.B(1) * s;
    t.BTau = u.B(0) * s + u.B(1);
    t.m = u.h * (t.vN - f.speed);
    t.b = u.h * t.BN;
    return t;
}

TraceQuantities trace_quantities(const SidePair& sp)
{
    TraceQuantities tq;
    tq.plus = side_trace(sp.plus, sp.front);
    tq.minus = side_trace(sp.minus, sp.front);
    tq.hMean = sp.plus.h + sp.minus.h;
    tq.normSq = sp.front.normal_sq();
    return tq;
}

Vector2d from_normal_tangential(double normal, double tangential, double slope)
{
    const double n2 = 1.0 + slope * slope;
    return {(normal + slope * tangential) / n2, (tangential - slope * normal) / n2};
}

double RHResidual::relative() const
{
    return (r.array().abs() / entryScale.array().max(1.0)).maxCoeff();
}

RHResidual rh_residual(const SidePair& sp)
{
    const auto tq = trace_quantities(sp);
    const auto& P = tq.plus;
    const auto& M = tq.minus;
    const double g = sp.params.g;
    const double hp = sp.plus.h, hm = sp.minus.h;
    const double m = 0.5 * (P.m + M.m);
    const double b = 0.5 * (P.b + M.b);
    const double dh = hp - hm;
    const double dvt = P.vTau - M.vTau;
    const double dbt = P.BTau - M.BTau;
    const double hugoniot = 0.5 * g * tq.normSq * tq.hMean * hp * hm;

    RHResidual res;
    res.r << P.m - M.m, P.b - M.b, dh * (m * m - b * b - hugoniot), m * dvt - b * dbt, m * dbt - b * dvt;

    const double tangential = std::abs(P.vTau) + std::abs(M.vTau) + std::abs(P.BTau) + std::abs(M.BTau);
    res.entryScale << std::max(std::abs(P.m), std::abs(M.m)), std::max(std::abs(P.b), std::abs(M.b)),
        std::abs(dh) * (m * m + b * b + hugoniot) + (m * m + b * b + hugoniot),
        (std::abs(m) + std::abs(b)) * tangential, (std::abs(m) + std::abs(b)) * tangential;
    res.scale = std::max(1.0, res.entryScale.maxCoeff());
    return res;
}

std::string to_string(DiscontinuityTag tag)
{
    switch (tag) {
    case DiscontinuityTag::Shock: return "Shock";
    case DiscontinuityTag::CurrentVortexSheet: return "CurrentVortexSheet";
    case DiscontinuityTag::AlfvenDiscontinuity: return "AlfvenDiscontinuity";
    case DiscontinuityTag::Continuous: return "Continuous";
    case DiscontinuityTag::Inadmissible: return "Inadmissible";
    }
    return "Unknown";
}

double zero_threshold(const TraceQuantities& tq, const PhysParams& p, double tol)
{
    const double scale =
        std::max({1.0, std::abs(tq.plus.m), std::abs(tq.plus.b), p.g * tq.hMean * tq.hMean});
    return tol * scale;
}

namespace {

enum class Branch { None, CurrentVortexSheet, Alfven, Shock, MassFreeField };

Branch branch_for(const SideTrace& t, double dh, double z)
{
    const bool mZero = std::abs(t.m) <= z;
    const bool bZero = std::abs(t.b) <= z;
    const bool hZero = std::abs(dh) <= z;
    const bool alfven = std::abs(std::abs(t.m) - std::abs(t.b)) <= z;
    if (mZero && bZero && hZero)
        return Branch::CurrentVortexSheet;
    if (mZero && !bZero)
        return Branch::MassFreeField;
    if (!mZero && alfven && hZero)
        return Branch::Alfven;
    if (!mZero && !alfven && !hZero)
        return Branch::Shock;
    return Branch::None;
}

} // namespace

DiscontinuityKind classify(const SidePair& sp, double tol)
{
    const auto tq = trace_quantities(sp);
    const auto res = rh_residual(sp);

    DiscontinuityKind kind;
    if (res.relative() > tol) {
        Eigen::Index worst = 0;
        (res.r.array().abs() / res.entryScale.array().max(1.0)).maxCoeff(&worst);
        std::ostringstream os;
        os << "jump condition " << worst << " violated (relative residual " << res.relative() << ")";
        kind.tag = DiscontinuityTag::Inadmissible;
        kind.reason = os.str();
        return kind;
    }

    const double z = zero_threshold(tq, sp.params, tol);
    const double dh = sp.plus.h - sp.minus.h;
    const double dv = (sp.plus.v - sp.minus.v).cwiseAbs().maxCoeff();
    const double dB = (sp.plus.B - sp.minus.B).cwiseAbs().maxCoeff();
    if (std::abs(dh) <= z && dv <= z && dB <= z) {
        kind.tag = DiscontinuityTag::Continuous;
        return kind;
    }

    const Branch bp = branch_for(tq.plus, dh, z);
    const Branch bm = branch_for(tq.minus, dh, z);
    if (bp != bm)
        throw Error(ErrorKind::AmbiguousClassification,
                    "plus and minus traces fall in different branches within the zero band");

    switch (bp) {
    case Branch::CurrentVortexSheet: kind.tag = DiscontinuityTag::CurrentVortexSheet; break;
    case Branch::Alfven: kind.tag = DiscontinuityTag::AlfvenDiscontinuity; break;
    case Branch::Shock: kind.tag = DiscontinuityTag::Shock; break;
    case Branch::MassFreeField:
        // With h+- > 0 the jump conditions leave no room for a jump when m = 0, b != 0.
        kind.tag = DiscontinuityTag::Continuous;
        kind.note = "m = 0 with b != 0: jump conditions force [h] = [v] = [B] = 0";
        break;
    case Branch::None:
        throw Error(ErrorKind::AmbiguousClassification, "no discontinuity branch matches within the zero band");
    }
    return kind;
}

SidePair canonicalize_field_sign(const SidePair& sp)
{
    const auto tq = trace_quantities(sp);
    const double bn = tq.plus.BN != 0.0 ? tq.plus.BN : tq.minus.BN;
    if (bn >= 0.0)
        return sp;
    SidePair out = sp;
    out.plus.B = -sp.plus.B;
    out.minus.B = -sp.minus.B;
    return out;
}

SidePair mirror(const SidePair& sp)
{
    auto reflect = [](State u) {
        u.v(0) = -u.v(0);
        u.B(0) = -u.B(0);
        return u;
    };
    SidePair out;
    out.plus = reflect(sp.minus);
    out.minus = reflect(sp.plus);
    out.front.slope = -sp.front.slope;
    out.front.speed = -sp.front.speed;
    out.params = sp.params;
    return out;
}

} // namespace smhd
