#include "smhd/shock.hpp"

#include <cmath>
#include <limits>

namespace smhd {

CharacteristicSpeeds characteristic_speed_set(const State& u, const FrontGeometry& f, const PhysParams& p)
{
    require_positive_height(u.h);
    const auto t = side_trace(u, f);
    CharacteristicSpeeds cs;
    cs.vN = t.vN;
    cs.caN = t.BN;
    cs.cgN = std::sqrt(t.BN * t.BN + p.g * u.h * f.normal_sq());
    const double ca = std::abs(t.BN);
    cs.lambda = {t.vN - cs.cgN, t.vN - ca, t.vN, t.vN + ca, t.vN + cs.cgN};
    return cs;
}

std::array<double, 5> characteristic_speeds(const State& u, const FrontGeometry& f, const PhysParams& p)
{
    return characteristic_speed_set(u, f, p).lambda;
}

double det_boundary_matrix_closed_form(const State& u, const FrontGeometry& f, const PhysParams& p)
{
    require_positive_height(u.h);
    const auto t = side_trace(u, f);
    const double h3 = u.h * u.h * u.h;
    const double alfven = t.m * t.m - t.b * t.b;
    return p.g / (h3 * h3) * t.m * alfven * (alfven - p.g * f.normal_sq() * h3);
}

HugoniotState hugoniot_downstream(const State& minus, double slope, double hPlus, const PhysParams& p,
                                  int massFluxSign)
{
    require_positive_height(minus.h);
    require_positive_height(hPlus);
    if (hPlus == minus.h)
        throw Error(ErrorKind::DegenerateHeight, "h+ equals h-: no shock on the Hugoniot family");

    FrontGeometry f{slope, 0.0};
    const auto t = side_trace(minus, f); // dt phi does not enter vN, b, tangential parts
    const double hm = minus.h;
    const double b = hm * t.BN;
    const double m2 = b * b + 0.5 * p.g * f.normal_sq() * (hPlus + hm) * hPlus * hm;
    const double m = (massFluxSign >= 0 ? 1.0 : -1.0) * std::sqrt(m2);

    HugoniotState out;
    out.frontSpeed = t.vN - m / hm;
    const double vNPlus = out.frontSpeed + m / hPlus;
    const double bNPlus = b / hPlus;
    out.plus.h = hPlus;
    out.plus.v = from_normal_tangential(vNPlus, t.vTau, slope);
    out.plus.B = from_normal_tangential(bNPlus, t.BTau, slope);
    return out;
}

namespace {

std::optional<int> lax_family(const std::array<double, 5>& minus, const std::array<double, 5>& plus,
                              double speed)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto at = [](const std::array<double, 5>& l, int j, double lo, double hi) {
        if (j < 1)
            return lo;
        if (j > 5)
            return hi;
        return l[static_cast<std::size_t>(j - 1)];
    };
    for (int k = 1; k <= 5; ++k) {
        const bool upstream = at(minus, k - 1, -inf, inf) < speed && speed < at(minus, k, -inf, inf);
        const bool downstream = at(plus, k, -inf, inf) < speed && speed < at(plus, k + 1, -inf, inf);
        if (upstream && downstream)
            return k;
    }
    return std::nullopt;
}

} // namespace

ShockDiagnostics lax_verdict(const SidePair& input, double tol)
{
    if (classify(input, tol).tag != DiscontinuityTag::Shock)
        throw Error(ErrorKind::NotAShock, "pair does not classify as a shock wave");

    ShockDiagnostics d;
    SidePair sp = input;
    if (side_trace(sp.plus, sp.front).m < 0.0) {
        sp = mirror(sp);
        d.relabeled = true;
    }
    const SidePair oriented = canonicalize_field_sign(sp);
    d.fieldFlipped = oriented.plus.B != sp.plus.B;
    sp = oriented;

    const auto& f = sp.front;
    const auto cp = characteristic_speed_set(sp.plus, f, sp.params);
    const auto cm = characteristic_speed_set(sp.minus, f, sp.params);
    d.eigenPlus = cp.lambda;
    d.eigenMinus = cm.lambda;
    d.cgNPlus = cp.cgN;
    d.cgNMinus = cm.cgN;
    d.caNPlus = cp.caN;
    d.caNMinus = cm.caN;
    d.detPlus = det_boundary_matrix_closed_form(sp.plus, f, sp.params);
    d.detMinus = det_boundary_matrix_closed_form(sp.minus, f, sp.params);
    d.frontSpeed = f.speed;
    d.heightJump = sp.plus.h - sp.minus.h;

    const double relMinus = cm.vN - f.speed;
    const double relPlus = cp.vN - f.speed;
    d.lax.satisfied = relMinus > cm.cgN && cp.caN < relPlus && relPlus < cp.cgN;
    d.lax.k = lax_family(cm.lambda, cp.lambda, f.speed);
    // k = 2 would need lambda2- > dt phi and lambda2+ < dt phi at once, i.e. m > b and m < b.
    const bool k2Upstream = cm.lambda[1] > f.speed;
    const bool k2Downstream = cp.lambda[1] < f.speed;
    d.lax.kTwoExcluded = !(k2Upstream && k2Downstream);
    return d;
}

RectilinearShock rectilinear_shock(double hMinus, double R, double B1Plus, double B2, const PhysParams& p)
{
    require_positive_height(hMinus);
    if (!(R > 0.0) || !std::isfinite(R))
        throw Error(ErrorKind::InvalidRatio, "height ratio must be positive");
    if (R == 1.0)
        throw Error(ErrorKind::InvalidRatio, "height ratio R = 1 gives no shock");
    if (!(B1Plus > 0.0))
        throw Error(ErrorKind::InvalidConfig, "B1+ must be positive in the normalised orientation");

    RectilinearShock s;
    s.hMinus = hMinus;
    s.hPlus = R * hMinus;
    s.B1Plus = B1Plus;
    s.B2 = B2;
    s.v1Plus = std::sqrt(B1Plus * B1Plus + 0.5 * p.g * hMinus * (1.0 + 1.0 / R));
    s.v1Minus = R * s.v1Plus;
    s.B1Minus = R * B1Plus;
    return s;
}

LinearizedShockSetup linearized_setup(const RectilinearShock& s, const PhysParams& p)
{
    const double c = std::sqrt(p.g * s.hPlus);
    LinearizedShockSetup ls;
    ls.R = s.ratio();
    ls.M = s.v1Plus / c;
    ls.M1 = s.B1Plus / c;
    ls.M2 = s.B2 / c;
    ls.Mstar = std::sqrt(1.0 + ls.M1 * ls.M1);
    if (!(ls.M1 < ls.M && ls.M < ls.Mstar))
        throw Error(ErrorKind::LaxViolation, "Froude window M1 < M < M* fails; shock is not Lax-admissible");
    const double m2 = ls.M * ls.M;
    ls.beta = std::sqrt(ls.Mstar * ls.Mstar - m2);
    ls.d0 = (ls.Mstar * ls.Mstar + m2) / (2.0 * m2);
    ls.ell0 = ls.M1 * ls.M2;
    ls.a0 = -ls.beta * ls.beta * ls.R / (2.0 * m2);
    return ls;
}

} // namespace smhd
