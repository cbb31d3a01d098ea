#include "smhd/symmetrization.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace smhd {

namespace {

Matrix5d secondary_spatial(const State& u, int a, double lambda, double g)
{
    const double va = u.v(a), ba = u.B(a);
    const double flow = va + lambda * ba;
    const double field = ba + lambda * va;
    Matrix5d m = Matrix5d::Zero();
    m(0, 0) = g * (va - lambda * ba) / u.h;
    m(0, 1 + a) = m(1 + a, 0) = g;
    m(0, 3 + a) = m(3 + a, 0) = -g * lambda;
    for (int k = 0; k < 2; ++k) {
        m(1 + k, 1 + k) = flow;
        m(3 + k, 3 + k) = flow;
        m(1 + k, 3 + k) = m(3 + k, 1 + k) = -field;
    }
    return m;
}

double sign_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

} // namespace

SecondaryMatrices secondary_matrices(const State& u, double lambda, const PhysParams& p)
{
    require_positive_height(u.h);
    SecondaryMatrices s;
    s.B0 = Matrix5d::Identity();
    s.B0(0, 0) = p.g / u.h;
    for (int k = 0; k < 2; ++k)
        s.B0(1 + k, 3 + k) = s.B0(3 + k, 1 + k) = -lambda;
    s.B1 = secondary_spatial(u, 0, lambda, p.g);
    s.B2 = secondary_spatial(u, 1, lambda, p.g);
    return s;
}

bool secondary_hyperbolic(const State& u, double lambda)
{
    return u.h > 0.0 && std::abs(lambda) < 1.0;
}

ResidualDecomposition secondary_residual_decomposition(const State& u, const Vector5d& dt, const Vector5d& dx1,
                                                       const Vector5d& dx2, double lambda, const PhysParams& p)
{
    const auto a = quasilinear_matrices(u, p);
    const auto b = secondary_matrices(u, lambda, p);

    ResidualDecomposition out;
    out.primaryResidual = a.A0 * dt + a.A1 * dx1 + a.A2 * dx2;
    out.secondaryResidual = b.B0 * dt + b.B1 * dx1 + b.B2 * dx2;
    // (B . grad) h + h div B
    out.divergenceTerm = u.B(0) * dx1(0) + u.B(1) * dx2(0) + u.h * (dx1(3) + dx2(4));

    Vector5d combined;
    const auto& pr = out.primaryResidual;
    combined(0) = pr(0) - p.g * lambda / u.h * out.divergenceTerm;
    combined.segment<2>(1) = pr.segment<2>(1) - lambda * pr.segment<2>(3);
    combined.segment<2>(3) = pr.segment<2>(3) - lambda * pr.segment<2>(1);
    out.reconstructionError = (out.secondaryResidual - combined).cwiseAbs().maxCoeff();

    const Vector5d primaryTerms = a.A0.cwiseAbs() * dt.cwiseAbs() + a.A1.cwiseAbs() * dx1.cwiseAbs() +
                                  a.A2.cwiseAbs() * dx2.cwiseAbs();
    const Vector5d secondaryTerms = b.B0.cwiseAbs() * dt.cwiseAbs() + b.B1.cwiseAbs() * dx1.cwiseAbs() +
                                    b.B2.cwiseAbs() * dx2.cwiseAbs();
    const double divTerms = std::abs(u.B(0) * dx1(0)) + std::abs(u.B(1) * dx2(0)) +
                            std::abs(u.h) * (std::abs(dx1(3)) + std::abs(dx2(4)));
    out.scale = std::max({1.0, (1.0 + std::abs(lambda)) * primaryTerms.maxCoeff(), secondaryTerms.maxCoeff(),
                          p.g * std::abs(lambda) / u.h * divTerms});
    return out;
}

SymmetrizerChoice lambda_for_cvs(const State& hatPlus, const State& hatMinus)
{
    const double b2p = hatPlus.B(1), b2m = hatMinus.B(1);
    const double denom = std::abs(b2p) + std::abs(b2m);
    if (denom == 0.0)
        throw Error(ErrorKind::ZeroTangentialField, "B2 vanishes on both sides of the sheet");
    const double jump = hatPlus.v(1) - hatMinus.v(1);
    const double k = std::abs(jump) / denom;
    const double s = sign_or_one(jump);

    // lambda+ B2+ - lambda- B2- = k s (|B2+| + |B2-|) = [v2]
    SymmetrizerChoice c;
    c.lambdaPlus = k * s * sign_or_one(b2p);
    c.lambdaMinus = -k * s * sign_or_one(b2m);
    c.hyperbolicPlus = secondary_hyperbolic(hatPlus, c.lambdaPlus);
    c.hyperbolicMinus = secondary_hyperbolic(hatMinus, c.lambdaMinus);
    return c;
}

std::string to_string(CvsTag tag)
{
    switch (tag) {
    case CvsTag::SufficientlyStable: return "SufficientlyStable";
    case CvsTag::NscStable: return "NscStable";
    case CvsTag::NscUnstable: return "NscUnstable";
    case CvsTag::ExceptionalPoint: return "ExceptionalPoint";
    case CvsTag::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

namespace {

void require_equal_heights(const State& hatPlus, const State& hatMinus, double tol)
{
    require_positive_height(hatPlus.h);
    require_positive_height(hatMinus.h);
    if (std::abs(hatPlus.h - hatMinus.h) > tol * std::max({1.0, hatPlus.h, hatMinus.h}))
        throw Error(ErrorKind::HeightMismatch, "a current-vortex sheet needs [h] = 0");
}

} // namespace

CvsVerdict cvs_sufficient_verdict(const State& hatPlus, const State& hatMinus, double epsilon, double tol)
{
    require_equal_heights(hatPlus, hatMinus, tol);
    const double b2p = std::abs(hatPlus.B(1)), b2m = std::abs(hatMinus.B(1));
    if (b2p == 0.0 && b2m == 0.0)
        throw Error(ErrorKind::ZeroTangentialField, "B2 vanishes on both sides of the sheet");
    const double jump = std::abs(hatPlus.v(1) - hatMinus.v(1));
    const double gap = b2p + b2m - jump;

    CvsVerdict v;
    v.margin = std::abs(gap);
    v.tag = (gap >= epsilon && std::max(b2p, b2m) >= epsilon) ? CvsTag::SufficientlyStable : CvsTag::Inconclusive;
    return v;
}

CvsVerdict cvs_nsc_verdict(const State& hatPlus, const State& hatMinus, const PhysParams& p, double tol)
{
    require_equal_heights(hatPlus, hatMinus, tol);
    const double b2p = hatPlus.B(1), b2m = hatMinus.B(1);
    if (std::abs(b2p + b2m) > tol * std::max(1.0, std::abs(b2p)))
        throw Error(ErrorKind::NotSymmetricCase, "condition is only available for B2+ = -B2-");

    const double J = std::abs(hatPlus.v(1) - hatMinus.v(1));
    const double b = std::abs(b2p);
    const double gh = p.g * hatPlus.h;
    const double lower = 2.0 * b;
    const double upper = 2.0 * std::sqrt(b * b + 2.0 * gh);
    const std::array<double, 4> exceptional = {
        b,
        std::sqrt(b * b + gh) - b,
        std::sqrt(b * b + gh),
        b * std::sqrt((b * b + 2.0 * gh) / (b * b + gh)),
    };
    auto near = [&](double target) { return std::abs(J - target) <= tol * std::max(1.0, target); };

    CvsVerdict v;
    v.margin = std::min(std::abs(J - lower), std::abs(J - upper));
    if (near(lower) || near(upper)) {
        v.tag = CvsTag::ExceptionalPoint;
        v.exceptionalIndex = near(lower) ? 5 : 6;
        v.margin = 0.0;
        return v;
    }
    if (J > lower && J < upper) {
        v.tag = CvsTag::NscUnstable;
        return v;
    }
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        if (near(exceptional[i])) {
            v.tag = CvsTag::ExceptionalPoint;
            v.exceptionalIndex = static_cast<int>(i) + 1;
            v.margin = std::abs(J - exceptional[i]);
            return v;
        }
    }
    v.tag = CvsTag::NscStable;
    for (double e : exceptional)
        v.margin = std::min(v.margin, std::abs(J - e));
    return v;
}

namespace {

void check_linearized_constraints(const State& hatPlus, const State& hatMinus, const Vector5d& tp,
                                  const Vector5d& tm, double slope, double tol)
{
    const double scale = std::max({1.0, tp.cwiseAbs().maxCoeff(), tm.cwiseAbs().maxCoeff(), std::abs(slope)});
    const double frontPlus = tp(1) - hatPlus.v(1) * slope;
    const double frontMinus = tm(1) - hatMinus.v(1) * slope;
    if (std::abs(frontPlus - frontMinus) > tol * scale || std::abs(tp(0) - tm(0)) > tol * scale)
        throw Error(ErrorKind::ConstraintViolation, "perturbation violates dt phi = v1 - v2_hat d2 phi or [h] = 0");
    if (std::abs(tp(3) - hatPlus.B(1) * slope) > tol * scale || std::abs(tm(3) - hatMinus.B(1) * slope) > tol * scale)
        throw Error(ErrorKind::ConstraintViolation, "perturbation violates B1 = B2_hat d2 phi");
}

} // namespace

double boundary_energy_term(const State& hatPlus, const State& hatMinus, const SymmetrizerChoice& choice,
                            const Vector5d& tracePlus, const Vector5d& traceMinus, double slopePerturbation,
                            const PhysParams& p, double tol)
{
    check_linearized_constraints(hatPlus, hatMinus, tracePlus, traceMinus, slopePerturbation, tol);
    const Matrix5d bp = secondary_matrices(hatPlus, choice.lambdaPlus, p).B1;
    const Matrix5d bm = secondary_matrices(hatMinus, choice.lambdaMinus, p).B1;
    return tracePlus.dot(bp * tracePlus) - traceMinus.dot(bm * traceMinus);
}

double boundary_energy_reduced(const State& hatPlus, const State& hatMinus, const SymmetrizerChoice& choice,
                               const Vector5d& tracePlus, double slopePerturbation, const PhysParams& p)
{
    const double jump = (hatPlus.v(1) - choice.lambdaPlus * hatPlus.B(1)) -
                        (hatMinus.v(1) - choice.lambdaMinus * hatMinus.B(1));
    return 2.0 * p.g * tracePlus(0) * jump * slopePerturbation;
}

} // namespace smhd
