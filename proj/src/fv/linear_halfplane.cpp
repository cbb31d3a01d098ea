#include "smhd/fv/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smhd::fv {

namespace {

struct Split {
    Matrix5d plus;
    Matrix5d minus;
    double radius = 0.0;
};

Split split(const Matrix5d& a)
{
    Eigen::SelfAdjointEigenSolver<Matrix5d> es(a);
    const Vector5d lam = es.eigenvalues();
    const Matrix5d& q = es.eigenvectors();
    Split s;
    s.plus = q * lam.cwiseMax(0.0).asDiagonal() * q.transpose();
    s.minus = q * lam.cwiseMin(0.0).asDiagonal() * q.transpose();
    s.radius = lam.cwiseAbs().maxCoeff();
    return s;
}

/// Coefficients of the scaled system W_t + A1 W_1 + A2 W_2 = 0 with W = S U,
/// S = diag(1, M, M, 1, 1), U = (p, v, B).
struct LinearOperator {
    Vector5d s;    ///< diagonal of S
    Matrix5d a1;
    Matrix5d a2;
    Split s1, s2;
    Vector5d outgoing;                   ///< eigenvector of A1 with negative eigenvalue
    Eigen::Matrix<double, 5, 4> incoming; ///< eigenvectors with positive eigenvalue
    Eigen::Matrix<double, 4, 5> bc;       ///< boundary relations in W variables
    Eigen::PartialPivLU<Eigen::Matrix4d> lu;
    double phiSpeed = 0.0;   ///< phi_t + phiSpeed phi_2 = phiSource p
    double phiSource = 0.0;
    double phiSlopeGain = 0.0; ///< v2 = phiSlopeGain * phi_2 at x1 = 0
};

LinearOperator build_operator(const LinearizedShockSetup& st)
{
    LinearOperator op;
    const double M = st.M, M1 = st.M1, M2 = st.M2, R = st.R;
    Matrix5d a0 = Vector5d(1.0, M * M, M * M, 1.0, 1.0).asDiagonal();
    Matrix5d k1 = a0, k2 = Matrix5d::Zero();
    k1(0, 1) = k1(1, 0) = 1.0;
    k2(0, 2) = k2(2, 0) = 1.0;
    for (int k = 0; k < 2; ++k) {
        k1(1 + k, 3 + k) = k1(3 + k, 1 + k) = -M1;
        k2(1 + k, 3 + k) = k2(3 + k, 1 + k) = -M2;
    }
    op.s = Vector5d(1.0, M, M, 1.0, 1.0);
    const Vector5d sInv = op.s.cwiseInverse();
    op.a1 = sInv.asDiagonal() * k1 * sInv.asDiagonal();
    op.a2 = sInv.asDiagonal() * k2 * sInv.asDiagonal();
    op.s1 = split(op.a1);
    op.s2 = split(op.a2);

    Eigen::SelfAdjointEigenSolver<Matrix5d> es(op.a1);
    const Vector5d lam = es.eigenvalues();
    int nOut = 0, nIn = 0;
    for (int k = 0; k < 5; ++k) {
        if (lam(k) < 0.0) {
            op.outgoing = es.eigenvectors().col(k);
            ++nOut;
        } else if (lam(k) > 0.0 && nIn < 4) {
            op.incoming.col(nIn++) = es.eigenvectors().col(k);
        }
    }
    if (nOut != 1 || nIn != 4)
        throw Error(ErrorKind::LaxViolation, "boundary x1 = 0 must have one outgoing and four incoming characteristics");

    Eigen::Matrix<double, 4, 5> bu = Eigen::Matrix<double, 4, 5>::Zero();
    bu(0, 0) = st.d0;
    bu(0, 1) = 1.0;
    bu(0, 2) = -st.ell0 / (M * M * R);
    bu(1, 2) = 1.0;
    bu(2, 0) = M1;
    bu(2, 2) = -M2 / R;
    bu(2, 3) = 1.0;
    bu(3, 2) = -M1;
    bu(3, 4) = 1.0;
    op.bc = bu * sInv.asDiagonal();
    const Eigen::Matrix4d m = op.bc * op.incoming;
    if (!(std::abs(m.determinant()) > 1e-12))
        throw Error(ErrorKind::LaxViolation, "boundary relations do not determine the incoming characteristics");
    op.lu = m.partialPivLu();

    op.phiSpeed = -st.ell0 / (M * M);
    op.phiSource = -st.a0 / (1.0 - R);
    op.phiSlopeGain = -(1.0 - R);
    return op;
}

class LinearSolver {
public:
    LinearSolver(const LinearizedShockSetup& setup, const SimConfig& cfg)
        : cfg_(cfg), setup_(setup), op_(build_operator(setup)), w_(cfg.grid), phi_(cfg.grid.ny, 0.0),
          wb_(cfg.grid.ny, Vector5d::Zero())
    {
        validate(cfg_);
        if (cfg_.dimensions != 2)
            throw Error(ErrorKind::InvalidConfig, "the linearised half-plane solver is two-dimensional");
        init();
        const double c = constraint_scale();
        const double r = constraint_residual();
        if (r > cfg_.constraintTolerance * c)
            throw Error(ErrorKind::ConstraintViolation,
                        "initial data violate div B + calB . grad p = 0 (residual " + std::to_string(r) + ")");
    }

    SimResult run()
    {
        SimResult res;
        std::vector<double> snaps = cfg_.snapshotTimes;
        std::sort(snaps.begin(), snaps.end());
        std::size_t next = 0;
        double t = 0.0;
        boundary_states();
        record(res, t);
        const double dt0 = stable_dt();
        while (t < cfg_.endTime) {
            double target = cfg_.endTime;
            if (next < snaps.size())
                target = std::min(target, snaps[next]);
            double dt = dt0;
            bool landed = false;
            if (t + dt >= target) {
                dt = target - t;
                landed = true;
            }
            step(dt);
            t = landed ? target : t + dt;
            ++res.steps;
            boundary_states();
            while (next < snaps.size() && snaps[next] <= t) {
                res.snapshots.push_back(snapshot(t));
                ++next;
            }
            if (res.steps % cfg_.sampleEvery == 0 || t >= cfg_.endTime)
                record(res, t);
        }
        res.final = snapshot(t);
        return res;
    }

private:
    const Grid& grid() const { return w_.grid; }

    void init()
    {
        const Grid& g = grid();
        const auto* pulse = std::get_if<LinearPulseInit>(&cfg_.initial);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                Vector5d u = Vector5d::Zero();
                if (cfg_.customInitial) {
                    u = cfg_.customInitial(g.xc(i), g.yc(j));
                } else if (pulse) {
                    const double d1 = g.xc(i) - pulse->center1, d2 = g.yc(j) - pulse->center2;
                    const double r2 = (d1 * d1 + d2 * d2) / (pulse->radius * pulse->radius);
                    if (r2 < 1.0) {
                        const double s = 1.0 - r2;
                        u(0) = pulse->amplitude * s * s * s;
                        if (pulse->balanced) {
                            u(3) = -setup_.M1 * u(0);
                            u(4) = -setup_.M2 * u(0);
                        }
                    }
                }
                w_.at(i, j) = op_.s.cwiseProduct(u);
            }
    }

    Vector5d unscaled(const Vector5d& w) const { return w.cwiseQuotient(op_.s); }

    double stable_dt() const
    {
        const Grid& g = grid();
        const double rate = op_.s1.radius / g.dx() + op_.s2.radius / g.dy() + std::abs(op_.phiSpeed) / g.dy();
        if (cfg_.fixedDt) {
            if (*cfg_.fixedDt * rate > cfg_.cfl)
                throw Error(ErrorKind::CflViolation, "fixed time step exceeds the Courant limit");
            return *cfg_.fixedDt;
        }
        return cfg_.cfl / rate;
    }

    double phi_slope(int j) const
    {
        const int ny = grid().ny;
        return (phi_[(j + 1) % ny] - phi_[(j + ny - 1) % ny]) / (2.0 * grid().dy());
    }

    /// Boundary state at x1 = 0: outgoing amplitude from cell 0, incoming ones from the relations.
    void boundary_states()
    {
        for (int j = 0; j < grid().ny; ++j) {
            const double out = op_.outgoing.dot(w_.at(0, j));
            Eigen::Vector4d rhs = Eigen::Vector4d::Zero();
            rhs(1) = op_.phiSlopeGain * phi_slope(j);
            rhs -= op_.bc * op_.outgoing * out;
            const Eigen::Vector4d in = op_.lu.solve(rhs);
            wb_[j] = op_.outgoing * out + op_.incoming * in;
        }
    }

    void step(double dt)
    {
        const Grid& g = grid();
        const int nx = g.nx, ny = g.ny;
        std::vector<Vector5d> fx(static_cast<std::size_t>(nx + 1) * ny);
        for (int j = 0; j < ny; ++j) {
            const std::size_t row = static_cast<std::size_t>(j) * (nx + 1);
            fx[row] = op_.a1 * wb_[j];
            for (int i = 1; i < nx; ++i)
                fx[row + i] = op_.s1.plus * w_.at(i - 1, j) + op_.s1.minus * w_.at(i, j);
            fx[row + nx] = op_.s1.plus * w_.at(nx - 1, j);
        }
        std::vector<Vector5d> fy(g.size());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                fy[g.index(i, j)] = op_.s2.plus * w_.at(i, (j + ny - 1) % ny) + op_.s2.minus * w_.at(i, j);

        std::vector<double> phiNew(phi_.size());
        for (int j = 0; j < ny; ++j) {
            const double c = op_.phiSpeed;
            const double d = c > 0.0 ? phi_[j] - phi_[(j + ny - 1) % ny] : phi_[(j + 1) % ny] - phi_[j];
            phiNew[j] = phi_[j] - dt * c * d / g.dy() + dt * op_.phiSource * wb_[j](0);
        }
        phi_ = std::move(phiNew);

        const double ax = dt / g.dx(), ay = dt / g.dy();
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t row = static_cast<std::size_t>(j) * (nx + 1);
                w_.at(i, j) -= ax * (fx[row + i + 1] - fx[row + i]) +
                               ay * (fy[g.index(i, (j + 1) % ny)] - fy[g.index(i, j)]);
            }
        for (const auto& c : w_.cells)
            if (!c.allFinite())
                throw Error(ErrorKind::CflViolation, "linearised solution became non-finite");
    }

    /// Central-difference residual of div B + calB . grad p on interior cells (RMS),
    /// and the RMS magnitudes of its two parts.
    struct ConstraintParts {
        double residual = 0.0, divB = 0.0, advected = 0.0;
    };

    ConstraintParts constraint_parts() const
    {
        const Grid& g = grid();
        const int nx = g.nx, ny = g.ny;
        std::vector<double> r2, d2, a2;
        for (int j = 0; j < ny; ++j)
            for (int i = 1; i + 1 < nx; ++i) {
                const Vector5d e = unscaled(w_.at(i + 1, j)), wst = unscaled(w_.at(i - 1, j));
                const Vector5d n = unscaled(w_.at(i, (j + 1) % ny)), s = unscaled(w_.at(i, (j + ny - 1) % ny));
                const double div = (e(3) - wst(3)) / (2.0 * g.dx()) + (n(4) - s(4)) / (2.0 * g.dy());
                const double adv = setup_.M1 * (e(0) - wst(0)) / (2.0 * g.dx()) +
                                   setup_.M2 * (n(0) - s(0)) / (2.0 * g.dy());
                r2.push_back((div + adv) * (div + adv));
                d2.push_back(div * div);
                a2.push_back(adv * adv);
            }
        const double n = std::max<double>(1.0, static_cast<double>(r2.size()));
        return {std::sqrt(pairwise_sum(r2) / n), std::sqrt(pairwise_sum(d2) / n), std::sqrt(pairwise_sum(a2) / n)};
    }

    double constraint_residual() const { return constraint_parts().residual; }
    double constraint_scale() const
    {
        const auto c = constraint_parts();
        return c.divB + c.advected;
    }

    LinearNorms norms(double t) const
    {
        const Grid& g = grid();
        const int nx = g.nx, ny = g.ny;
        const double vol = g.dx() * g.dy();
        std::vector<double> l2(g.size()), grad(g.size(), 0.0), energy(g.size());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const Vector5d u = unscaled(w_.at(i, j));
                const std::size_t c = g.index(i, j);
                l2[c] = u.squaredNorm();
                energy[c] = w_.at(i, j).squaredNorm();
                if (i + 1 < nx)
                    grad[c] += ((unscaled(w_.at(i + 1, j)) - u) / g.dx()).squaredNorm();
                grad[c] += ((unscaled(w_.at(i, (j + 1) % ny)) - u) / g.dy()).squaredNorm();
            }
        std::vector<double> tr(ny), ph(ny);
        for (int j = 0; j < ny; ++j) {
            tr[j] = unscaled(wb_[j]).squaredNorm();
            ph[j] = phi_[j] * phi_[j];
        }
        LinearNorms n;
        n.t = t;
        const double l2sq = pairwise_sum(l2) * vol;
        n.l2 = std::sqrt(l2sq);
        n.h1Proxy = std::sqrt(l2sq + pairwise_sum(grad) * vol);
        n.trace = std::sqrt(pairwise_sum(tr) * g.dy());
        n.phi = std::sqrt(pairwise_sum(ph) * g.dy());
        n.energy = pairwise_sum(energy) * vol;
        n.constraint = constraint_residual();
        return n;
    }

    void record(SimResult& res, double t) const
    {
        const LinearNorms n = norms(t);
        res.linear.push_back(n);
        const Grid& g = grid();
        std::vector<Vector5d> u(w_.cells.size());
        for (std::size_t c = 0; c < u.size(); ++c)
            u[c] = unscaled(w_.cells[c]);
        const Vector5d integrals = pairwise_sum(u) * g.dx() * g.dy();
        Sample s;
        s.t = t;
        for (int k = 0; k < 5; ++k)
            s.integrals[k] = integrals(k);
        s.hMin = std::numeric_limits<double>::quiet_NaN();
        s.hMax = std::numeric_limits<double>::quiet_NaN();
        s.divNorm = n.constraint;
        s.frontPosition = std::numeric_limits<double>::quiet_NaN();
        s.frontAmp = n.phi;
        s.frontWidth = std::numeric_limits<double>::quiet_NaN();
        s.energy = n.energy;
        res.series.push_back(s);
    }

    Snapshot snapshot(double t) const
    {
        Snapshot s{t, Field(grid()), phi_};
        for (std::size_t c = 0; c < w_.cells.size(); ++c)
            s.values.cells[c] = unscaled(w_.cells[c]);
        return s;
    }

    SimConfig cfg_;
    LinearizedShockSetup setup_;
    LinearOperator op_;
    Field w_;
    std::vector<double> phi_;
    std::vector<Vector5d> wb_;
};

} // namespace

SimResult linear_halfplane_simulate(const LinearizedShockSetup& setup, const SimConfig& cfg)
{
    return LinearSolver(setup, cfg).run();
}

} // namespace smhd::fv
