#include "smhd/fv/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "smhd/fv/hll.hpp"

namespace smhd::fv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct FrontLevels {
    bool enabled = false;
    double low = 0.0;
    double high = 0.0;
};

Vector5d blend(const State& minus, const State& plus, double fractionMinus, const PhysParams& p)
{
    return fractionMinus * conserved_from_primitive(minus, p) +
           (1.0 - fractionMinus) * conserved_from_primitive(plus, p);
}

double fraction_left_of(double front, double faceLo, double dx)
{
    return std::clamp((front - faceLo) / dx, 0.0, 1.0);
}

Vector5d vortex_state(const VortexInit& v, double x, double y)
{
    constexpr double k = 2.0 * std::numbers::pi;
    const double h = 1.0 + v.heightAmplitude * std::sin(k * (x + y));
    const double hb1 = v.fieldAmplitude * std::sin(k * x) * std::cos(k * y);
    const double hb2 = -v.fieldAmplitude * std::cos(k * x) * std::sin(k * y);
    const double v1 = v.flowAmplitude * std::sin(k * x) * std::cos(k * y);
    const double v2 = -v.flowAmplitude * std::cos(k * x) * std::sin(k * y);
    Vector5d q;
    q << h, h * v1, h * v2, hb1, hb2;
    return q;
}

struct Initialised {
    Field q;
    FrontLevels levels;
};

Initialised initial_field(const SimConfig& cfg, const RectilinearShock* shock, double amplitude,
                          double wavenumber, double position)
{
    const Grid& g = cfg.grid;
    Initialised out{Field(g), {}};
    const double dx = g.dx();

    if (cfg.customInitial) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out.q.at(i, j) =
                    conserved_from_primitive(State::from_vector(cfg.customInitial(g.xc(i), g.yc(j))), cfg.params);
        return out;
    }

    if (shock) {
        const State minus = shock->minus(), plus = shock->plus();
        for (int j = 0; j < g.ny; ++j) {
            const double front = position + amplitude * std::cos(wavenumber * g.yc(j));
            for (int i = 0; i < g.nx; ++i) {
                const double faceLo = g.x1min + i * dx;
                out.q.at(i, j) = blend(minus, plus, fraction_left_of(front, faceLo, dx), cfg.params);
            }
        }
        out.levels = {true, std::min(minus.h, plus.h), std::max(minus.h, plus.h)};
        return out;
    }

    if (const auto* r = std::get_if<RiemannInit>(&cfg.initial)) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double faceLo = g.x1min + i * dx;
                out.q.at(i, j) = blend(r->left, r->right, fraction_left_of(r->interface, faceLo, dx), cfg.params);
            }
        if (r->left.h != r->right.h)
            out.levels = {true, std::min(r->left.h, r->right.h), std::max(r->left.h, r->right.h)};
        return out;
    }

    if (const auto* v = std::get_if<VortexInit>(&cfg.initial)) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                out.q.at(i, j) = vortex_state(*v, g.xc(i), g.yc(j));
                require_positive_height(out.q.at(i, j)(0));
            }
        return out;
    }

    throw Error(ErrorKind::InvalidConfig, "initial data type is not supported by the nonlinear simulator");
}

Field to_primitive(const Field& q)
{
    Field u(q.grid);
    for (std::size_t c = 0; c < q.cells.size(); ++c)
        u.cells[c] = primitive_from_conserved(Conserved(q.cells[c])).as_vector();
    return u;
}

double total_energy(const Field& q, const PhysParams& p)
{
    std::vector<double> e(q.cells.size());
    for (std::size_t c = 0; c < q.cells.size(); ++c)
        e[c] = energy_density(primitive_from_conserved(Conserved(q.cells[c])), p);
    return pairwise_sum(e) * q.grid.dx() * q.grid.dy();
}

/// First crossing of `level` scanning row j from the left; NaN if none.
double row_crossing(const Field& u, int j, double level)
{
    const Grid& g = u.grid;
    for (int i = 0; i + 1 < g.nx; ++i) {
        const double a = u.at(i, j)(0) - level;
        const double b = u.at(i + 1, j)(0) - level;
        if (a == 0.0)
            return g.xc(i);
        if ((a < 0.0) != (b < 0.0) || b == 0.0)
            return g.xc(i) + a / (a - b) * g.dx();
    }
    return kNaN;
}

class Solver {
public:
    Solver(const SimConfig& cfg, Initialised init) : cfg_(cfg), q_(std::move(init.q)), levels_(init.levels)
    {
        validate(cfg_);
        snapshotTimes_ = cfg_.snapshotTimes;
        std::sort(snapshotTimes_.begin(), snapshotTimes_.end());
        check_positivity(0.0);
    }

    SimResult run()
    {
        SimResult res;
        res.hReferenceLow = levels_.low;
        res.hReferenceHigh = levels_.high;
        double t = 0.0;
        std::size_t nextSnap = 0;
        record(res, t);
        if (levels_.enabled)
            frontOrigin_ = res.series.front().frontPosition;
        res.series.front().frontAmp = cfg_.dimensions == 1 ? 0.0 : res.series.front().frontAmp;

        while (t < cfg_.endTime) {
            double target = cfg_.endTime;
            if (nextSnap < snapshotTimes_.size())
                target = std::min(target, snapshotTimes_[nextSnap]);
            double dt = stable_dt();
            bool landed = false;
            if (t + dt >= target) {
                dt = target - t;
                landed = true;
            }
            step(t, dt);
            t = landed ? target : t + dt;
            ++res.steps;

            while (nextSnap < snapshotTimes_.size() && snapshotTimes_[nextSnap] <= t) {
                res.snapshots.push_back(Snapshot{t, to_primitive(q_), {}});
                ++nextSnap;
            }
            if (res.steps % cfg_.sampleEvery == 0 || t >= cfg_.endTime)
                record(res, t);
        }
        res.final = Snapshot{t, to_primitive(q_), {}};
        return res;
    }

private:
    bool two_d() const { return cfg_.dimensions == 2; }

    double stable_dt()
    {
        const Grid& g = q_.grid;
        const double g0 = cfg_.params.g;
        double rate = 0.0;
        for (const auto& c : q_.cells) {
            const double h = c(0);
            const double v1 = c(1) / h, v2 = c(2) / h, b1 = c(3) / h, b2 = c(4) / h;
            double r = (std::abs(v1) + std::sqrt(b1 * b1 + g0 * h)) / g.dx();
            if (two_d())
                r += (std::abs(v2) + std::sqrt(b2 * b2 + g0 * h)) / g.dy();
            rate = std::max(rate, r);
        }
        if (cfg_.fixedDt) {
            if (*cfg_.fixedDt * rate > cfg_.cfl)
                throw Error(ErrorKind::CflViolation, "fixed time step exceeds the Courant limit (dt * rate = " +
                                                         std::to_string(*cfg_.fixedDt * rate) + ")");
            return *cfg_.fixedDt;
        }
        if (!(rate > 0.0) || !std::isfinite(rate))
            throw Error(ErrorKind::CflViolation, "no finite signal speed");
        return cfg_.cfl / rate;
    }

    void step(double t, double dt)
    {
        const Grid& g = q_.grid;
        const int nx = g.nx, ny = g.ny;
        const bool periodic = cfg_.x1Boundary == Boundary::Periodic;
        const PhysParams& p = cfg_.params;

        std::vector<State> u(q_.cells.size());
        for (std::size_t c = 0; c < u.size(); ++c)
            u[c] = primitive_from_conserved(Conserved(q_.cells[c]));

        const Vector2d e1(1.0, 0.0), e2(0.0, 1.0);
        const auto cell = [&](int i, int j) -> const State& { return u[g.index(i, j)]; };

        fx_.assign(static_cast<std::size_t>(nx + 1) * ny, Vector5d::Zero());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i <= nx; ++i) {
                const State& l = i == 0 ? cell(periodic ? nx - 1 : 0, j) : cell(i - 1, j);
                const State& r = i == nx ? cell(periodic ? 0 : nx - 1, j) : cell(i, j);
                fx_[static_cast<std::size_t>(j) * (nx + 1) + i] = hll_flux(l, r, e1, p);
            }
        if (two_d()) {
            fy_.assign(q_.cells.size(), Vector5d::Zero());
            for (int j = 0; j < ny; ++j)
                for (int i = 0; i < nx; ++i)
                    fy_[g.index(i, j)] = hll_flux(cell(i, (j + ny - 1) % ny), cell(i, j), e2, p);
        }

        std::vector<Vector5d> oldQ = q_.cells;
        const double ax = dt / g.dx(), ay = dt / g.dy();
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t row = static_cast<std::size_t>(j) * (nx + 1);
                const Vector5d dF = fx_[row + i + 1] - fx_[row + i];
                Vector5d& qc = q_.at(i, j);
                if (two_d()) {
                    const Vector5d dG = fy_[g.index(i, (j + 1) % ny)] - fy_[g.index(i, j)];
                    qc = qc - ax * dF - ay * dG;
                } else {
                    qc = qc - ax * dF;
                }
                if (cfg_.source)
                    qc += dt * cfg_.source(g.xc(i), g.yc(j), t);
            }

        if (!cfg_.source)
            track_conservation(oldQ, dt);
        check_positivity(t + dt);
    }

    void track_conservation(const std::vector<Vector5d>& oldQ, double dt)
    {
        const Grid& g = q_.grid;
        const int nx = g.nx, ny = g.ny;
        const double vol = g.dx() * g.dy();
        std::vector<Vector5d> net(ny), netAbs(ny);
        for (int j = 0; j < ny; ++j) {
            const std::size_t row = static_cast<std::size_t>(j) * (nx + 1);
            net[j] = fx_[row + nx] - fx_[row];
            netAbs[j] = fx_[row + nx].cwiseAbs() + fx_[row].cwiseAbs();
        }
        std::vector<Vector5d> absQ(oldQ.size());
        for (std::size_t c = 0; c < oldQ.size(); ++c)
            absQ[c] = oldQ[c].cwiseAbs();

        const Vector5d before = pairwise_sum(oldQ) * vol;
        const Vector5d after = pairwise_sum(q_.cells) * vol;
        const Vector5d outflow = dt * g.dy() * pairwise_sum(net);
        const Vector5d scale = pairwise_sum(absQ) * vol + dt * g.dy() * pairwise_sum(netAbs);
        double defect = 0.0;
        for (int k = 0; k < 5; ++k)
            if (scale(k) > 0.0)
                defect = std::max(defect, std::abs(after(k) - before(k) + outflow(k)) / scale(k));
        maxDefect_ = std::max(maxDefect_, defect);
    }

    void check_positivity(double t)
    {
        for (auto& c : q_.cells) {
            if (cfg_.positivityFloor && !(c(0) >= *cfg_.positivityFloor) && std::isfinite(c(0)))
                c(0) = *cfg_.positivityFloor;
            if (!(c(0) > 0.0) || !c.allFinite())
                throw Error(ErrorKind::PositivityLoss, "non-positive or non-finite height at t = " + std::to_string(t));
        }
    }

    void record(SimResult& res, double t)
    {
        const Grid& g = q_.grid;
        Sample s;
        s.t = t;
        const Vector5d integrals = pairwise_sum(q_.cells) * g.dx() * g.dy();
        for (int k = 0; k < 5; ++k)
            s.integrals[k] = integrals(k);
        s.hMin = std::numeric_limits<double>::infinity();
        s.hMax = -s.hMin;
        for (const auto& c : q_.cells) {
            s.hMin = std::min(s.hMin, c(0));
            s.hMax = std::max(s.hMax, c(0));
        }
        s.divNorm = divergence_norm(q_, cfg_.x1Boundary);
        s.energy = total_energy(q_, cfg_.params);
        s.conservationDefect = maxDefect_;
        if (levels_.enabled) {
            const FrontMeasure fm = measure_front(to_primitive(q_), levels_.low, levels_.high);
            s.frontPosition = fm.position;
            s.frontWidth = fm.width;
            s.frontAmp = cfg_.dimensions == 1 ? std::abs(fm.position - frontOrigin_) : fm.amplitude;
        } else {
            s.frontPosition = kNaN;
            s.frontAmp = kNaN;
            s.frontWidth = kNaN;
        }
        res.series.push_back(s);
    }

    SimConfig cfg_;
    Field q_;
    FrontLevels levels_;
    std::vector<double> snapshotTimes_;
    std::vector<Vector5d> fx_, fy_;
    double maxDefect_ = 0.0;
    double frontOrigin_ = 0.0;
};

void require_dimensions(const SimConfig& cfg, int d, const char* who)
{
    if (cfg.dimensions != d)
        throw Error(ErrorKind::InvalidConfig, std::string(who) + " needs dimensions = " + std::to_string(d));
}

SimResult run_nonlinear(const SimConfig& cfg)
{
    validate(cfg);
    if (const auto* s = std::get_if<ShockFrontInit>(&cfg.initial); s && !cfg.customInitial) {
        const RectilinearShock shock = rectilinear_shock(s->hMinus, s->R, s->B1Plus, s->B2, cfg.params);
        return Solver(cfg, initial_field(cfg, &shock, s->amplitude, s->wavenumber, s->position)).run();
    }
    return Solver(cfg, initial_field(cfg, nullptr, 0.0, 0.0, 0.0)).run();
}

} // namespace

double divergence_norm(const Field& q, Boundary x1Boundary)
{
    const Grid& g = q.grid;
    const int nx = g.nx, ny = g.ny;
    const int iEnd = x1Boundary == Boundary::Periodic ? nx : nx - 1;
    std::vector<double> sq;
    sq.reserve(static_cast<std::size_t>(iEnd) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < iEnd; ++i) {
            const double d1 = (q.at((i + 1) % nx, j)(3) - q.at(i, j)(3)) / g.dx();
            const double d2 = (q.at(i, (j + 1) % ny)(4) - q.at(i, j)(4)) / g.dy();
            const double d = d1 + d2;
            sq.push_back(d * d);
        }
    if (sq.empty())
        return 0.0;
    return std::sqrt(pairwise_sum(sq) / static_cast<double>(sq.size()));
}

FrontMeasure measure_front(const Field& u, double hLow, double hHigh)
{
    const Grid& g = u.grid;
    const double mid = 0.5 * (hLow + hHigh);
    const double l10 = hLow + 0.1 * (hHigh - hLow);
    const double l90 = hLow + 0.9 * (hHigh - hLow);
    const double domain = g.x1max - g.x1min;

    std::vector<double> pos;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double width = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        const double x = row_crossing(u, j, mid);
        const double a = row_crossing(u, j, l10);
        const double b = row_crossing(u, j, l90);
        width = std::max(width, std::isnan(a) || std::isnan(b) ? domain : std::abs(b - a));
        if (std::isnan(x))
            continue;
        pos.push_back(x);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    FrontMeasure m;
    m.width = width;
    if (pos.empty()) {
        m.position = kNaN;
        m.amplitude = kNaN;
        return m;
    }
    m.position = pairwise_sum(pos) / static_cast<double>(pos.size());
    m.amplitude = 0.5 * (hi - lo);
    return m;
}

SimResult simulate_1d(const SimConfig& cfg)
{
    require_dimensions(cfg, 1, "simulate_1d");
    return run_nonlinear(cfg);
}

SimResult simulate_2d(const SimConfig& cfg)
{
    require_dimensions(cfg, 2, "simulate_2d");
    return run_nonlinear(cfg);
}

SimResult perturbed_shock_experiment(const RectilinearShock& shock, double amplitude, double wavenumber,
                                     SimConfig cfg)
{
    if (!(std::abs(amplitude) <= 0.05 * shock.hMinus))
        throw Error(ErrorKind::InvalidConfig, "front amplitude must not exceed 0.05 hMinus");
    validate(cfg);
    cfg.customInitial = nullptr;
    return Solver(cfg, initial_field(cfg, &shock, amplitude, wavenumber, 0.0)).run();
}

SimResult run(const SimConfig& cfg)
{
    validate(cfg);
    if (const auto* l = std::get_if<LinearPulseInit>(&cfg.initial)) {
        const RectilinearShock shock = rectilinear_shock(l->hMinus, l->R, l->B1Plus, l->B2, cfg.params);
        return linear_halfplane_simulate(linearized_setup(shock, cfg.params), cfg);
    }
    return run_nonlinear(cfg);
}

} // namespace smhd::fv
