#include "smhd/fv/io.hpp"

#include <cmath>
#include <cstdio>

namespace smhd::fv {

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_series_csv(std::ostream& os, const SimResult& r)
{
    os << "t,mass,momX,momY,fluxBx,fluxBy,divNorm,frontAmp,energy\n";
    for (const auto& s : r.series) {
        os << format_number(s.t);
        for (double v : s.integrals)
            os << ',' << format_number(v);
        os << ',' << format_number(s.divNorm) << ',' << format_number(s.frontAmp) << ',' << format_number(s.energy)
           << '\n';
    }
}

void write_snapshot_csv(std::ostream& os, const Snapshot& s, bool linear)
{
    os << (linear ? "x1,x2,p,v1,v2,B1,B2\n" : "x1,x2,h,v1,v2,B1,B2\n");
    const Grid& g = s.values.grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            os << format_number(g.xc(i)) << ',' << format_number(g.yc(j));
            const Vector5d& v = s.values.at(i, j);
            for (int k = 0; k < 5; ++k)
                os << ',' << format_number(v(k));
            os << '\n';
        }
}

void write_linear_norms_csv(std::ostream& os, const SimResult& r)
{
    os << "t,l2,h1Proxy,trace,phi,energy,constraint\n";
    for (const auto& n : r.linear)
        os << format_number(n.t) << ',' << format_number(n.l2) << ',' << format_number(n.h1Proxy) << ','
           << format_number(n.trace) << ',' << format_number(n.phi) << ',' << format_number(n.energy) << ','
           << format_number(n.constraint) << '\n';
}

} // namespace smhd::fv
