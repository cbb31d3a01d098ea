#pragma once

#include <ostream>
#include <string>

#include "smhd/fv/simulate.hpp"

namespace smhd::fv {

/// %.17g; NaN is written as "nan".
std::string format_number(double x);

/// Header t,mass,momX,momY,fluxBx,fluxBy,divNorm,frontAmp,energy; LF endings.
void write_series_csv(std::ostream& os, const SimResult& r);

/// Header x1,x2 followed by the five field names; one line per cell, x1 fastest.
void write_snapshot_csv(std::ostream& os, const Snapshot& s, bool linear = false);

/// Header t,l2,h1Proxy,trace,phi,energy,constraint.
void write_linear_norms_csv(std::ostream& os, const SimResult& r);

} // namespace smhd::fv
