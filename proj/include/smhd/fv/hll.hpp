#pragma once

#include <utility>

#include "smhd/core.hpp"

namespace smhd::fv {

/// Slowest and fastest signal speeds v.n -+ sqrt((B.n)^2 + g h |n|^2) along n.
std::pair<double, double> fast_speeds(const State& u, const Vector2d& n, const PhysParams& p);

/// Two-wave HLL flux across a face with unit normal n; Davis bounds from the
/// extreme characteristic speeds of both states.
Vector5d hll_flux(const State& left, const State& right, const Vector2d& unitNormal, const PhysParams& p);

} // namespace smhd::fv
