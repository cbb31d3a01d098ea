#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "smhd/types.hpp"

namespace smhd::fv {

/// Uniform cell-centred grid on [x1min, x1max] x [x2min, x2max]; ny = 1 for 1D.
struct Grid {
    int nx = 8;
    int ny = 1;
    double x1min = 0.0, x1max = 1.0;
    double x2min = 0.0, x2max = 1.0;

    double dx() const { return (x1max - x1min) / nx; }
    double dy() const { return (x2max - x2min) / ny; }
    double xc(int i) const { return x1min + (i + 0.5) * dx(); }
    double yc(int j) const { return x2min + (j + 0.5) * dy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
    }
};

/// Cell values stored row-major in x1 (index j * nx + i).
struct Field {
    Grid grid;
    std::vector<Vector5d> cells;

    explicit Field(const Grid& g = {}) : grid(g), cells(g.size(), Vector5d::Zero()) {}

    Vector5d& at(int i, int j) { return cells[grid.index(i, j)]; }
    const Vector5d& at(int i, int j) const { return cells[grid.index(i, j)]; }
};

/// Pairwise (cascade) sum; the result does not depend on how a caller might
/// partition the cells.
double pairwise_sum(std::span<const double> values);
Vector5d pairwise_sum(std::span<const Vector5d> values);

} // namespace smhd::fv
