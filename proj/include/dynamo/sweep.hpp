#pragma once

#include <optional>
#include <vector>

#include "dynamo/grid.hpp"
#include "dynamo/pencil.hpp"

namespace dynamo {

struct SweepCell {
    int l = 0;
    double x0 = 0.0;
    std::optional<PencilSolution> solution;
    int n_roots = 0;
    bool imaginary_straddle = false;
};

// Inclusive range helper for CLI-style "min:max:step" sweeps.
std::vector<double> linear_range(double min, double max, double step);

// One row per (l, x0), ordered by l then x0 ascending.  Every cell is an
// independent pure solve; when a cell yields several candidate bound states,
// a deterministic post-pass keeps the one continuously connected to the
// previous x0 in the same l-row (first cell: deepest state).
std::vector<SweepCell> sweep_serial(const std::vector<int>& ls,
                                    const std::vector<double>& x0s, const Grid& grid,
                                    const SolveOptions& opts = {});

// Same rows, cells dispatched over an OpenMP worker pool (jobs <= 0 means the
// runtime default).  Output is byte-identical to sweep_serial.
std::vector<SweepCell> sweep(const std::vector<int>& ls, const std::vector<double>& x0s,
                             const Grid& grid, const SolveOptions& opts = {},
                             int jobs = 0);

}  // namespace dynamo
