#include "dynamo/sweep.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynamo/errors.hpp"

namespace dynamo {

std::vector<double> linear_range(double min, double max, double step) {
    if (!(step > 0.0)) throw invalid_parameter("linear_range: step must be positive");
    std::vector<double> xs;
    const int count = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    xs.reserve(std::max(count, 0));
    for (int k = 0; k < count; ++k) xs.push_back(min + k * step);
    return xs;
}

namespace {

struct CellIndex {
    int l;
    double x0;
};

std::vector<CellIndex> make_cells(std::vector<int> ls, std::vector<double> x0s) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(x0s.begin(), x0s.end());
    std::vector<CellIndex> cells;
    cells.reserve(ls.size() * x0s.size());
    for (int l : ls)
        for (double x0 : x0s) cells.push_back({l, x0});
    return cells;
}

// Cell bookkeeping; the solution slot is filled by the continuity pass.
SweepCell finish_cell(const CellIndex& ci, const PencilResult& r) {
    SweepCell cell;
    cell.l = ci.l;
    cell.x0 = ci.x0;
    cell.n_roots = static_cast<int>(r.roots_b.size());
    cell.imaginary_straddle = r.imaginary_straddle;
    return cell;
}

// Continuity selection: within each l-row (ascending x0), prefer the
// candidate whose epsilon is closest to the previously selected one.
void select_by_continuity(std::vector<SweepCell>& cells,
                          const std::vector<std::vector<PencilSolution>>& candidates) {
    size_t row_start = 0;
    while (row_start < cells.size()) {
        size_t row_end = row_start;
        while (row_end < cells.size() && cells[row_end].l == cells[row_start].l) ++row_end;
        std::optional<double> prev_eps;
        for (size_t k = row_start; k < row_end; ++k) {
            const auto& cand = candidates[k];
            if (cand.empty()) {
                cells[k].solution.reset();
                continue;
            }
            size_t pick = 0;
            if (prev_eps && cand.size() > 1) {
                double best = std::abs(cand[0].epsilon - *prev_eps);
                for (size_t j = 1; j < cand.size(); ++j) {
                    const double d = std::abs(cand[j].epsilon - *prev_eps);
                    if (d < best) {
                        best = d;
                        pick = j;
                    }
                }
            } else if (cand.size() > 1) {
                double best = cand[0].lambda;
                for (size_t j = 1; j < cand.size(); ++j)
                    if (cand[j].lambda > best) {
                        best = cand[j].lambda;
                        pick = j;
                    }
            }
            cells[k].solution = cand[pick];
            prev_eps = cand[pick].epsilon;
        }
        row_start = row_end;
    }
}

std::vector<SweepCell> run_sweep(const std::vector<int>& ls, const std::vector<double>& x0s,
                                 const Grid& grid, const SolveOptions& opts, bool parallel,
                                 int jobs) {
    const std::vector<CellIndex> cells = make_cells(ls, x0s);
    const int ncells = static_cast<int>(cells.size());
    std::vector<SweepCell> out(ncells);
    std::vector<std::vector<PencilSolution>> candidates(ncells);

#ifdef _OPENMP
    if (parallel) {
        if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < ncells; ++k) {
            PencilResult r = solve_pencil(cells[k].x0, cells[k].l, grid, opts);
            out[k] = finish_cell(cells[k], r);
            candidates[k] = std::move(r.candidates);
        }
    } else
#else
    (void)parallel;
    (void)jobs;
#endif
    {
        for (int k = 0; k < ncells; ++k) {
            PencilResult r = solve_pencil(cells[k].x0, cells[k].l, grid, opts);
            out[k] = finish_cell(cells[k], r);
            candidates[k] = std::move(r.candidates);
        }
    }

    select_by_continuity(out, candidates);
    return out;
}

}  // namespace

std::vector<SweepCell> sweep_serial(const std::vector<int>& ls,
                                    const std::vector<double>& x0s, const Grid& grid,
                                    const SolveOptions& opts) {
    return run_sweep(ls, x0s, grid, opts, /*parallel=*/false, 0);
}

std::vector<SweepCell> sweep(const std::vector<int>& ls, const std::vector<double>& x0s,
                             const Grid& grid, const SolveOptions& opts, int jobs) {
    return run_sweep(ls, x0s, grid, opts, /*parallel=*/true, jobs);
}

}  // namespace dynamo
