#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynamo/dirac.hpp"
#include "dynamo/perturbation.hpp"
#include "dynamo/sweep.hpp"

namespace dynamo {

// 12 significant digits, scientific, '.' separator; the CSV contract.
std::string fmt_sci(double v);

struct ReducedRow {
    int l = 0;
    double x0 = 0.0;
    std::optional<double> lambda;
};

// Header `l,x0,lambda,epsilon,branch,localized,residual`; none-cells leave
// lambda/epsilon/branch/residual empty with localized=false.  LF endings.
std::string sweep_csv(const std::vector<SweepCell>& cells);

// Header `l,x0,lambda`.
std::string reduced_csv(const std::vector<ReducedRow>& rows);

// Header `delta,epsilon_pencil,epsilon_linear,deviation`.
std::string perturb_csv(const std::vector<SlopeRow>& rows);

// Header `l,x0,nodes,regular,dirac_residual`.
std::string dirac_csv(int l, const std::vector<RegularityRow>& rows);

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Minimal static SVG: axes, ticks, one polyline per series, legend.  Series
// with gaps should be pre-split by the caller.
std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<Series>& series);

// Series builders for the three figure analogues.
std::vector<Series> lambda_series(const std::vector<SweepCell>& cells);
std::vector<Series> epsilon_series(const std::vector<SweepCell>& cells);
std::vector<Series> reduced_series(const std::vector<ReducedRow>& rows);

}  // namespace dynamo
