#pragma once

#include <optional>
#include <vector>

#include "dynamo/grid.hpp"
#include "dynamo/pencil.hpp"
#include "dynamo/susy.hpp"

namespace dynamo {

// First-order 2x2 system gamma d/dx + V_D with gamma = (0,1;-1,0) and
// V_D = (-alpha, w; w, 0) on the F+ branch (+alpha on F-).  Valid as a
// selfadjoint problem only while the factorization seed is nodeless.
struct DiracSystem {
    double x0 = 0.0;
    int l = 0;
    Grid grid;
    FactorizationSeed seed;
    bool regular = false;
    std::vector<double> w;  // superpotential u'/u, filled only when regular
};

DiracSystem build_dirac_system(double x0, int l, const Grid& grid);

struct DiracLift {
    std::vector<double> psi1, psi2;
};

// psi1 = F, psi2 = (-psi1' + w psi1)/epsilon.  Requires a regular system and
// |epsilon| > 1e-6.
DiracLift lift_to_dirac(const PencilSolution& sol, const DiracSystem& sys);

// Relative residual of gamma Psi' + V_D Psi = epsilon Psi on the grid.
double dirac_residual(const DiracLift& lift, const DiracSystem& sys, double epsilon,
                      Branch branch = Branch::FPlus);

struct RegularityRow {
    double x0 = 0.0;
    int nodes = 0;
    bool regular = false;
    std::optional<double> dirac_residual;  // only for regular cells with a BS
};

// Per-x0 regularity of the superpotential plus, where applicable, the Dirac
// residual of the current bound state; documents the certified-real region.
std::vector<RegularityRow> regularity_report(const std::vector<double>& x0s, int l,
                                             const Grid& grid,
                                             const SolveOptions& opts = {});

}  // namespace dynamo
