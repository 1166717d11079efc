#include "dynamo/dirac.hpp"

#include <cmath>

#include "dynamo/errors.hpp"
#include "dynamo/numdiff.hpp"
#include "dynamo/profile.hpp"

namespace dynamo {

std::vector<double> derivative4_dirichlet(const std::vector<double>& f, double h) {
    const int n = static_cast<int>(f.size());
    std::vector<double> d(n);
    if (n < 4) throw invalid_parameter("derivative4_dirichlet: need at least 4 samples");
    const double c = 1.0 / (12.0 * h);
    auto at = [&](int i) -> double {
        if (i == -1 || i == n) return 0.0;  // Dirichlet ghosts
        return f[i];
    };
    // Node 0 sits one step inside the left wall; its centered stencil would
    // need x = -h, so use the offset five-point formula anchored at the wall.
    d[0] = c * (-3.0 * 0.0 - 10.0 * f[0] + 18.0 * f[1] - 6.0 * f[2] + f[3]);
    for (int i = 1; i < n - 1; ++i)
        d[i] = c * (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2));
    d[n - 1] = c * (-f[n - 4] + 6.0 * f[n - 3] - 18.0 * f[n - 2] + 10.0 * f[n - 1] + 3.0 * 0.0);
    return d;
}

DiracSystem build_dirac_system(double x0, int l, const Grid& grid) {
    DiracSystem sys;
    sys.x0 = x0;
    sys.l = l;
    sys.grid = grid;
    sys.seed = h2l_factorization_seed(x0, l, grid);
    sys.regular = sys.seed.regular;
    if (sys.regular) sys.w = sys.seed.superpotential(grid);
    return sys;
}

DiracLift lift_to_dirac(const PencilSolution& sol, const DiracSystem& sys) {
    if (!sys.regular) throw irregular_superpotential_error();
    if (std::abs(sol.epsilon) <= 1e-6) throw jordan_regime_error();
    const int n = sys.grid.n;
    DiracLift lift;
    lift.psi1 = sol.F;
    lift.psi2.resize(n);
    const std::vector<double> dpsi1 = derivative4_dirichlet(lift.psi1, sys.grid.h());
    for (int i = 0; i < n; ++i)
        lift.psi2[i] = (-dpsi1[i] + sys.w[i] * lift.psi1[i]) / sol.epsilon;
    return lift;
}

double dirac_residual(const DiracLift& lift, const DiracSystem& sys, double epsilon,
                      Branch branch) {
    if (!sys.regular) throw irregular_superpotential_error();
    const int n = sys.grid.n;
    const AlphaProfile prof(1.0, sys.x0);
    const double sgn = branch == Branch::FPlus ? 1.0 : -1.0;
    const std::vector<double> d1 = derivative4_dirichlet(lift.psi1, sys.grid.h());
    const std::vector<double> d2 = derivative4_dirichlet(lift.psi2, sys.grid.h());
    double rn = 0.0, pn = 0.0;
    for (int i = 0; i < n; ++i) {
        const double al = prof(sys.grid.x(i));
        // gamma d/dx + V_D - epsilon, rows written out
        const double r1 = d2[i] - sgn * al * lift.psi1[i] + sys.w[i] * lift.psi2[i] -
                          epsilon * lift.psi1[i];
        const double r2 = -d1[i] + sys.w[i] * lift.psi1[i] - epsilon * lift.psi2[i];
        rn += r1 * r1 + r2 * r2;
        pn += lift.psi1[i] * lift.psi1[i] + lift.psi2[i] * lift.psi2[i];
    }
    return std::sqrt(rn / pn);
}

std::vector<RegularityRow> regularity_report(const std::vector<double>& x0s, int l,
                                             const Grid& grid, const SolveOptions& opts) {
    std::vector<RegularityRow> rows;
    rows.reserve(x0s.size());
    for (double x0 : x0s) {
        RegularityRow row;
        row.x0 = x0;
        const DiracSystem sys = build_dirac_system(x0, l, grid);
        row.nodes = sys.seed.nodes;
        row.regular = sys.regular;
        if (sys.regular) {
            const PencilResult pr = solve_pencil(x0, l, grid, opts);
            if (pr.solution && std::abs(pr.solution->epsilon) > 1e-6) {
                const DiracLift lift = lift_to_dirac(*pr.solution, sys);
                row.dirac_residual = dirac_residual(lift, sys, pr.solution->epsilon);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dynamo
