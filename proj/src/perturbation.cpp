#include "dynamo/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "dynamo/profile.hpp"
#include "dynamo/quadrature.hpp"
#include "dynamo/susy.hpp"

namespace dynamo {

double jordan_x0() { return std::log(1.0 + std::sqrt(2.0)); }

namespace {

const double kKappaJ = 1.0 / std::sqrt(2.0);

std::vector<double> closed_axis(const Grid& grid) {
    std::vector<double> xs(grid.n + 2);
    const double h = grid.h();
    for (int k = 0; k < grid.n + 2; ++k) xs[k] = k * h;
    return xs;
}

}  // namespace

JordanChain jordan_chain_solution(const Grid& grid) {
    const double xJ = jordan_x0();
    const PhiExact phim(xJ, kKappaJ, -1), phip(xJ, kKappaJ, +1);
    const AlphaProfile alpha(1.0, xJ);
    const double h = grid.h();

    JordanChain chain;
    chain.axis = closed_axis(grid);
    const int m = static_cast<int>(chain.axis.size());
    chain.xi1.resize(m);
    chain.xi0.assign(m, 0.0);

    std::vector<double> a_pm2(m), a_ppm(m);
    double rn = 0.0, fn = 0.0;
    for (int k = 0; k < m; ++k) {
        const double x = chain.axis[k];
        const double pm = phim(x);
        const double al = alpha(x);
        chain.xi1[k] = pm;
        a_pm2[k] = al * pm * pm;
        a_ppm[k] = al * phip(x) * pm;
        const double r = -phim.second(x) - 0.5 * al * al * pm + 0.5 * pm;
        rn += r * r;
        fn += pm * pm;
    }
    chain.xi1_residual = std::sqrt(rn / fn);

    // C0 != 0 is excluded: phi_+ int alpha phi_-^2 grows without bound.
    const std::vector<double> A = cumulative_simpson(a_pm2, h);
    const std::vector<double> B = cumulative_simpson(a_ppm, h);
    const int k20 = std::min(m - 1, static_cast<int>(std::round(20.0 / h)));
    const double witness_far = std::abs(phip(chain.axis[m - 1]) * A[m - 1]);
    const double witness_mid = std::abs(phip(chain.axis[k20]) * A[k20]);
    chain.divergence_ratio = witness_far / std::max(witness_mid, 1e-300);

    const double W = wronskian(phip, phim, 1.0);
    double mid_max = 0.0;
    for (int k = 0; k <= k20; ++k) {
        const double x = chain.axis[k];
        mid_max = std::max(mid_max, std::abs((phip(x) * A[k] - phim(x) * B[k]) / W));
    }
    const double xL = chain.axis[m - 1];
    chain.c0_candidate_tail = std::abs((phip(xL) * A[m - 1] - phim(xL) * B[m - 1]) / W);
    chain.c0_candidate_mid_max = mid_max;
    return chain;
}

Solvability solvability_e1(const Grid& grid) {
    const double xJ = jordan_x0();
    const PhiExact phim(xJ, kKappaJ, -1);
    const AlphaProfile alpha(1.0, xJ);
    const std::vector<double> xs = closed_axis(grid);
    const int m = static_cast<int>(xs.size());
    std::vector<double> num_s(m), den_s(m);
    for (int k = 0; k < m; ++k) {
        const double x = xs[k];
        const double pm2 = phim(x) * phim(x);
        const double al = alpha(x);
        num_s[k] = al * alpha.prime(x) * pm2;
        den_s[k] = al * pm2;
    }
    const double num = simpson(num_s, grid.h());
    const double den = simpson(den_s, grid.h());
    if (std::abs(den) < 1e-14)
        throw numerical_failure("solvability_e1: degenerate denominator quadrature");
    Solvability s;
    s.ratio = num / den;
    s.e1_fplus = s.ratio;
    s.e1_fminus = -s.ratio;
    return s;
}

std::vector<double> first_order_correction(double e1, const Grid& grid) {
    const double xJ = jordan_x0();
    const PhiExact phim(xJ, kKappaJ, -1), phip(xJ, kKappaJ, +1);
    const AlphaProfile alpha(1.0, xJ);
    const double h = grid.h();
    const std::vector<double> xs = closed_axis(grid);
    const int m = static_cast<int>(xs.size());

    std::vector<double> g_pp(m), g_mm(m), s2(m);
    for (int k = 0; k < m; ++k) {
        const double x = xs[k];
        const double pm = phim(x), pp = phip(x);
        const double al = alpha(x), alp = alpha.prime(x);
        const double g1 = al * (alp - e1);  // F+ branch of g1 = aJ (aJ' -/+ e1)
        g_pp[k] = g1 * pp * pm;
        g_mm[k] = g1 * pm * pm;
        s2[k] = al * pm * pm;
    }
    const std::vector<double> A = cumulative_simpson(g_pp, h);
    const std::vector<double> J = cumulative_simpson_tail(g_mm, h);
    const double I_tot = simpson(g_mm, h);
    // I_tot = num - e1*den, so |I_tot|/|den| is exactly the distance of the
    // given e1 from the solvability value.
    const double den = simpson(s2, h);
    const double defect = std::abs(I_tot) / std::max(std::abs(den), 1e-300);

    const double W = wronskian(phip, phim, 1.0);
    std::vector<double> chi(m);
    // int_0^x g1 phi_-^2 = I_tot - J(x).  Within the solvability tolerance the
    // I_tot piece is a spurious phi_+ admixture (e^{kappa L} would amplify it
    // past any signal); the decaying representative drops it.  Beyond the
    // tolerance it is the genuine growing component the certificate must see.
    const bool solvable = defect < 1e-6;
    for (int k = 0; k < m; ++k) {
        const double x = xs[k];
        const double b_term = solvable ? -J[k] : (I_tot - J[k]);
        chi[k] = (phim(x) * A[k] - phip(x) * b_term) / W;
    }
    double cmax = 0.0;
    for (double c : chi) cmax = std::max(cmax, std::abs(c));
    const double tail_ratio = std::abs(chi[m - 1]) / std::max(cmax, 1e-300);
    if (tail_ratio >= 1e-6) throw solvability_violation(tail_ratio);
    return chi;
}

JordanExpansion build_jordan_expansion(const Grid& grid, const SolveOptions& opts) {
    JordanExpansion je;
    je.x_J = jordan_x0();
    const Solvability s = solvability_e1(grid);
    je.e1 = s.e1_fplus;
    je.chi = first_order_correction(je.e1, grid);
    for (double d : {0.025, 0.05, 0.1, 0.2}) {
        const auto rows = local_slope_check({-d, d}, grid, opts);
        bool ok = true;
        for (const auto& r : rows)
            ok = ok && r.deviation && *r.deviation <= 2.0 * d * d;
        if (!ok) break;
        je.delta_validated = d;
    }
    return je;
}

std::vector<SlopeRow> local_slope_check(const std::vector<double>& deltas,
                                        const Grid& grid, const SolveOptions& opts) {
    std::vector<SlopeRow> rows;
    rows.reserve(deltas.size());
    const double xJ = jordan_x0();
    for (double d : deltas) {
        SlopeRow row;
        row.delta = d;
        row.epsilon_linear = -0.5 * d;
        const PencilResult r = solve_pencil(xJ + d, 0, grid, opts);
        if (r.solution) {
            row.epsilon_pencil = r.solution->epsilon;
            row.deviation = std::abs(*row.epsilon_pencil - row.epsilon_linear);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dynamo
