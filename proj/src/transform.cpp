#include "dynamo/transform.hpp"

#include <cmath>
#include <limits>

#include "dynamo/errors.hpp"
#include "dynamo/profile.hpp"

namespace dynamo {

namespace {
constexpr double kJordanEps = 1e-6;
}

bool MatrixPipeline::u_invertible() const { return std::abs(epsilon) > kJordanEps; }

MatrixPipeline build_pipeline(double x0, int l, double epsilon, const Grid& grid) {
    if (l < 0) throw invalid_parameter("build_pipeline: l must be >= 0");
    MatrixPipeline p;
    p.x0 = x0;
    p.l = l;
    p.epsilon = epsilon;
    p.lambda = 0.5 - epsilon * epsilon;
    p.grid = grid;
    const AlphaProfile prof(1.0, x0);
    const double h = grid.h();
    p.alpha.resize(grid.n);
    p.alpha_half.resize(grid.n + 1);
    p.v11.resize(grid.n);
    p.v12.resize(grid.n);
    p.v21.resize(grid.n);
    for (int i = 0; i <= grid.n; ++i) p.alpha_half[i] = prof((i + 0.5) * h);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double al = prof(x);
        p.alpha[i] = al;
        p.v11[i] = 0.5 * al * al - p.lambda;
        p.v12[i] = al;
        p.v21[i] = 0.5 * prof.second(x) + 0.25 * al * al * al - al * p.lambda;
    }
    return p;
}

double v_eigenvalue_deviation(const MatrixPipeline& pipe) {
    double dev = 0.0;
    for (int i = 0; i < pipe.grid.n; ++i) {
        // 2x2 with equal diagonal: eigenvalues v11 +/- sqrt(v12 v21).
        const double prod = pipe.v12[i] * pipe.v21[i];
        const double split = prod >= 0.0 ? std::sqrt(prod) : -1.0;
        if (split < 0.0) return std::numeric_limits<double>::infinity();
        const double expected = std::abs(pipe.epsilon) * pipe.alpha[i];
        dev = std::max(dev, std::abs(split - expected));
    }
    return dev;
}

double p_square_deviation(const MatrixPipeline& pipe) {
    // P = I - (alpha/2) sigma_-, Pinv = I + (alpha/2) sigma_-; both are unit
    // lower triangular so only the (2,1) entries carry information.
    double dev = 0.0;
    for (int i = 0; i < pipe.grid.n; ++i) {
        const double a = pipe.alpha[i];
        const double p21 = -0.5 * a;
        // (P*P)_{21} vs K_{21} = -alpha
        dev = std::max(dev, std::abs((p21 + p21) - (-a)));
        // (P*Pinv)_{21} vs 0
        dev = std::max(dev, std::abs(p21 + 0.5 * a));
    }
    return dev;
}

std::pair<std::vector<double>, std::vector<double>> reconstruct_phi(
    const PencilSolution& sol, const MatrixPipeline& pipe) {
    if (!pipe.u_invertible()) throw jordan_regime_error();
    const int n = pipe.grid.n;
    const double eps = pipe.epsilon;
    std::vector<double> phi1(n), phi2(n);
    for (int i = 0; i < n; ++i) {
        // (F+, F-) = (F, 0) -> Xi = U (F+, F-)^T -> Phi = Pinv Xi
        const double fp = sol.F[i], fm = 0.0;
        const double xi1 = fp + fm;
        const double xi2 = eps * (fp - fm);
        phi1[i] = xi1;
        phi2[i] = 0.5 * pipe.alpha[i] * xi1 + xi2;
    }
    return {std::move(phi1), std::move(phi2)};
}

std::pair<std::vector<double>, std::vector<double>> phi_to_f(
    const std::vector<double>& phi1, const std::vector<double>& phi2,
    const MatrixPipeline& pipe) {
    if (!pipe.u_invertible()) throw jordan_regime_error();
    const int n = pipe.grid.n;
    const double eps = pipe.epsilon;
    std::vector<double> fplus(n), fminus(n);
    for (int i = 0; i < n; ++i) {
        const double a2 = 0.5 * pipe.alpha[i];
        fplus[i] = (phi2[i] - (a2 - eps) * phi1[i]) / (2.0 * eps);
        fminus[i] = -(phi2[i] - (a2 + eps) * phi1[i]) / (2.0 * eps);
    }
    return {std::move(fplus), std::move(fminus)};
}

double field_link_residual(const std::vector<double>& phi1,
                           const std::vector<double>& phi2, const MatrixPipeline& pipe) {
    double rn = 0.0, pn = 0.0;
    for (int i = 0; i < pipe.grid.n; ++i) {
        const double r = phi2[i] - (0.5 * pipe.alpha[i] + pipe.epsilon) * phi1[i];
        rn += r * r;
        pn += phi2[i] * phi2[i];
    }
    if (pn <= 0.0) throw invalid_parameter("field_link_residual: Phi2 has zero norm");
    return std::sqrt(rn / pn);
}

double full_system_residual(const std::vector<double>& phi1,
                            const std::vector<double>& phi2, const MatrixPipeline& pipe) {
    const int n = pipe.grid.n;
    const double h = pipe.grid.h();
    const double inv_h2 = 1.0 / (h * h);
    const double ll1 = static_cast<double>(pipe.l) * (pipe.l + 1);
    double rn = 0.0, pn = 0.0;
    for (int i = 0; i < n; ++i) {
        const double p1m = i > 0 ? phi1[i - 1] : 0.0;
        const double p1p = i + 1 < n ? phi1[i + 1] : 0.0;
        const double p2m = i > 0 ? phi2[i - 1] : 0.0;
        const double p2p = i + 1 < n ? phi2[i + 1] : 0.0;
        const double x = pipe.grid.x(i);
        const double cf = ll1 / (x * x);
        const double al = pipe.alpha[i];
        const double am = pipe.alpha_half[i];      // x_i - h/2
        const double ap = pipe.alpha_half[i + 1];  // x_i + h/2

        const double r1 = (p1m - 2.0 * phi1[i] + p1p) * inv_h2 - cf * phi1[i] +
                          al * phi2[i] - pipe.lambda * phi1[i];
        const double r2 = (-ap * (p1p - phi1[i]) + am * (phi1[i] - p1m)) * inv_h2 +
                          (p2m - 2.0 * phi2[i] + p2p) * inv_h2 + al * cf * phi1[i] -
                          cf * phi2[i] - pipe.lambda * phi2[i];
        rn += r1 * r1 + r2 * r2;
        pn += phi1[i] * phi1[i] + phi2[i] * phi2[i];
    }
    return std::sqrt(rn / pn);
}

BandMatrix assemble_block_system(const MatrixPipeline& pipe) {
    const int n = pipe.grid.n;
    const double h = pipe.grid.h();
    const double inv_h2 = 1.0 / (h * h);
    const double ll1 = static_cast<double>(pipe.l) * (pipe.l + 1);
    BandMatrix B(2 * n, 3, 2);
    for (int i = 0; i < n; ++i) {
        const double x = pipe.grid.x(i);
        const double cf = ll1 / (x * x);
        const double al = pipe.alpha[i];
        const double am = pipe.alpha_half[i];
        const double ap = pipe.alpha_half[i + 1];
        const int r1 = 2 * i, r2 = 2 * i + 1;
        // Component 1 row: d^2 Phi1 - cf Phi1 + alpha Phi2 - lambda Phi1
        if (i > 0) B.at(r1, 2 * (i - 1)) = inv_h2;
        B.at(r1, r1) = -2.0 * inv_h2 - cf - pipe.lambda;
        B.at(r1, r2) = al;
        if (i + 1 < n) B.at(r1, 2 * (i + 1)) = inv_h2;
        // Component 2 row: -d(alpha d Phi1) + d^2 Phi2 + alpha cf Phi1
        //                  - cf Phi2 - lambda Phi2
        if (i > 0) {
            B.at(r2, 2 * (i - 1)) = -am * inv_h2;
            B.at(r2, 2 * (i - 1) + 1) = inv_h2;
        }
        B.at(r2, r1) = (am + ap) * inv_h2 + al * cf;
        B.at(r2, r2) = -2.0 * inv_h2 - cf - pipe.lambda;
        if (i + 1 < n) {
            B.at(r2, 2 * (i + 1)) = -ap * inv_h2;
            B.at(r2, 2 * (i + 1) + 1) = inv_h2;
        }
    }
    return B;
}

double block_inverse_iteration_delta(const std::vector<double>& phi1,
                                     const std::vector<double>& phi2,
                                     const MatrixPipeline& pipe) {
    const int n = pipe.grid.n;
    const BandMatrix B = assemble_block_system(pipe);
    std::vector<double> v(2 * n);
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) {
        v[2 * i] = phi1[i];
        v[2 * i + 1] = phi2[i];
        nrm += phi1[i] * phi1[i] + phi2[i] * phi2[i];
    }
    nrm = std::sqrt(nrm);
    for (double& c : v) c /= nrm;

    const BandLU lu(B);
    lu.solve(v);
    double vn = 0.0;
    for (double c : v) vn += c * c;
    vn = std::sqrt(vn);
    for (double& c : v) c /= vn;

    // Rayleigh quotient of the unshifted operator: (B + lambda I) v.
    std::vector<double> y;
    B.apply(v, y);
    double rq = 0.0;
    for (int i = 0; i < 2 * n; ++i) rq += v[i] * (y[i] + pipe.lambda * v[i]);
    return std::abs(rq - pipe.lambda);
}

double jordan_form_check(double x0, int l, const Grid& grid) {
    const MatrixPipeline pipe = build_pipeline(x0, l, 0.0, grid);
    const AlphaProfile prof(1.0, x0);
    const double ll1 = static_cast<double>(l) * (l + 1);
    double dev = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double al = prof(x);
        const double v0 = ll1 / (x * x) - 0.5 * (al * al - 1.0);
        const double v1 = -al;
        // Transformed system row coefficients at lambda = 1/2 versus the
        // triangular normal form.
        const double diag_feq = -ll1 / (x * x) + pipe.v11[i];
        dev = std::max(dev, std::abs(pipe.v21[i]));            // (2,1) entry
        dev = std::max(dev, std::abs(diag_feq - (-v0)));       // diagonal
        dev = std::max(dev, std::abs(pipe.v12[i] - (-v1)));    // (1,2) entry
    }
    return dev;
}

}  // namespace dynamo
