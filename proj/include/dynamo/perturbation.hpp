#pragma once

#include <optional>
#include <vector>

#include "dynamo/grid.hpp"
#include "dynamo/pencil.hpp"

namespace dynamo {

// Center of the Jordan configuration, arctanh(2^{-1/2}) = ln(1 + sqrt 2).
double jordan_x0();

constexpr double kLambdaJordan = 0.5;

// Jordan chain data at the non-diagonalizable point: the chain collapses to
// (Xi1, Xi0) = (C1 phi_-, 0); a nonzero Xi0 is excluded because its
// inhomogeneous partner grows.  Sampled on the closed axis x_k = k h,
// k = 0..n+1 (Dirichlet endpoints included).
struct JordanChain {
    std::vector<double> axis;
    std::vector<double> xi1;  // C1 = 1
    std::vector<double> xi0;  // identically zero
    double xi1_residual = 0.0;           // chain-equation residual, closed form
    double divergence_ratio = 0.0;       // witness that C0 != 0 diverges
    double c0_candidate_tail = 0.0;      // |Xi1(L)| of the C0 = 1 candidate
    double c0_candidate_mid_max = 0.0;   // its max over x <= 20
};

JordanChain jordan_chain_solution(const Grid& grid);

// Solvability quadratures fixing the first-order coefficient.
struct Solvability {
    double ratio = 0.0;      // int aJ aJ' phi-^2 / int aJ phi-^2  (= -1/2)
    double e1_fplus = 0.0;   // ratio, the smooth-connection branch
    double e1_fminus = 0.0;  // -ratio
};

Solvability solvability_e1(const Grid& grid);

// Signals a first-order correction that cannot decay (wrong e1).
struct solvability_violation : numerical_failure {
    double tail_ratio;
    explicit solvability_violation(double r)
        : numerical_failure("first-order correction violates decay; e1 does not "
                            "satisfy the solvability condition"),
          tail_ratio(r) {}
};

// chi on the closed axis for the F+ branch, C1 = 1, C+- = 0.  Throws
// solvability_violation when the given e1 leaves a growing component above
// the quadrature noise floor.
std::vector<double> first_order_correction(double e1, const Grid& grid);

struct SlopeRow {
    double delta = 0.0;
    std::optional<double> epsilon_pencil;
    double epsilon_linear = 0.0;  // -delta/2
    std::optional<double> deviation;
};

// Pencil epsilon(x_J + delta) against the linear law -delta/2.
std::vector<SlopeRow> local_slope_check(const std::vector<double>& deltas,
                                        const Grid& grid,
                                        const SolveOptions& opts = {});

// Assembled first-order expansion record for the smooth-connection branch.
struct JordanExpansion {
    double x_J = 0.0;
    double lambda_J = kLambdaJordan;
    double e1 = 0.0;          // F+ branch, -1/2
    double C1 = 1.0;
    std::vector<double> chi;  // first-order correction on the closed axis
    // Largest probed |delta| on both sides of x_J where the remainder stayed
    // quadratic (|eps + delta/2| <= 2 delta^2); the radius is empirical.
    double delta_validated = 0.0;
};

JordanExpansion build_jordan_expansion(const Grid& grid, const SolveOptions& opts = {});

}  // namespace dynamo
