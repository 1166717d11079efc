#pragma once

#include <utility>
#include <vector>

#include "dynamo/banded.hpp"
#include "dynamo/grid.hpp"
#include "dynamo/pencil.hpp"

namespace dynamo {

// Sampled matrix pipeline of the coupled problem at one (x0, l, epsilon):
// K = I - alpha sigma_-, its square root P, the transformed potential V and
// the constant diagonalizer U.  V follows its defining entries literally;
// that V21 collapses to alpha*eps^2 is a property tests check, not an input.
struct MatrixPipeline {
    double x0 = 0.0;
    int l = 0;
    double epsilon = 0.0;
    double lambda = 0.5;  // 1/2 - epsilon^2
    Grid grid;

    std::vector<double> alpha;       // at interior nodes
    std::vector<double> alpha_half;  // at (i+1/2)h, i = 0..n (flux points)
    std::vector<double> v11, v12, v21;  // v22 == v11

    bool u_invertible() const;
    // det U = -2 epsilon; singular exactly at the Jordan point.
    double det_u() const { return -2.0 * epsilon; }
};

MatrixPipeline build_pipeline(double x0, int l, double epsilon, const Grid& grid);

// Max pointwise deviation of the 2x2 eigenvalues of V from
// alpha^2/2 - lambda +/- epsilon*alpha.
double v_eigenvalue_deviation(const MatrixPipeline& pipe);

// Max pointwise deviation of P*P from K and of P*Pinv from I.
double p_square_deviation(const MatrixPipeline& pipe);

// Xi = U (F+, F-)^T, Phi = P^{-1} Xi, with (F+, F-) = (F, 0) in the
// smooth-curve convention.  Requires |epsilon| > 1e-6 (invertible U).
std::pair<std::vector<double>, std::vector<double>> reconstruct_phi(
    const PencilSolution& sol, const MatrixPipeline& pipe);

// Inverse direction: (F+, F-) from (Phi1, Phi2).
std::pair<std::vector<double>, std::vector<double>> phi_to_f(
    const std::vector<double>& phi1, const std::vector<double>& phi2,
    const MatrixPipeline& pipe);

// || Phi2 - (alpha/2 + epsilon) Phi1 || / || Phi2 ||, the radial scalar form
// of the current / electromotive-force link.
double field_link_residual(const std::vector<double>& phi1,
                           const std::vector<double>& phi2, const MatrixPipeline& pipe);

// Relative residual of the coupled system on the grid, conservative flux
// form with K sampled at half nodes.
double full_system_residual(const std::vector<double>& phi1,
                            const std::vector<double>& phi2, const MatrixPipeline& pipe);

// Interleaved 2n x 2n band matrix of (flux-form d/dx K d/dx + M - lambda I).
BandMatrix assemble_block_system(const MatrixPipeline& pipe);

// One inverse-iteration step on the block system from (Phi, lambda); returns
// |Rayleigh(after) - lambda|.  Small values certify the reconstructed pair as
// an eigenpair of the coupled discretization.
double block_inverse_iteration_delta(const std::vector<double>& phi1,
                                     const std::vector<double>& phi2,
                                     const MatrixPipeline& pipe);

// At epsilon = 0 (lambda = 1/2) the transformed system must be upper
// triangular with diagonal d^2 - V0 and coupling -V1; returns the max
// pointwise deviation from that form.
double jordan_form_check(double x0, int l, const Grid& grid);

}  // namespace dynamo
