#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dynamo/grid.hpp"
#include "dynamo/profile.hpp"

namespace dynamo {

// Closed-form solution phi_s = [-s*kappa + tanh(x-x0)] exp(s*kappa*x) of the
// one-soliton Schrodinger problem at energy E = -kappa^2, s = +1/-1.
struct PhiExact {
    double x0;
    double kappa;
    int sign;  // +1 for the growing branch, -1 for the decaying one

    PhiExact(double x0_, double kappa_, int sign_);

    double operator()(double x) const;
    double prime(double x) const;
    double second(double x) const;
};

// Constant Wronskian phi_+ phi_-' - phi_+' phi_-; equals -2k(1-k^2).
double wronskian(const PhiExact& plus, const PhiExact& minus, double x);

// Single discrete level E(x0) = -tanh^2(x0) of the half-line problem with a
// Dirichlet wall at 0; no bound state for x0 <= 0.
std::optional<double> bound_state_level(double x0);

// Smooth test function with closed-form derivatives, for operator-identity
// checks that must not be polluted by finite differences.
struct TestFunction {
    std::function<double(double)> f, d1, d2, d3;
};

// ||(L H0 - H1 L) f|| / ||f|| on the grid, everything in closed form.
double intertwining_residual(const TestFunction& tf, const Grid& grid, double x0);

// ||L'L f - (H0+1) f|| / ||f|| and ||L L' f - (H1+1) f|| / ||f||.
double factorization_residual_h0(const TestFunction& tf, const Grid& grid, double x0);
double factorization_residual_h1(const TestFunction& tf, const Grid& grid, double x0);

// Outward-integrated seed u of H_{2,l} u = 0 with u ~ x^{l+1} at the origin.
// u, du are sampled on the grid nodes plus the x = L endpoint.  The seed is
// regular when it is nodeless and stays clear of the division guard, in which
// case w = u'/u is a continuous superpotential.
struct FactorizationSeed {
    double x0 = 0.0;
    int l = 0;
    std::vector<double> u, du;
    std::vector<double> node_positions;
    int nodes = 0;
    bool regular = false;

    // w on the interior grid nodes; throws irregular_superpotential_error
    // when the seed has a node (w would have a pole).
    std::vector<double> superpotential(const Grid& grid) const;
};

FactorizationSeed h2l_factorization_seed(double x0, int l, const Grid& grid);

}  // namespace dynamo
