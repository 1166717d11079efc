#pragma once

#include <optional>
#include <vector>

#include "dynamo/grid.hpp"
#include "dynamo/tridiag.hpp"

namespace dynamo {

// Which of F+/F- carries the bound state in the epsilon >= 0 picture.
// Solutions are always reported in the smooth-curve convention (F+ carries,
// epsilon signed = -b); the branch tag records the raw intersection side.
enum class Branch { FPlus, FMinus };

inline const char* to_string(Branch b) { return b == Branch::FPlus ? "F+" : "F-"; }

struct PencilSolution {
    double x0 = 0.0;
    int l = 0;
    double lambda = 0.0;   // 1/2 - epsilon^2, definitional
    double epsilon = 0.0;  // signed; equals -b_root
    Branch branch = Branch::FPlus;
    double b_root = 0.0;
    std::vector<double> F;  // unit discrete L2 norm
    bool localized = false;
    double residual = 0.0;  // ||pencil operator applied to F|| / ||F||
};

struct SolveOptions {
    double scan_min = -1.5;
    double scan_max = 1.5;
    double scan_step = 0.02;
    double root_tol = 1e-12;         // bisection width on b
    double eigen_tol = 1e-10;        // eigenvalue bisection tolerance
    double tail_threshold = 1e-6;    // localization: tail max vs global max
    double tail_fraction = 0.1;      // last fraction of the box inspected
};

struct PencilResult {
    // Candidate bound states (real root, lambda > 0, localized), ordered by
    // b_root.  Selection among several is the caller's policy; solution holds
    // the default pick (largest lambda).
    std::optional<PencilSolution> solution;
    std::vector<PencilSolution> candidates;
    std::vector<double> roots_b;  // every bracketed constraint intersection
    bool imaginary_straddle = false;
};

// b-parametrized linear family -d2/dx2 + l(l+1)/x^2 - alpha^2/2 + b*alpha for
// a fixed cell; precomputes the potential so scan loops stay cheap.
class AuxiliaryOperator {
  public:
    AuxiliaryOperator(double x0, int l, const Grid& grid);

    // Largest lambda = -(smallest eigenvalue); no eigenvector work.
    double lambda(double b, double eigen_tol = 1e-10) const;
    // Refined smallest eigenpair of the discretized operator.
    EigenPair ground_state(double b, double eigen_tol = 1e-10) const;

    const Grid& grid() const { return grid_; }
    double x0() const { return x0_; }
    int l() const { return l_; }
    Tridiagonal assemble(double b) const;

    const std::vector<double>& dbase() const { return dbase_; }
    const std::vector<double>& alphas() const { return alpha_; }
    double e2() const { return e2_; }
    double pivmin() const { return pivmin_; }

  private:
    Grid grid_;
    double x0_;
    int l_;
    double inv_h2_, e2_, pivmin_;
    std::vector<double> dbase_;  // 2/h^2 + l(l+1)/x^2 - alpha^2/2
    std::vector<double> alpha_;
};

// k largest lambda = -E of the reduced operator (b = 0); bound states have
// lambda > 0, values below that are box-truncated continuum.
std::vector<double> reduced_spectrum(double x0, int l, const Grid& grid, int k);

// Smallest-eigenvalue convention of the auxiliary family, lambda(x0, b).
double auxiliary_lambda(double x0, int l, double b, const Grid& grid);

// Bound states of the quadratic pencil via scan + bisection on the constraint
// g(b) = b +/- sqrt(1/2 - lambda(x0,b)).
PencilResult solve_pencil(double x0, int l, const Grid& grid,
                          const SolveOptions& opts = {});

// Re-root the constraint inside a known tight bracket (used when moving a
// coarse-grid solution to a finer grid).  Works on the smooth form
// G(b) = lambda(b) + b^2 - 1/2, so no square-root validity edge.
std::optional<PencilSolution> solve_pencil_near(double x0, int l, const Grid& grid,
                                                double b_center, double half_width,
                                                const SolveOptions& opts = {});

}  // namespace dynamo
