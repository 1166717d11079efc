#pragma once

#include <functional>
#include <vector>

#include "dynamo/grid.hpp"

namespace dynamo {

// Symmetric tridiagonal operator: -d^2/dx^2 + q(x) with second-order central
// differences on a Grid.  diagonal has length n, off-diagonal length n-1.
struct Tridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off;

    int size() const { return static_cast<int>(diagonal.size()); }

    // y = T v
    void apply(const std::vector<double>& v, std::vector<double>& y) const;

    double inf_norm() const;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

// Standard 3-point Laplacian plus potential: diag_i = 2/h^2 + q(x_i),
// off = -1/h^2.  Throws numerical_failure naming the node if q is not finite.
Tridiagonal discretize_schrodinger(const Grid& grid,
                                   const std::function<double(double)>& potential);

// Number of eigenvalues of T strictly below mu (Sturm sequence sign count).
int sturm_count_below(const Tridiagonal& T, double mu);

// Interval [lo, hi] guaranteed to contain the whole spectrum (Gershgorin).
void spectrum_bounds(const Tridiagonal& T, double& lo, double& hi);

// The k algebraically smallest eigenvalues by Sturm-sequence bisection.
// No eigenvectors; search may be restricted to [lo, hi_cap] when the caller
// only cares about eigenvalues below hi_cap (values above it are still
// returned, bisected against the full Gershgorin interval).
std::vector<double> lowest_eigenvalues(const Tridiagonal& T, int k,
                                       double abs_tol = 1e-10);

// As above plus inverse-iteration eigenvectors, refined until
// ||Tv - lambda v||_inf <= residual_tol * ||T||_inf.  Vectors have unit
// discrete L2 norm and the first component larger than 1e-12*max|v| is
// made positive.
std::vector<EigenPair> lowest_eigenpairs(const Tridiagonal& T, int k,
                                         double abs_tol = 1e-10,
                                         double residual_tol = 1e-9);

// Smallest eigenvalue only; cheap path used by scan loops.
double smallest_eigenvalue(const Tridiagonal& T, double abs_tol = 1e-10);

// Solve (T - shift I) x = rhs by LU with partial pivoting; used by inverse
// iteration.  Near-singular pivots are nudged, which is exactly what inverse
// iteration wants.
void shifted_tridiagonal_solve(const Tridiagonal& T, double shift,
                               const std::vector<double>& rhs,
                               std::vector<double>& x);

}  // namespace dynamo
