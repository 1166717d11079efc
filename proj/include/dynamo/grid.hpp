#pragma once

#include <vector>

#include "dynamo/errors.hpp"

namespace dynamo {

// Uniform radial mesh on (0, L] with homogeneous Dirichlet values at x=0 and
// x=L held implicitly (not stored).  Interior nodes x_i = (i+1)h, i = 0..n-1,
// spacing h = L/(n+1).  The first node sits at x=h > 0 so centrifugal terms
// l(l+1)/x^2 stay finite.
struct Grid {
    double L = 100.0;
    int n = 8000;

    Grid() = default;
    Grid(double L_, int n_) : L(L_), n(n_) {
        if (L <= 0.0) throw invalid_parameter("Grid: L must be positive");
        if (n < 1) throw invalid_parameter("Grid: need at least one interior node");
    }

    double h() const { return L / (n + 1); }
    double x(int i) const { return (i + 1) * h(); }

    std::vector<double> nodes() const {
        std::vector<double> xs(n);
        const double step = h();
        for (int i = 0; i < n; ++i) xs[i] = (i + 1) * step;
        return xs;
    }

    // Index of the interior node nearest to x (clamped to the interior).
    int nearest(double xq) const {
        int i = static_cast<int>(xq / h() - 0.5);
        if (i < 0) i = 0;
        if (i >= n) i = n - 1;
        return i;
    }
};

}  // namespace dynamo
