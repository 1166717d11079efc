#pragma once

#include <vector>

namespace dynamo {

// Composite Simpson integral of uniformly spaced samples (spacing h).
// Odd interval counts get a 3/8 closure on the last three intervals, so both
// parities keep O(h^4).  Fewer than 3 samples is an error.
double simpson(const std::vector<double>& f, double h);

// Cumulative integral I(x_k) = int_{x_0}^{x_k} f, Simpson pairs with a
// quadratic half-panel on odd indices.  I[0] = 0.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h);

// Cumulative tail integral J(x_k) = int_{x_k}^{x_end} f, accumulated from the
// right so exponentially small tails come out at their own scale instead of
// as a difference of O(1) partial sums.  J[last] = 0.
std::vector<double> cumulative_simpson_tail(const std::vector<double>& f, double h);

}  // namespace dynamo
