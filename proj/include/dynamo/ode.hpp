#pragma once

#include <functional>
#include <vector>

namespace dynamo {

// Fixed-step classical Runge-Kutta trajectory of y' = f(x, y).
// States are small (dimension 2 here), kept as flat rows.
struct Trajectory {
    std::vector<double> x;
    std::vector<std::vector<double>> y;
    // Sign-change positions of the watched component, secant-refined within
    // the bracketing step.
    std::vector<double> nodes;
};

using OdeRhs =
    std::function<void(double x, const std::vector<double>& y, std::vector<double>& dy)>;

// Integrate from x_start to x_end with the given step (last step shortened to
// land on x_end).  watch_component >= 0 records sign changes of that state
// component.  Throws blowup_error when the state leaves [-1e300, 1e300].
Trajectory integrate_ivp(const OdeRhs& rhs, double x_start, double x_end,
                         const std::vector<double>& y0, double step,
                         int watch_component = -1);

}  // namespace dynamo
