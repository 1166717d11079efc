#include "dynamo/ode.hpp"

#include <cmath>

#include "dynamo/errors.hpp"

namespace dynamo {

namespace {

bool finite_state(const std::vector<double>& y) {
    for (double c : y)
        if (!(std::abs(c) <= 1e300)) return false;
    return true;
}

}  // namespace

Trajectory integrate_ivp(const OdeRhs& rhs, double x_start, double x_end,
                         const std::vector<double>& y0, double step,
                         int watch_component) {
    if (step <= 0.0) throw invalid_parameter("integrate_ivp: step must be positive");
    const size_t m = y0.size();
    Trajectory traj;
    traj.x.push_back(x_start);
    traj.y.push_back(y0);

    std::vector<double> y = y0, k1(m), k2(m), k3(m), k4(m), tmp(m);
    double x = x_start;
    while (x < x_end - 1e-14 * (std::abs(x_end) + 1.0)) {
        const double h = std::min(step, x_end - x);
        rhs(x, y, k1);
        for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(x + 0.5 * h, tmp, k2);
        for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(x + 0.5 * h, tmp, k3);
        for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(x + h, tmp, k4);

        const double prev_w = watch_component >= 0 ? y[watch_component] : 0.0;
        for (size_t i = 0; i < m; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double xn = x + h;
        if (!finite_state(y)) throw blowup_error(x);

        if (watch_component >= 0) {
            const double w = y[watch_component];
            if ((prev_w < 0.0 && w > 0.0) || (prev_w > 0.0 && w < 0.0)) {
                // One secant refinement inside the step; robust enough for
                // node counting near tangency.
                traj.nodes.push_back(x + h * prev_w / (prev_w - w));
            } else if (w == 0.0 && prev_w != 0.0) {
                traj.nodes.push_back(xn);
            }
        }
        traj.x.push_back(xn);
        traj.y.push_back(y);
        x = xn;
    }
    return traj;
}

}  // namespace dynamo
