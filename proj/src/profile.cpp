#include "dynamo/profile.hpp"

#include <cmath>

namespace dynamo {

double AlphaProfile::operator()(double x) const {
    return 2.0 * a / std::cosh(a * (x - x0));
}

double AlphaProfile::prime(double x) const {
    const double u = a * (x - x0);
    const double s = 1.0 / std::cosh(u);
    return -2.0 * a * a * s * std::tanh(u);
}

double AlphaProfile::second(double x) const {
    const double u = a * (x - x0);
    const double s = 1.0 / std::cosh(u);
    const double t = std::tanh(u);
    return 2.0 * a * a * a * s * (t * t - s * s);
}

double AlphaProfile::ode_residual(double x) const {
    const double al = (*this)(x);
    return second(x) + 0.5 * al * al * al - a * a * al;
}

AlphaProfile rescale_to_unit_a(const AlphaProfile& p) {
    if (!(p.a > 0.0)) throw invalid_parameter("rescale_to_unit_a: a must be positive");
    return AlphaProfile(1.0, p.a * p.x0);
}

}  // namespace dynamo
