#pragma once

#include "dynamo/errors.hpp"

namespace dynamo {

// Sech-shaped helical turbulence profile alpha(x) = 2a / cosh(a(x - x0)).
// Immutable value type; all derivatives are closed-form sech/tanh algebra.
// Solves alpha'' + alpha^3/2 - a^2 alpha = 0 identically.
struct AlphaProfile {
    double a = 1.0;
    double x0 = 0.0;

    AlphaProfile() = default;
    AlphaProfile(double a_, double x0_) : a(a_), x0(x0_) {
        if (!(a > 0.0)) throw invalid_parameter("AlphaProfile: a must be positive");
    }

    double operator()(double x) const;
    double value(double x) const { return (*this)(x); }
    double prime(double x) const;
    double second(double x) const;

    // alpha'' + alpha^3/2 - a^2 alpha, identically zero in exact arithmetic.
    double ode_residual(double x) const;
};

// Map to a=1 units.  Coordinates and spectra of the original problem follow
// x = x_tilde/a, lambda = a^2 lambda_tilde, epsilon = a epsilon_tilde; the
// profile center lands at a*x0 in the rescaled coordinate.
AlphaProfile rescale_to_unit_a(const AlphaProfile& p);

}  // namespace dynamo
