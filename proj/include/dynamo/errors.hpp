#pragma once

#include <stdexcept>
#include <string>

namespace dynamo {

// Precondition violations (bad parameters, malformed input).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative procedure exceeded its budget or produced garbage.
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ODE state overflowed; carries the last x where the state was finite.
struct blowup_error : numerical_failure {
    double last_x;
    explicit blowup_error(double x)
        : numerical_failure("ODE state overflow at x > " + std::to_string(x)), last_x(x) {}
};

// Operation needs |epsilon| bounded away from zero; the Jordan configuration
// must go through the perturbation machinery instead.
struct jordan_regime_error : std::domain_error {
    jordan_regime_error()
        : std::domain_error("|epsilon| below Jordan threshold; U is singular, "
                            "use the perturbation expansion") {}
};

// Superpotential has a pole on (0, L); the Dirac lift is refused.
struct irregular_superpotential_error : std::domain_error {
    irregular_superpotential_error()
        : std::domain_error("factorization seed has a node; superpotential "
                            "has a pole and the Dirac form is not applicable") {}
};

}  // namespace dynamo
