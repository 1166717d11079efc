#pragma once

#include <vector>

namespace dynamo {

// Fourth-order first derivative of interior-node samples with homogeneous
// Dirichlet values at both ends of the box (ghosts are exact zeros; offset
// stencils cover the two nodes whose centered stencil would leave the box).
std::vector<double> derivative4_dirichlet(const std::vector<double>& f, double h);

}  // namespace dynamo
