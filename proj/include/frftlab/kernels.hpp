#ifndef FRFTLAB_KERNELS_HPP
#define FRFTLAB_KERNELS_HPP

#include "frftlab/signal.hpp"

namespace frftlab {

/// P_eps(x) = (1/pi) * eps / (eps^2 + x^2). Unit mass, heavy tails.
Signal poisson_kernel(double eps, const UniformGrid& grid);

/// W_eps(x) = (4*pi*eps)^(-1/2) * exp(-x^2 / (4*eps)). Unit mass.
Signal weierstrass_kernel(double eps, const UniformGrid& grid);

/// L1 dilation (1/eps)*phi(x/eps) on phi's own grid. Exact when x/eps lands on
/// grid nodes (integer 1/eps on zero-anchored grids); linear interpolation
/// otherwise; zero outside the grid.
Signal dilate(const Signal& phi, double eps);

}  // namespace frftlab

#endif
