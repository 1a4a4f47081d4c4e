#ifndef FRFTLAB_CONVOLVE_HPP
#define FRFTLAB_CONVOLVE_HPP

#include "frftlab/angle.hpp"
#include "frftlab/signal.hpp"

namespace frftlab {

/// Fractional convolution: demodulate(chirp(f) conv g) on f's grid.
/// Grids must share one step and g's nodes must sit on the zero-anchored
/// lattice of that step (so x - t lands on g's grid). Discrete weights are a
/// uniform h per sample (signals are zero outside their grids). Identity and
/// Reflection orders degenerate to ordinary convolution (cot = 0).
Signal frac_convolve(const Signal& f, const Signal& g, double alpha, double delta_sing = 1e-3);

/// || (f *_alpha dilate(phi, eps)) - f ||_p. Warns when the kernel mass
/// strays from 1 by more than 1e-3.
Warned<double> approx_identity_error(const Signal& f, const Signal& phi, double alpha, double eps,
                                     const LpExponent& p);

}  // namespace frftlab

#endif
