#ifndef FRFTLAB_SIGNAL_HPP
#define FRFTLAB_SIGNAL_HPP

#include <functional>

#include "frftlab/types.hpp"

namespace frftlab {

using PointFn = std::function<cplx(double)>;

/// Sample f at every grid point. Rejects non-finite samples, naming the index.
Signal make_signal(const UniformGrid& grid, const PointFn& f);

Signal zero_signal(const UniformGrid& grid);

/// Composite-trapezoid weight of node i (step/2 at the ends, step inside).
double trapezoid_weight(const UniformGrid& grid, std::size_t i);

/// (sum_i w_i |f_i|^p)^(1/p); max modulus for p = inf.
double lp_norm(const Signal& f, const LpExponent& p);

/// Trapezoid quadrature of f*g, no conjugation (the multiplication-formula pairing).
cplx inner_product(const Signal& f, const Signal& g);

// Pointwise combinations; grids must agree.
Signal add(const Signal& f, const Signal& g);
Signal subtract(const Signal& f, const Signal& g);
Signal scale(const Signal& f, cplx c);

/// Largest end-sample modulus; diagnostic for compact-support truncation quality.
double boundary_magnitude(const Signal& f);

/// Evaluate f at x by linear interpolation, zero outside the grid.
cplx sample_at(const Signal& f, double x);

/// Resample onto another grid (exact copy when grids coincide).
Signal resample(const Signal& f, const UniformGrid& out);

/// Reflection t -> -t: negated, reversed grid with the same step.
Signal reflect(const Signal& f);

}  // namespace frftlab

#endif
