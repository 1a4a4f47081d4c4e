#ifndef FRFTLAB_LITTLEWOOD_PALEY_HPP
#define FRFTLAB_LITTLEWOOD_PALEY_HPP

#include "frftlab/multiplier.hpp"

namespace frftlab {

// Frequency block [2^j sin a, 2^{j+1} sin a] (orientation flips with the sign
// of sin a) or its mirror. Consecutive j abut without overlap.
struct DyadicIntervalAlpha {
    int j = 0;
    int sign = +1;
    double alpha = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

DyadicIntervalAlpha dyadic_interval(int j, int sign, double alpha);

/// Sharp band projection: multiplier (sgn(x-a) - sgn(x-b))/2, so samples that
/// land exactly on a cut carry weight 1/2.
Signal partial_sum_mult(const Signal& f, double a, double b, double alpha,
                        std::optional<UniformGrid> freq_grid = {},
                        std::optional<double> bandwidth = {});

Signal partial_sum_mult(const Signal& f, const DyadicIntervalAlpha& interval,
                        std::optional<UniformGrid> freq_grid = {},
                        std::optional<double> bandwidth = {});

/// The same projection assembled from two Hilbert transforms:
/// (i/2)[e^{2pi i a t} H_a(e^{-2pi i a t} f) - e^{2pi i b t} H_a(e^{-2pi i b t} f)].
/// Cuts the transform at [a sin alpha, b sin alpha].
Signal partial_sum_hilbert(const Signal& f, double a, double b, double alpha,
                           std::optional<UniformGrid> freq_grid = {},
                           std::optional<double> bandwidth = {});

struct SquareFunctionResult {
    Signal square_fn;  // (sum over blocks |S_rho f|^2)^(1/2), real-valued
    double norm = 0.0;
    double ratio = 0.0;  // ||square_fn||_p / ||f||_p
};

SquareFunctionResult lp_square_function(const Signal& f, double alpha, int j_min, int j_max,
                                        const LpExponent& p,
                                        std::optional<UniformGrid> freq_grid = {},
                                        std::optional<double> bandwidth = {});

}  // namespace frftlab

#endif
