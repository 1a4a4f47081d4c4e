#ifndef FRFTLAB_MEANS_HPP
#define FRFTLAB_MEANS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "frftlab/frft.hpp"

namespace frftlab {

enum class MeanKind { Abel, Gauss, CustomPhi };

// Summability method for the damped inversion integral. The damping profile in
// the transform variable is
//   Abel :  exp(-2*pi*eps*|csc a|*|x|)        (Poisson-kernel route)
//   Gauss:  exp(-4*pi^2*eps^2*x^2*csc^2 a)    (heat-kernel route)
// The Gauss mean at parameter eps equals the Gauss-Weierstrass integral at
// heat parameter eps^2; both parameters appear explicitly in reports.
struct MeanSpec {
    MeanKind kind = MeanKind::Abel;
    double epsilon = 0.1;
    std::function<cplx(double)> phi_freq;   // Phi for CustomPhi; Phi(0) = 1 required
    std::function<cplx(double)> phi_time;   // F[Phi] for the convolution route
    std::optional<double> freq_half_width;  // CustomPhi: damping extent of Phi

    static MeanSpec abel(double eps);
    static MeanSpec gauss(double eps);
    static MeanSpec custom(double eps, std::function<cplx(double)> phi_freq,
                           std::function<cplx(double)> phi_time, double freq_half_width);
};

/// Damping value Phi_alpha(eps*x) at transform abscissa x.
cplx mean_damping(const MeanSpec& spec, const AngleContext& ctx, double x);

/// Strictly decreasing positive eps values; default {1, 0.1, 0.01}.
struct EpsilonSchedule {
    std::vector<double> values{1.0, 0.1, 0.01};

    EpsilonSchedule() = default;
    explicit EpsilonSchedule(std::vector<double> v);
};

/// Internal transform-domain grid for the damped inversion: extent from the
/// damping decay (target 1e-8 at the boundary) capped to the alias-free zone
/// of the input sampling, step from the inversion integrand's Nyquist rate.
UniformGrid mean_frequency_grid(const MeanSpec& spec, const UniformGrid& in,
                                const AngleContext& ctx, const UniformGrid& out);

/// Damped inversion integral int (F_a f)(x) K_{-a}(x,t) Phi_a(eps x) dx.
Signal phi_mean(const Signal& f, const MeanSpec& spec, double alpha, const UniformGrid& out);

/// Same mean through the time domain: f *_alpha reflected dilated kernel
/// (Abel -> P_eps, Gauss at eps -> W_{eps^2}).
Signal mean_via_convolution(const Signal& f, const MeanSpec& spec, double alpha,
                            std::optional<UniformGrid> kernel_grid = {});

struct RecoverEntry {
    double eps = 0.0;
    Signal recovered;
    std::optional<double> l1_error;  // vs the reference, when given
};

/// One damped inversion per schedule entry, straight from transform samples.
std::vector<RecoverEntry> recover(const Signal& transformed, double alpha, MeanKind kind,
                                  const EpsilonSchedule& schedule, const UniformGrid& out,
                                  const std::optional<Signal>& reference = {});

}  // namespace frftlab

#endif
