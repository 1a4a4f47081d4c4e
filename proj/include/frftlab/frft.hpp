#ifndef FRFTLAB_FRFT_HPP
#define FRFTLAB_FRFT_HPP

#include <optional>

#include "frftlab/angle.hpp"
#include "frftlab/signal.hpp"

namespace frftlab {

enum class FrftMethod { DirectQuadrature, FastChirp };

struct FrftOptions {
    FrftMethod method = FrftMethod::FastChirp;
    // Caller-declared bandwidth estimate of the signal (cycles per unit);
    // defaults to half the grid Nyquist rate, 1/(4*step).
    std::optional<double> bandwidth;
    double delta_sing = 1e-3;
};

double default_bandwidth(const UniformGrid& g);

/// Symmetric output grid matching the input grid's extent and step.
UniformGrid default_output_grid(const UniformGrid& in);

/// K_alpha(x,t) = A_alpha * exp(2*pi*i*(t^2/2*cot - x*t*csc + x^2/2*cot)).
/// Symmetric in (x,t) to the last bit. Generic orders only.
cplx kernel_value(const AngleContext& ctx, double x, double t);

/// Samplewise product with exp(sign*i*pi*cot(alpha)*t^2). Modulus-preserving.
Signal chirp_multiply(const Signal& f, const AngleContext& ctx, int sign);

// step*(B_f + T*|cot| + X*|csc|); must stay below 1/2 or the kernel
// quadrature undersamples its own oscillation.
double resolution_bound(const UniformGrid& in, const UniformGrid& out, const AngleContext& ctx,
                        double bandwidth);

/// Direct O(N_in*N_out) kernel quadrature; the oracle path.
Signal frft_direct(const Signal& f, const AngleContext& ctx, const UniformGrid& out,
                   std::optional<double> bandwidth = {});

/// Chirp - Fourier(chirp-z) - chirp decomposition; O((N+M) log(N+M)).
Signal frft_fast(const Signal& f, const AngleContext& ctx, const UniformGrid& out,
                 std::optional<double> bandwidth = {});

/// Full case split over the order: identity / reflection / kernel quadrature.
/// Refuses NearSingular orders.
Signal frft(const Signal& f, double alpha, const UniformGrid& out, const FrftOptions& opt = {});

Signal inverse_frft(const Signal& f, double alpha, const UniformGrid& out,
                    const FrftOptions& opt = {});

struct HausdorffYoungReport {
    double lhs = 0.0;  // ||F_alpha f||_{p'}
    double rhs = 0.0;  // |A_alpha|^(2/p-1) ||f||_p
    bool satisfied = false;
};

HausdorffYoungReport hausdorff_young_check(const Signal& f, double alpha, const LpExponent& p,
                                           const FrftOptions& opt = {});

namespace detail {
// Transform legs used by the summability/multiplier machinery. The chirp
// factors of a transform-domain signal cancel against K_{-alpha}, so the
// worst-case oscillation bound does not apply; callers validate with
// require_inverse_resolved (inversion legs) or an alias-free grid cap
// (forward legs onto damped-inversion grids).
Signal frft_fast_unchecked(const Signal& f, const AngleContext& ctx, const UniformGrid& out);

// step * (time_half_width_total) * |csc| < 1/2, the Nyquist rate of the
// inversion integrand after chirp cancellation.
void require_inverse_resolved(const UniformGrid& freq, const AngleContext& ctx,
                              double time_half_width_total);
}  // namespace detail

}  // namespace frftlab

#endif
