#include "frftlab/means.hpp"

#include <cmath>
#include <numbers>

#include "frftlab/convolve.hpp"
#include "frftlab/kernels.hpp"

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLogDamp = 18.420680743952367;  // ln(1e8)
}

MeanSpec MeanSpec::abel(double eps) {
    if (!(eps > 0.0)) throw NumericError("MeanSpec: eps must be > 0");
    MeanSpec s;
    s.kind = MeanKind::Abel;
    s.epsilon = eps;
    return s;
}

MeanSpec MeanSpec::gauss(double eps) {
    if (!(eps > 0.0)) throw NumericError("MeanSpec: eps must be > 0");
    MeanSpec s;
    s.kind = MeanKind::Gauss;
    s.epsilon = eps;
    return s;
}

MeanSpec MeanSpec::custom(double eps, std::function<cplx(double)> phi_freq,
                          std::function<cplx(double)> phi_time, double freq_half_width) {
    if (!(eps > 0.0)) throw NumericError("MeanSpec: eps must be > 0");
    if (!phi_freq) throw NumericError("MeanSpec: CustomPhi needs a frequency profile");
    if (std::abs(phi_freq(0.0) - cplx{1.0, 0.0}) > 1e-12)
        throw NumericError("MeanSpec: Phi(0) must equal 1");
    MeanSpec s;
    s.kind = MeanKind::CustomPhi;
    s.epsilon = eps;
    s.phi_freq = std::move(phi_freq);
    s.phi_time = std::move(phi_time);
    s.freq_half_width = freq_half_width;
    return s;
}

cplx mean_damping(const MeanSpec& spec, const AngleContext& ctx, double x) {
    const double eps = spec.epsilon;
    switch (spec.kind) {
        case MeanKind::Abel:
            return {std::exp(-2.0 * kPi * eps * std::abs(ctx.csc_a) * std::abs(x)), 0.0};
        case MeanKind::Gauss: {
            const double u = eps * x * ctx.csc_a;
            return {std::exp(-4.0 * kPi * kPi * u * u), 0.0};
        }
        case MeanKind::CustomPhi: return spec.phi_freq(eps * x * ctx.csc_a);
    }
    return {0.0, 0.0};
}

EpsilonSchedule::EpsilonSchedule(std::vector<double> v) : values(std::move(v)) {
    if (values.empty()) throw NumericError("epsilon schedule must be non-empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) throw NumericError("epsilon schedule values must be > 0");
        if (i > 0 && !(values[i] < values[i - 1]))
            throw NumericError("epsilon schedule must be strictly decreasing");
    }
}

UniformGrid mean_frequency_grid(const MeanSpec& spec, const UniformGrid& in,
                                const AngleContext& ctx, const UniformGrid& out) {
    const double csc = std::abs(ctx.csc_a);
    const double eps = spec.epsilon;
    double x_damp = 0.0;
    switch (spec.kind) {
        case MeanKind::Abel: x_damp = kLogDamp / (2.0 * kPi * eps * csc); break;
        case MeanKind::Gauss: x_damp = std::sqrt(kLogDamp) / (2.0 * kPi * eps * csc); break;
        case MeanKind::CustomPhi:
            if (!spec.freq_half_width)
                throw NumericError("CustomPhi mean needs freq_half_width");
            x_damp = *spec.freq_half_width / (eps * csc);
            break;
    }
    const double t_in = in.half_width();
    const double t_out = out.half_width();
    // Everything the transform of a well-truncated signal can occupy.
    const double x_cover = std::max(t_in, t_out) + 2.0;
    // Stay inside the alias-free zone of the input sampling.
    const double x_alias = 0.95 * (1.0 / (in.step * csc) - (t_in + t_out));
    const double x_half = std::max(x_cover, std::min(x_damp, x_alias));
    const double step = 0.25 / ((t_in + t_out) * csc);
    // offset nodes: no sample sits at the damping profile's kink at 0
    return symmetric_grid_offset(x_half, step);
}

Signal phi_mean(const Signal& f, const MeanSpec& spec, double alpha, const UniformGrid& out) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("phi_mean requires a Generic order");
    const UniformGrid freq = mean_frequency_grid(spec, f.grid, ctx, out);
    detail::require_inverse_resolved(freq, ctx, f.grid.half_width() + out.half_width());
    Signal tf = detail::frft_fast_unchecked(f, ctx, freq);
    for (std::size_t k = 0; k < tf.size(); ++k)
        tf.samples[k] *= mean_damping(spec, ctx, tf.grid.point(k));
    AngleContext inv = angle_context(-alpha);
    return detail::frft_fast_unchecked(tf, inv, out);
}

Signal mean_via_convolution(const Signal& f, const MeanSpec& spec, double alpha,
                            std::optional<UniformGrid> kernel_grid) {
    const double eps = spec.epsilon;
    const double t_f = f.grid.half_width();
    UniformGrid kg = kernel_grid.value_or(
        symmetric_grid(std::max(2.0 * t_f, 50.0 * eps), f.grid.step));
    Signal kernel;
    switch (spec.kind) {
        case MeanKind::Abel: kernel = poisson_kernel(eps, kg); break;
        case MeanKind::Gauss: kernel = weierstrass_kernel(eps * eps, kg); break;
        case MeanKind::CustomPhi: {
            if (!spec.phi_time)
                throw NumericError("CustomPhi convolution route needs the time kernel F[Phi]");
            const auto& phi = spec.phi_time;
            kernel = make_signal(kg, [&phi, eps](double x) {
                return phi(-x / eps) / eps;  // reflected dilation
            });
            break;
        }
    }
    return frac_convolve(f, kernel, alpha);
}

std::vector<RecoverEntry> recover(const Signal& transformed, double alpha, MeanKind kind,
                                  const EpsilonSchedule& schedule, const UniformGrid& out,
                                  const std::optional<Signal>& reference) {
    if (kind == MeanKind::CustomPhi)
        throw NumericError("recover supports the Abel and Gauss kinds");
    AngleContext inv = angle_context(-alpha);
    if (!inv.generic()) throw NumericError("recover requires a Generic order");
    AngleContext fwd = angle_context(alpha);
    if (reference && !reference->grid.same_as(out))
        throw NumericError("recover: reference must live on the output grid");

    detail::require_inverse_resolved(transformed.grid, fwd, 2.0 * out.half_width());

    std::vector<RecoverEntry> entries;
    entries.reserve(schedule.values.size());
    for (double eps : schedule.values) {
        MeanSpec spec;
        spec.kind = kind;
        spec.epsilon = eps;
        Signal damped = transformed;
        for (std::size_t k = 0; k < damped.size(); ++k)
            damped.samples[k] *= mean_damping(spec, fwd, damped.grid.point(k));
        RecoverEntry e;
        e.eps = eps;
        e.recovered = detail::frft_fast_unchecked(damped, inv, out);
        if (reference) e.l1_error = lp_norm(subtract(e.recovered, *reference), LpExponent(1.0));
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace frftlab
