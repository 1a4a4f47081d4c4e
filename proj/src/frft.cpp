#include "frftlab/frft.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "frftlab/fft.hpp"

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;

AngleContext require_order(double alpha, double delta_sing) {
    AngleContext ctx = angle_context(alpha, delta_sing);
    if (ctx.cls == AngleClass::NearSingular) {
        std::ostringstream ss;
        ss << "near-singular order alpha=" << ctx.alpha << " (within delta_sing=" << delta_sing
           << " of a multiple of pi); kernel quadrature is meaningless there, compose the"
              " transform at alpha-pi with a reflection instead";
        throw NumericError(ss.str());
    }
    return ctx;
}
}  // namespace

double default_bandwidth(const UniformGrid& g) { return 0.25 / g.step; }

UniformGrid default_output_grid(const UniformGrid& in) {
    return symmetric_grid(in.half_width(), in.step);
}

cplx kernel_value(const AngleContext& ctx, double x, double t) {
    if (!ctx.generic())
        throw NumericError(std::string("kernel undefined for class ") + angle_class_name(ctx.cls));
    const double phase = kPi * ctx.cot_a * (t * t + x * x) - 2.0 * kPi * ctx.csc_a * (x * t);
    return ctx.a_alpha * std::polar(1.0, phase);
}

Signal chirp_multiply(const Signal& f, const AngleContext& ctx, int sign) {
    if (ctx.cls != AngleClass::Generic && ctx.cls != AngleClass::NearSingular)
        throw NumericError("chirp_multiply requires a finite cot(alpha)");
    Signal out = f;
    const double c = static_cast<double>(sign) * kPi * ctx.cot_a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = out.grid.point(i);
        out.samples[i] *= std::polar(1.0, c * t * t);
    }
    return out;
}

double resolution_bound(const UniformGrid& in, const UniformGrid& out, const AngleContext& ctx,
                        double bandwidth) {
    const double t_half = in.half_width();
    const double x_max = out.half_width();
    return in.step * (bandwidth + t_half * std::abs(ctx.cot_a) + x_max * std::abs(ctx.csc_a));
}

static void require_resolved(const Signal& f, const AngleContext& ctx, const UniformGrid& out,
                             std::optional<double> bandwidth) {
    const double bw = bandwidth.value_or(default_bandwidth(f.grid));
    const double bound = resolution_bound(f.grid, out, ctx, bw);
    if (!(bound < 0.5)) {
        std::ostringstream ss;
        ss << "aliasing risk: step*(B + T|cot| + X|csc|) = " << bound
           << " >= 0.5 (step=" << f.grid.step << ", B=" << bw << ", alpha=" << ctx.alpha << ")";
        throw NumericError(ss.str());
    }
}

Signal frft_direct(const Signal& f, const AngleContext& ctx, const UniformGrid& out,
                   std::optional<double> bandwidth) {
    if (!ctx.generic())
        throw NumericError(std::string("frft_direct requires a Generic order, got ") +
                           angle_class_name(ctx.cls));
    require_resolved(f, ctx, out, bandwidth);

    const std::size_t n = f.size();
    std::vector<double> tphase(n), w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.grid.point(j);
        tphase[j] = kPi * ctx.cot_a * t * t;
        w[j] = trapezoid_weight(f.grid, j);
    }
    std::vector<cplx> res(out.count);
    for (std::size_t k = 0; k < out.count; ++k) {
        const double x = out.point(k);
        const double xphase = kPi * ctx.cot_a * x * x;
        const double xc = 2.0 * kPi * ctx.csc_a * x;
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double t = f.grid.point(j);
            acc += w[j] * f.samples[j] * std::polar(1.0, tphase[j] + xphase - xc * t);
        }
        res[k] = ctx.a_alpha * acc;
    }
    return Signal(out, std::move(res));
}

static Signal frft_fast_impl(const Signal& f, const AngleContext& ctx, const UniformGrid& out) {
    const std::size_t n = f.size();
    std::vector<cplx> g(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.grid.point(j);
        g[j] = trapezoid_weight(f.grid, j) * f.samples[j] *
               std::polar(1.0, kPi * ctx.cot_a * t * t);
    }
    auto s = chirpz_sum(g, f.grid.start, f.grid.step, out.start * ctx.csc_a,
                        out.step * ctx.csc_a, out.count);
    for (std::size_t k = 0; k < out.count; ++k) {
        const double x = out.point(k);
        s[k] *= ctx.a_alpha * std::polar(1.0, kPi * ctx.cot_a * x * x);
    }
    return Signal(out, std::move(s));
}

Signal frft_fast(const Signal& f, const AngleContext& ctx, const UniformGrid& out,
                 std::optional<double> bandwidth) {
    if (!ctx.generic())
        throw NumericError(std::string("frft_fast requires a Generic order, got ") +
                           angle_class_name(ctx.cls));
    require_resolved(f, ctx, out, bandwidth);
    return frft_fast_impl(f, ctx, out);
}

namespace detail {
Signal frft_fast_unchecked(const Signal& f, const AngleContext& ctx, const UniformGrid& out) {
    if (!ctx.generic()) throw NumericError("transform leg needs a Generic order");
    return frft_fast_impl(f, ctx, out);
}

void require_inverse_resolved(const UniformGrid& freq, const AngleContext& ctx,
                              double time_half_width_total) {
    const double rate = freq.step * time_half_width_total * std::abs(ctx.csc_a);
    if (!(rate < 0.5)) {
        std::ostringstream ss;
        ss << "aliasing risk on inversion leg: freq_step*T*|csc| = " << rate << " >= 0.5";
        throw NumericError(ss.str());
    }
}
}  // namespace detail

Signal frft(const Signal& f, double alpha, const UniformGrid& out, const FrftOptions& opt) {
    AngleContext ctx = require_order(alpha, opt.delta_sing);
    switch (ctx.cls) {
        case AngleClass::Identity: return resample(f, out);
        case AngleClass::Reflection: return resample(reflect(f), out);
        default: break;
    }
    return opt.method == FrftMethod::DirectQuadrature ? frft_direct(f, ctx, out, opt.bandwidth)
                                                      : frft_fast(f, ctx, out, opt.bandwidth);
}

Signal inverse_frft(const Signal& f, double alpha, const UniformGrid& out,
                    const FrftOptions& opt) {
    return frft(f, -alpha, out, opt);
}

HausdorffYoungReport hausdorff_young_check(const Signal& f, double alpha, const LpExponent& p,
                                           const FrftOptions& opt) {
    if (p.p > 2.0) throw NumericError("invalid exponent: Hausdorff-Young needs 1 <= p <= 2");
    AngleContext ctx = require_order(alpha, opt.delta_sing);
    if (!ctx.generic()) throw NumericError("hausdorff_young_check requires a Generic order");
    Signal tf = frft(f, alpha, default_output_grid(f.grid), opt);
    HausdorffYoungReport r;
    r.lhs = lp_norm(tf, p.dual());
    r.rhs = std::pow(std::abs(ctx.a_alpha), 2.0 / p.p - 1.0) * lp_norm(f, p);
    r.satisfied = r.lhs <= r.rhs * (1.0 + 1e-3);
    return r;
}

}  // namespace frftlab
