#include "frftlab/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;

// sgn with a snap window so cuts intended to land on grid nodes are not
// pushed off by the last bit of sin(alpha).
double sgn_snapped(double d, double scale) {
    if (std::abs(d) <= 1e-9 * std::max(1.0, scale)) return 0.0;
    return d > 0.0 ? 1.0 : -1.0;
}

MultiplierFn band_multiplier(double a, double b) {
    if (!(a < b)) throw NumericError("partial sum: empty interval (need a < b)");
    MultiplierFn m;
    m.sup_bound = 1.0;
    const double scale = std::max(std::abs(a), std::abs(b));
    m.evaluator = [a, b, scale](double x) {
        return cplx{0.5 * (sgn_snapped(x - a, scale) - sgn_snapped(x - b, scale)), 0.0};
    };
    m.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    return m;
}

Signal modulate(const Signal& f, double freq) {
    Signal out = f;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.samples[i] *= std::polar(1.0, 2.0 * kPi * freq * out.grid.point(i));
    return out;
}
}  // namespace

DyadicIntervalAlpha dyadic_interval(int j, int sign, double alpha) {
    if (sign != 1 && sign != -1) throw NumericError("dyadic_interval: sign must be +-1");
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("dyadic_interval: sin(alpha) vanishes");
    const double s = std::sin(ctx.alpha);
    double e1 = std::ldexp(1.0, j) * s;
    double e2 = std::ldexp(1.0, j + 1) * s;
    if (sign < 0) {
        e1 = -e1;
        e2 = -e2;
    }
    DyadicIntervalAlpha iv;
    iv.j = j;
    iv.sign = sign;
    iv.alpha = ctx.alpha;
    iv.lo = std::min(e1, e2);
    iv.hi = std::max(e1, e2);
    return iv;
}

Signal partial_sum_mult(const Signal& f, double a, double b, double alpha,
                        std::optional<UniformGrid> freq_grid, std::optional<double> bandwidth) {
    return apply_multiplier(band_multiplier(a, b), alpha, f,
                            freq_grid.value_or(default_multiplier_grid(f)), bandwidth);
}

Signal partial_sum_mult(const Signal& f, const DyadicIntervalAlpha& interval,
                        std::optional<UniformGrid> freq_grid, std::optional<double> bandwidth) {
    return partial_sum_mult(f, interval.lo, interval.hi, interval.alpha, freq_grid, bandwidth);
}

Signal partial_sum_hilbert(const Signal& f, double a, double b, double alpha,
                           std::optional<UniformGrid> freq_grid, std::optional<double> bandwidth) {
    if (a > b) throw NumericError("partial sum: endpoints out of order");
    if (a == b) return zero_signal(f.grid);  // the two Hilbert terms cancel
    UniformGrid fg = freq_grid.value_or(default_multiplier_grid(f));
    Signal ha = modulate(frac_hilbert_mult(modulate(f, -a), alpha, fg, bandwidth), a);
    Signal hb = modulate(frac_hilbert_mult(modulate(f, -b), alpha, fg, bandwidth), b);
    Signal out = subtract(ha, hb);
    return scale(out, cplx{0.0, 0.5});
}

SquareFunctionResult lp_square_function(const Signal& f, double alpha, int j_min, int j_max,
                                        const LpExponent& p, std::optional<UniformGrid> freq_grid,
                                        std::optional<double> bandwidth) {
    if (j_min > j_max) throw NumericError("lp_square_function: j_min > j_max");
    if (!(p.p > 1.0) || p.is_infinite())
        throw NumericError("lp_square_function needs 1 < p < inf");
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("lp_square_function requires a Generic order");

    const UniformGrid fg = freq_grid.value_or(default_multiplier_grid(f));
    // one forward transform, one inverse per block with nodes inside it
    Signal tf = frft_fast(f, ctx, fg, bandwidth);
    AngleContext inv = angle_context(-alpha);
    detail::require_inverse_resolved(fg, ctx, 2.0 * f.grid.half_width());

    std::vector<double> sq(f.size(), 0.0);
    for (int sign : {+1, -1}) {
        for (int j = j_min; j <= j_max; ++j) {
            const DyadicIntervalAlpha iv = dyadic_interval(j, sign, ctx.alpha);
            const MultiplierFn m = band_multiplier(iv.lo, iv.hi);
            Signal cut = tf;
            bool any = false;
            for (std::size_t k = 0; k < cut.size(); ++k) {
                const cplx w = m.evaluator(cut.grid.point(k));
                cut.samples[k] *= w;
                any = any || (w != cplx{0.0, 0.0} && cut.samples[k] != cplx{0.0, 0.0});
            }
            if (!any) continue;
            Signal block = detail::frft_fast_unchecked(cut, inv, f.grid);
            for (std::size_t i = 0; i < sq.size(); ++i) sq[i] += std::norm(block.samples[i]);
        }
    }
    SquareFunctionResult res;
    std::vector<cplx> s(sq.size());
    for (std::size_t i = 0; i < sq.size(); ++i) s[i] = cplx{std::sqrt(sq[i]), 0.0};
    res.square_fn = Signal(f.grid, std::move(s));
    res.norm = lp_norm(res.square_fn, p);
    const double fn = lp_norm(f, p);
    res.ratio = fn > 0.0 ? res.norm / fn : 0.0;
    return res;
}

}  // namespace frftlab
