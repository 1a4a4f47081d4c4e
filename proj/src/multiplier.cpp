#include "frftlab/multiplier.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "frftlab/fft.hpp"

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;

double sgn0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

cplx MultiplierFn::derivative(double x) const {
    if (derivative_evaluator) return derivative_evaluator(x);
    const double h = 1e-4 * std::max(1.0, std::abs(x));
    return (evaluator(x + h) - evaluator(x - h)) / (2.0 * h);
}

Signal apply_multiplier(const MultiplierFn& m, double alpha, const Signal& f,
                        const UniformGrid& freq_grid, std::optional<double> bandwidth) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("apply_multiplier requires a Generic order");
    Signal tf = frft_fast(f, ctx, freq_grid, bandwidth);
    for (std::size_t k = 0; k < tf.size(); ++k) {
        const double x = tf.grid.point(k);
        const cplx mv = m.evaluator(x);
        if (std::abs(mv) > m.sup_bound * (1.0 + 1e-9)) {
            std::ostringstream ss;
            ss << "multiplier exceeds its declared sup bound at x=" << x << " (|m|="
               << std::abs(mv) << " > " << m.sup_bound << ")";
            throw NumericError(ss.str());
        }
        tf.samples[k] *= mv;
    }
    AngleContext inv = angle_context(-alpha);
    detail::require_inverse_resolved(freq_grid, ctx, 2.0 * f.grid.half_width());
    return detail::frft_fast_unchecked(tf, inv, f.grid);
}

UniformGrid default_multiplier_grid(const Signal& f) {
    return symmetric_grid(f.grid.half_width() + 2.0, f.grid.step);
}

Signal frac_hilbert_mult(const Signal& f, double alpha, std::optional<UniformGrid> freq_grid,
                         std::optional<double> bandwidth) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) {
        if (ctx.cls == AngleClass::Reflection)
            throw NumericError("fractional Hilbert transform degenerates at alpha = pi "
                               "(zero sign factor)");
        throw NumericError("frac_hilbert_mult requires a Generic order");
    }
    const double orientation = kPi - ctx.alpha;  // sign of (pi - alpha)
    MultiplierFn m;
    m.sup_bound = 1.0;
    m.evaluator = [orientation](double x) {
        return cplx{0.0, -sgn0(orientation * x)};
    };
    m.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };  // piecewise constant
    return apply_multiplier(m, alpha, f, freq_grid.value_or(default_multiplier_grid(f)),
                            bandwidth);
}

Warned<Signal> frac_hilbert_pv(const Signal& f, double alpha) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("frac_hilbert_pv requires a Generic order");

    Warned<Signal> out;
    const double peak = lp_norm(f, LpExponent::infinity());
    if (peak > 0.0 && boundary_magnitude(f) > 1e-3 * peak)
        out.warning = "signal does not decay at the grid boundary; principal-value tails "
                      "are truncated";

    const std::size_t n = f.size();
    std::vector<cplx> g(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.grid.point(j);
        g[j] = f.samples[j] * std::polar(1.0, kPi * ctx.cot_a * t * t);
    }
    // (1/pi) sum_{m!=0} g_{k-m}/m == convolution with the odd kernel 1/m.
    std::vector<cplx> kern(2 * n - 1);
    for (std::size_t i = 0; i < kern.size(); ++i) {
        const auto off = static_cast<double>(i) - static_cast<double>(n - 1);
        kern[i] = off == 0.0 ? cplx{0.0, 0.0} : cplx{1.0 / off, 0.0};
    }
    auto conv = fft_linear_convolve(g, kern);

    std::vector<cplx> res(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = f.grid.point(k);
        res[k] = conv[k + n - 1] / kPi * std::polar(1.0, -kPi * ctx.cot_a * w * w);
    }
    out.value = Signal(f.grid, std::move(res));
    return out;
}

std::string check_report_csv(const CheckReport& r) {
    std::string s = "checker,param,value,pass\n";
    char buf[160];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.15g,%.15g,%d\n", row.checker.c_str(), row.param,
                      row.value, row.pass ? 1 : 0);
        s += buf;
    }
    return s;
}

CheckReport check_mikhlin(const MultiplierFn& m, double bound, const UniformGrid& probe_grid) {
    CheckReport rep;
    double worst = 0.0;
    for (std::size_t i = 0; i < probe_grid.count; ++i) {
        const double x = probe_grid.point(i);
        if (x == 0.0) continue;
        worst = std::max(worst, std::abs(x) * std::abs(m.derivative(x)));
    }
    rep.max_value = worst;
    rep.pass = worst <= bound * (1.0 + 1e-6);
    rep.rows.push_back({"mikhlin", bound, worst, rep.pass});
    return rep;
}

static double annulus_l2sq(const MultiplierFn& m, double lo, double hi, std::size_t pts) {
    // trapezoid of |m'|^2 over [lo,hi] and [-hi,-lo]
    const double h = (hi - lo) / static_cast<double>(pts - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < pts; ++i) {
        const double x = lo + static_cast<double>(i) * h;
        const double w = (i == 0 || i + 1 == pts) ? 0.5 * h : h;
        const double d2 = std::norm(m.derivative(x)) + std::norm(m.derivative(-x));
        acc += w * d2;
    }
    return acc;
}

CheckReport check_hormander(const MultiplierFn& m, const std::vector<double>& r_set) {
    CheckReport rep;
    for (double r : r_set) {
        if (!(r > 0.0)) throw NumericError("check_hormander: annulus radii must be > 0");
        const double v = annulus_l2sq(m, r, 2.0 * r, 513) / r;
        rep.max_value = std::max(rep.max_value, v);
        rep.rows.push_back({"hormander", r, v, true});
    }
    // empirical bound: sqrt of the worst annulus value
    rep.rows.push_back({"hormander_b_empirical", 0.0, std::sqrt(rep.max_value), true});
    return rep;
}

CheckReport check_marcinkiewicz(const MultiplierFn& m, int j_min, int j_max) {
    if (j_min > j_max) throw NumericError("check_marcinkiewicz: empty j range");
    CheckReport rep;
    for (int j = j_min; j <= j_max; ++j) {
        const double lo = std::ldexp(1.0, j), hi = std::ldexp(1.0, j + 1);
        for (int sign : {+1, -1}) {
            const std::size_t pts = 2049;
            const double h = (hi - lo) / static_cast<double>(pts - 1);
            double acc = 0.0;
            for (std::size_t i = 0; i < pts; ++i) {
                const double x = sign * (lo + static_cast<double>(i) * h);
                const double w = (i == 0 || i + 1 == pts) ? 0.5 * h : h;
                acc += w * std::abs(m.derivative(x));
            }
            rep.max_value = std::max(rep.max_value, acc);
            rep.rows.push_back({sign > 0 ? "marcinkiewicz+" : "marcinkiewicz-",
                                static_cast<double>(j), acc, true});
        }
    }
    return rep;
}

BernsteinReport bernstein_norms(const MultiplierFn& m, const UniformGrid& probe_grid) {
    BernsteinReport rep;
    double n2 = 0.0, d2 = 0.0;
    for (std::size_t i = 0; i < probe_grid.count; ++i) {
        const double x = probe_grid.point(i);
        double w = probe_grid.step;
        if (i == 0 || i + 1 == probe_grid.count) w *= 0.5;
        n2 += w * std::norm(m.evaluator(x));
        d2 += w * std::norm(m.derivative(x));
    }
    rep.l2_m = std::sqrt(n2);
    rep.l2_mprime = std::sqrt(d2);
    rep.product = rep.l2_m * rep.l2_mprime;
    return rep;
}

}  // namespace frftlab
