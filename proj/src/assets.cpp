#include "frftlab/assets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
}

StaircaseSignal staircase_signal(std::size_t n_max, const UniformGrid& grid) {
    if (n_max < 1) throw NumericError("staircase_signal: n_max must be >= 1");
    StaircaseSignal out;
    out.signal = zero_signal(grid);
    const double h = grid.step;
    const double lo_edge = grid.start - 0.5 * h;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double dn = static_cast<double>(n);
        out.l1_mass += 1.0 / (dn * dn);
        out.l2_mass_sq += 1.0 / dn;
        // Walk the block [n, n + 1/n^3) cell by cell in width coordinates;
        // widths drop below the ulp of the abscissa long before n_max, so the
        // remaining width is tracked on its own scale.
        double pos = dn - lo_edge;
        double remaining = 1.0 / (dn * dn * dn);
        if (pos < 0.0) {  // block begins before the grid; drop the part outside
            const double drop = std::min(remaining, -pos);
            remaining -= drop;
            pos = 0.0;
        }
        auto i = static_cast<long long>(std::floor(pos / h));
        double cap = (static_cast<double>(i) + 1.0) * h - pos;
        while (remaining > 0.0 && i >= 0 && i < static_cast<long long>(grid.count)) {
            const double take = std::min(cap, remaining);
            out.signal.samples[static_cast<std::size_t>(i)] += dn * take / h;
            remaining -= take;
            cap = h;
            ++i;
        }
    }
    return out;
}

cplx staircase_frft_series(double x, double alpha, std::size_t n_terms) {
    if (n_terms < 1) throw NumericError("staircase_frft_series: n_terms must be >= 1");
    if (std::abs(x) < 1e-12)
        throw NumericError("staircase_frft_series: removable singularity at x = 0");
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("staircase_frft_series requires a Generic order");
    cplx sum{0.0, 0.0};
    for (std::size_t n = 1; n <= n_terms; ++n) {
        const double dn = static_cast<double>(n);
        const cplx osc = std::polar(dn, -2.0 * kPi * dn * x);
        const cplx gap = cplx{1.0, 0.0} - std::polar(1.0, -2.0 * kPi * x / (dn * dn * dn));
        sum += osc * gap;
    }
    const cplx pref = ctx.a_alpha * std::polar(1.0, kPi * ctx.cot_a * x * x) /
                      (cplx{0.0, 2.0 * kPi * x});
    return pref * sum;
}

ExpChirpPair exp_chirp_pair(double alpha) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("exp_chirp_pair requires a Generic order");
    const double cot = ctx.cot_a;
    const double csc = ctx.csc_a;
    const cplx amp = ctx.a_alpha;
    ExpChirpPair pair;
    pair.time_fn = [cot](double t) -> cplx {
        if (t < 0.0) return {0.0, 0.0};
        return std::polar(std::exp(-2.0 * kPi * t), -kPi * cot * t * t);
    };
    pair.frft_fn = [cot, csc, amp](double x) -> cplx {
        return amp * std::polar(1.0, kPi * cot * x * x) /
               (2.0 * kPi * cplx{1.0, x * csc});
    };
    return pair;
}

cplx chirp_u(double t) {
    if (t == 0.0) throw NumericError("chirp_u is singular at t = 0");
    const double a = std::abs(t);
    const double mag = a < 1.0 ? 1.0 / std::sqrt(a) : 1.0 / (t * t);
    return std::polar(mag, -kPi * t * t);
}

cplx chirp_u_frft(double w, FresnelVariant variant, bool with_amplitude_factor,
                  const SeriesSpec& spec) {
    if (w == 0.0) throw NumericError("chirp_u_frft: closed form is singular at w = 0");
    const double aw = std::abs(w);
    const double rt = std::sqrt(aw);
    const double c = fresnel_variant_value(variant, std::pow(2.0, 1.25) * rt, spec);
    const double s2 = std::sqrt(2.0);
    const double bracket = c / (std::pow(2.0, 0.25) * rt) - s2 * kPi * kPi * aw +
                           2.0 * s2 * kPi * w * sine_integral(2.0 * s2 * kPi * w, spec) +
                           std::cos(2.0 * s2 * kPi * w);
    cplx out = 2.0 * std::polar(1.0, kPi * w * w) * bracket;
    if (with_amplitude_factor) out *= angle_context(kQuarterPi).a_alpha;
    return out;
}

GradedPartition graded_symmetric_partition(double t_max, double smooth_step,
                                           int pts_per_octave) {
    if (!(t_max > 1.0)) throw NumericError("graded partition needs t_max > 1");
    GradedPartition q;
    auto add_segment = [&q](double a, double b, std::size_t n) {
        const double h = (b - a) / static_cast<double>(n);
        for (std::size_t i = 0; i <= n; ++i) {
            const double t = a + static_cast<double>(i) * h;
            const double w = (i == 0 || i == n) ? 0.5 * h : h;
            q.nodes.push_back(t);
            q.weights.push_back(w);
            q.nodes.push_back(-t);
            q.weights.push_back(w);
        }
    };
    for (int k = 44; k >= 0; --k)
        add_segment(std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k),
                    static_cast<std::size_t>(pts_per_octave));
    const auto n_smooth =
        static_cast<std::size_t>(std::ceil((t_max - 1.0) / smooth_step));
    add_segment(1.0, t_max, std::max<std::size_t>(n_smooth, 1));
    return q;
}

cplx frft_pointwise_direct(const std::function<cplx(double)>& u, const AngleContext& ctx,
                           double x, const GradedPartition& q) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * u(q.nodes[i]) * kernel_value(ctx, x, q.nodes[i]);
    return acc;
}

double abs_mass(const std::function<cplx(double)>& u, const GradedPartition& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * std::abs(u(q.nodes[i]));
    return acc;
}

ChirpAdjudication adjudicate_chirp_u_frft(double target) {
    ChirpAdjudication adj;
    adj.target = target;
    const AngleContext ctx = angle_context(kQuarterPi);
    const GradedPartition q = graded_symmetric_partition(40.0, 1.0 / 1024.0);

    std::vector<double> ws;
    for (double w : {0.2, 0.35, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        ws.push_back(w);
        ws.push_back(-w);
    }
    std::vector<cplx> oracle(ws.size());
    double oracle_peak = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        oracle[i] = frft_pointwise_direct(chirp_u, ctx, ws[i], q);
        oracle_peak = std::max(oracle_peak, std::abs(oracle[i]));
    }

    for (FresnelVariant v : {FresnelVariant::SineIntegral, FresnelVariant::CosineSeries,
                             FresnelVariant::CosineNormalized}) {
        for (bool amp : {false, true}) {
            double worst = 0.0;
            for (std::size_t i = 0; i < ws.size(); ++i)
                worst = std::max(worst,
                                 std::abs(chirp_u_frft(ws[i], v, amp) - oracle[i]) / oracle_peak);
            adj.residuals.push_back({v, amp, worst});
        }
    }
    adj.best = *std::min_element(adj.residuals.begin(), adj.residuals.end(),
                                 [](const ChirpFormulaResidual& a, const ChirpFormulaResidual& b) {
                                     return a.max_rel_err < b.max_rel_err;
                                 });
    for (const auto& r : adj.residuals) {
        if (!r.with_amplitude_factor && r.max_rel_err <= target) adj.stated_form_ok = true;
        if (r.with_amplitude_factor && r.variant == FresnelVariant::CosineNormalized)
            adj.corrected_form_ok = r.max_rel_err <= target;
    }
    return adj;
}

std::string chirp_adjudication_csv(const ChirpAdjudication& a) {
    std::string s = "variant,amplitude_factor,max_rel_err,within_target\n";
    char buf[160];
    for (const auto& r : a.residuals) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%.6g,%d\n", fresnel_variant_name(r.variant),
                      r.with_amplitude_factor ? 1 : 0, r.max_rel_err,
                      r.max_rel_err <= a.target ? 1 : 0);
        s += buf;
    }
    return s;
}

double staircase_series_compare(double alpha, std::size_t n_max) {
    AngleContext ctx = angle_context(alpha);
    if (!ctx.generic()) throw NumericError("staircase_series_compare needs a Generic order");
    const double h = 1.0 / 1024.0;
    const double t_hi = static_cast<double>(n_max) + 2.0;
    UniformGrid grid(0.0, h, static_cast<std::size_t>(std::ceil(t_hi / h)) + 1);
    const Signal f = staircase_signal(n_max, grid).signal;

    double worst = 0.0, peak = 0.0;
    std::vector<double> xs;
    for (double x : {0.2, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        xs.push_back(x);
        xs.push_back(-x);
    }
    std::vector<cplx> direct(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f.samples[j] == cplx{0.0, 0.0}) continue;
            acc += trapezoid_weight(grid, j) * f.samples[j] *
                   kernel_value(ctx, xs[i], grid.point(j));
        }
        direct[i] = acc;
        peak = std::max(peak, std::abs(acc));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        worst = std::max(worst, std::abs(staircase_frft_series(xs[i], alpha, n_max) - direct[i]));
    return worst;
}

}  // namespace frftlab
