#include "frftlab/special.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;

// Adaptive Simpson; plenty for the post-series fallback ranges.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    // split into unit chunks so oscillatory integrands refine locally
    const double span = b - a;
    const int chunks = std::max(1, static_cast<int>(std::ceil(std::abs(span))));
    double acc = 0.0;
    for (int c = 0; c < chunks; ++c) {
        const double x0 = a + span * c / chunks;
        const double x1 = a + span * (c + 1) / chunks;
        const double fm = f(0.5 * (x0 + x1));
        const double whole = (x1 - x0) / 6.0 * (f(x0) + 4.0 * fm + f(x1));
        acc += simpson(f, x0, x1, f(x0), fm, f(x1), whole, tol / chunks, 48);
    }
    return acc;
}

// Alternating series sum_{n>=0} (-1)^n p_n / d_n with p_{n+1} = p_n * ratio(n).
double alternating_series(double first_power, const std::function<double(std::size_t)>& ratio,
                          const std::function<double(std::size_t)>& divisor,
                          const SeriesSpec& spec) {
    double p = first_power;
    double acc = 0.0;
    for (std::size_t n = 0; n < spec.max_terms; ++n) {
        const double term = p / divisor(n);
        acc += (n % 2 == 0) ? term : -term;
        if (std::abs(term) < spec.target_accuracy) return acc;
        p *= ratio(n);
    }
    throw NumericError("series accuracy unreachable within max_terms");
}
}  // namespace

double fresnel_c(double x, const SeriesSpec& spec) {
    if (x < 0.0) return -fresnel_c(-x, spec);
    if (x == 0.0) return 0.0;
    if (x <= 6.0) {
        // sum (-1)^n x^{4n+3} / ((2n+1)! (4n+3))
        const double x4 = x * x * x * x;
        return alternating_series(
            x * x * x,
            [x4](std::size_t n) {
                const double k = 2.0 * static_cast<double>(n);
                return x4 / ((k + 2.0) * (k + 3.0));
            },
            [](std::size_t n) { return 4.0 * static_cast<double>(n) + 3.0; }, spec);
    }
    return integrate([](double t) { return std::sin(t * t); }, 0.0, x,
                     std::max(spec.target_accuracy, 1e-12));
}

double fresnel_cos(double x, const SeriesSpec& spec) {
    if (x < 0.0) return -fresnel_cos(-x, spec);
    if (x == 0.0) return 0.0;
    if (x <= 6.0) {
        // sum (-1)^n x^{4n+1} / ((2n)! (4n+1))
        const double x4 = x * x * x * x;
        return alternating_series(
            x,
            [x4](std::size_t n) {
                const double k = 2.0 * static_cast<double>(n);
                return x4 / ((k + 1.0) * (k + 2.0));
            },
            [](std::size_t n) { return 4.0 * static_cast<double>(n) + 1.0; }, spec);
    }
    return integrate([](double t) { return std::cos(t * t); }, 0.0, x,
                     std::max(spec.target_accuracy, 1e-12));
}

double fresnel_cos_normalized(double x, const SeriesSpec& spec) {
    // int_0^x cos(pi t^2/2) dt = sqrt(2/pi) * int_0^{x sqrt(pi/2)} cos(u^2) du
    const double s = std::sqrt(kPi / 2.0);
    return fresnel_cos(x * s, spec) / s;
}

double sine_integral(double x, const SeriesSpec& spec) {
    if (x < 0.0) return -sine_integral(-x, spec);
    if (x == 0.0) return 0.0;
    if (x <= 30.0) {
        const double x2 = x * x;
        return alternating_series(
            x,
            [x2](std::size_t n) {
                const double k = 2.0 * static_cast<double>(n);
                return x2 / ((k + 2.0) * (k + 3.0));
            },
            [](std::size_t n) { return 2.0 * static_cast<double>(n) + 1.0; }, spec);
    }
    return integrate([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x,
                     std::max(spec.target_accuracy, 1e-12));
}

const char* fresnel_variant_name(FresnelVariant v) {
    switch (v) {
        case FresnelVariant::SineIntegral: return "fresnel_sine";
        case FresnelVariant::CosineSeries: return "fresnel_cosine";
        case FresnelVariant::CosineNormalized: return "fresnel_cosine_normalized";
    }
    return "?";
}

double fresnel_variant_value(FresnelVariant v, double x, const SeriesSpec& spec) {
    switch (v) {
        case FresnelVariant::SineIntegral: return fresnel_c(x, spec);
        case FresnelVariant::CosineSeries: return fresnel_cos(x, spec);
        case FresnelVariant::CosineNormalized: return fresnel_cos_normalized(x, spec);
    }
    return 0.0;
}

}  // namespace frftlab
