#include "frftlab/convolve.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "frftlab/fft.hpp"
#include "frftlab/kernels.hpp"

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

Signal frac_convolve(const Signal& f, const Signal& g, double alpha, double delta_sing) {
    const double h = f.grid.step;
    if (std::abs(g.grid.step - h) > 1e-9 * h)
        throw NumericError("frac_convolve: step mismatch between f and g");
    const double off = g.grid.start / h;
    const double m0r = std::round(off);
    if (std::abs(off - m0r) > 1e-6)
        throw NumericError("frac_convolve: g's grid is not on the zero-anchored lattice");
    const auto m0 = static_cast<long long>(m0r);

    AngleContext ctx = angle_context(alpha, delta_sing);
    if (ctx.cls == AngleClass::NearSingular)
        throw NumericError("frac_convolve: near-singular order");
    const double cot = ctx.generic() ? ctx.cot_a : 0.0;

    const std::size_t n = f.size();
    std::vector<cplx> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.grid.point(j);
        a[j] = f.samples[j] * std::polar(1.0, kPi * cot * t * t);
    }
    auto c = fft_linear_convolve(a, g.samples);

    // out[k] = e^{-i pi cot x^2} * h * sum_j a_j g((k-j)h), clipped to f's grid.
    std::vector<cplx> res(n, cplx{0.0, 0.0});
    const auto clen = static_cast<long long>(c.size());
    for (std::size_t k = 0; k < n; ++k) {
        const long long idx = static_cast<long long>(k) - m0;
        if (idx < 0 || idx >= clen) continue;
        const double x = f.grid.point(k);
        res[k] = h * c[static_cast<std::size_t>(idx)] * std::polar(1.0, -kPi * cot * x * x);
    }
    return Signal(f.grid, std::move(res));
}

Warned<double> approx_identity_error(const Signal& f, const Signal& phi, double alpha, double eps,
                                     const LpExponent& p) {
    if (!(eps > 0.0)) throw NumericError("approx_identity_error: eps must be > 0");
    Warned<double> out;
    cplx mass{0.0, 0.0};
    for (std::size_t i = 0; i < phi.size(); ++i)
        mass += trapezoid_weight(phi.grid, i) * phi.samples[i];
    if (std::abs(mass - cplx{1.0, 0.0}) > 1e-3) {
        std::ostringstream ss;
        ss << "kernel mass deviates from 1 by " << std::abs(mass - cplx{1.0, 0.0});
        out.warning = ss.str();
    }
    Signal conv = frac_convolve(f, dilate(phi, eps), alpha);
    out.value = lp_norm(subtract(conv, f), p);
    return out;
}

}  // namespace frftlab
