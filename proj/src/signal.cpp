#include "frftlab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace frftlab {

UniformGrid symmetric_grid(double half_width, double step) {
    const auto n = static_cast<std::size_t>(std::ceil(half_width / step - 1e-12));
    return UniformGrid(-static_cast<double>(n) * step, step, 2 * n + 1);
}

UniformGrid symmetric_grid_offset(double half_width, double step) {
    const auto n = static_cast<std::size_t>(std::ceil(half_width / step - 0.5));
    return UniformGrid(-(static_cast<double>(n) - 0.5) * step, step, 2 * n);
}

Signal make_signal(const UniformGrid& grid, const PointFn& f) {
    std::vector<cplx> s(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        s[i] = f(grid.point(i));
        if (!std::isfinite(s[i].real()) || !std::isfinite(s[i].imag()))
            throw NumericError("non-finite sample at index " + std::to_string(i) +
                               " (t=" + std::to_string(grid.point(i)) + ")");
    }
    return Signal(grid, std::move(s));
}

Signal zero_signal(const UniformGrid& grid) {
    return Signal(grid, std::vector<cplx>(grid.count, cplx{0.0, 0.0}));
}

double trapezoid_weight(const UniformGrid& grid, std::size_t i) {
    if (grid.count == 1) return grid.step;
    return (i == 0 || i + 1 == grid.count) ? 0.5 * grid.step : grid.step;
}

double lp_norm(const Signal& f, const LpExponent& p) {
    if (p.is_infinite()) {
        double m = 0.0;
        for (const auto& v : f.samples) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += trapezoid_weight(f.grid, i) * std::pow(std::abs(f.samples[i]), p.p);
    return std::pow(acc, 1.0 / p.p);
}

cplx inner_product(const Signal& f, const Signal& g) {
    if (!f.grid.same_as(g.grid)) throw NumericError("inner_product: grid mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += trapezoid_weight(f.grid, i) * f.samples[i] * g.samples[i];
    return acc;
}

static void require_same_grid(const Signal& f, const Signal& g, const char* who) {
    if (!f.grid.same_as(g.grid)) throw NumericError(std::string(who) + ": grid mismatch");
}

Signal add(const Signal& f, const Signal& g) {
    require_same_grid(f, g, "add");
    Signal out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += g.samples[i];
    return out;
}

Signal subtract(const Signal& f, const Signal& g) {
    require_same_grid(f, g, "subtract");
    Signal out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] -= g.samples[i];
    return out;
}

Signal scale(const Signal& f, cplx c) {
    Signal out = f;
    for (auto& v : out.samples) v *= c;
    return out;
}

double boundary_magnitude(const Signal& f) {
    return std::max(std::abs(f.samples.front()), std::abs(f.samples.back()));
}

cplx sample_at(const Signal& f, double x) {
    const double u = (x - f.grid.start) / f.grid.step;
    if (u < 0.0 || u > static_cast<double>(f.size() - 1)) return {0.0, 0.0};
    const double fl = std::floor(u);
    auto i = static_cast<std::size_t>(fl);
    const double frac = u - fl;
    if (frac < 1e-9) return f.samples[i];
    if (frac > 1.0 - 1e-9 && i + 1 < f.size()) return f.samples[i + 1];
    if (i + 1 >= f.size()) return f.samples[f.size() - 1];
    return (1.0 - frac) * f.samples[i] + frac * f.samples[i + 1];
}

Signal resample(const Signal& f, const UniformGrid& out) {
    if (f.grid.same_as(out)) return Signal(out, f.samples);
    std::vector<cplx> s(out.count);
    for (std::size_t i = 0; i < out.count; ++i) s[i] = sample_at(f, out.point(i));
    return Signal(out, std::move(s));
}

Signal reflect(const Signal& f) {
    UniformGrid g(-f.grid.back(), f.grid.step, f.grid.count);
    std::vector<cplx> s(f.samples.rbegin(), f.samples.rend());
    return Signal(g, std::move(s));
}

}  // namespace frftlab
