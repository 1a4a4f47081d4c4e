#include "frftlab/kernels.hpp"

#include <cmath>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

Signal poisson_kernel(double eps, const UniformGrid& grid) {
    if (!(eps > 0.0)) throw NumericError("poisson_kernel: eps must be > 0");
    return make_signal(grid, [eps](double x) {
        return cplx{eps / (kPi * (eps * eps + x * x)), 0.0};
    });
}

Signal weierstrass_kernel(double eps, const UniformGrid& grid) {
    if (!(eps > 0.0)) throw NumericError("weierstrass_kernel: eps must be > 0");
    const double norm = 1.0 / std::sqrt(4.0 * kPi * eps);
    return make_signal(grid, [eps, norm](double x) {
        return cplx{norm * std::exp(-x * x / (4.0 * eps)), 0.0};
    });
}

Signal dilate(const Signal& phi, double eps) {
    if (!(eps > 0.0)) throw NumericError("dilate: eps must be > 0");
    Signal out = zero_signal(phi.grid);
    const double inv = 1.0 / eps;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.samples[i] = inv * sample_at(phi, out.grid.point(i) * inv);
    return out;
}

}  // namespace frftlab
