#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frftlab/assets.hpp"
#include "frftlab/convolve.hpp"
#include "frftlab/kernels.hpp"
#include "frftlab/means.hpp"
#include "frftlab/suites.hpp"

using namespace frftlab;
namespace {
constexpr double kPi = std::numbers::pi;

Signal random_signal(std::mt19937_64& rng, const UniformGrid& g) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> s(g.count);
    for (auto& v : s) v = cplx{u(rng), u(rng)};
    return Signal(g, std::move(s));
}

// brute-force double sum with the same uniform-h weighting
Signal convolve_oracle(const Signal& f, const Signal& g, double cot) {
    const double h = f.grid.step;
    Signal out = zero_signal(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double x = f.grid.point(k);
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double t = f.grid.point(j);
            const double arg = (x - t - g.grid.start) / h;
            const double ri = std::round(arg);
            if (std::abs(arg - ri) > 1e-6 || ri < 0.0 ||
                ri >= static_cast<double>(g.size()))
                continue;
            acc += f.samples[j] * std::polar(1.0, kPi * cot * t * t) *
                   g.samples[static_cast<std::size_t>(ri)];
        }
        out.samples[k] = h * acc * std::polar(1.0, -kPi * cot * x * x);
    }
    return out;
}

double rel_l2(const Signal& got, const Signal& want) {
    return lp_norm(subtract(got, want), LpExponent(2.0)) / lp_norm(want, LpExponent(2.0));
}
}  // namespace

TEST_CASE("poisson kernel closed form") {
    UniformGrid g = symmetric_grid(50.0, 1.0 / 64.0);
    Signal p = poisson_kernel(0.5, g);
    CHECK(p.samples[(g.count - 1) / 2].real() == doctest::Approx(1.0 / (kPi * 0.5)));
    CHECK(lp_norm(p, LpExponent(1.0)) == doctest::Approx(1.0).epsilon(1e-2));
    for (std::size_t i = 0; i < g.count; ++i)  // evenness
        CHECK(p.samples[i] == p.samples[g.count - 1 - i]);
    CHECK_THROWS_AS(poisson_kernel(0.0, g), NumericError);
}

TEST_CASE("weierstrass kernel closed form, mass, variance") {
    UniformGrid g = symmetric_grid(12.0, 1.0 / 64.0);
    Signal w = weierstrass_kernel(1.0, g);
    CHECK(w.samples[(g.count - 1) / 2].real() ==
          doctest::Approx(1.0 / std::sqrt(4.0 * kPi)));
    CHECK(lp_norm(w, LpExponent(1.0)) == doctest::Approx(1.0).epsilon(1e-9));
    // second moment of the heat kernel at time eps is 2*eps
    for (double eps : {0.5, 1.0}) {
        Signal we = weierstrass_kernel(eps, g);
        double var = 0.0;
        for (std::size_t i = 0; i < g.count; ++i) {
            const double x = g.point(i);
            var += trapezoid_weight(g, i) * x * x * we.samples[i].real();
        }
        CHECK(var == doctest::Approx(2.0 * eps).epsilon(1e-6));
    }
    CHECK_THROWS_AS(weierstrass_kernel(-1.0, g), NumericError);
}

TEST_CASE("dilation preserves mass and matches closed-form scaling") {
    UniformGrid g = symmetric_grid(50.0, 0.05);
    Signal p1 = poisson_kernel(1.0, g);

    Signal same = dilate(p1, 1.0);
    for (std::size_t i = 0; i < g.count; ++i) CHECK(same.samples[i] == p1.samples[i]);

    // P_eps(x) = (1/eps) P_1(x/eps) wherever x/eps stays on the grid
    Signal d = dilate(p1, 0.5);
    Signal p05 = poisson_kernel(0.5, g);
    for (std::size_t i = 0; i < g.count; ++i) {
        if (std::abs(g.point(i)) > 24.0) continue;
        CHECK(std::abs(d.samples[i] - p05.samples[i]) < 1e-12);
    }

    UniformGrid gw = symmetric_grid(12.0, 1.0 / 64.0);
    Signal w1 = weierstrass_kernel(1.0, gw);
    CHECK(lp_norm(dilate(w1, 0.5), LpExponent(1.0)) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(dilate(p1, 0.0), NumericError);
}

TEST_CASE("fractional convolution equals the double-sum oracle") {
    std::mt19937_64 rng(17);
    UniformGrid g = symmetric_grid(2.0, 1.0 / 32.0);  // 129 points
    Signal f = random_signal(rng, g);
    Signal k = random_signal(rng, g);
    for (double alpha : {kPi / 2.0, 0.8, 2.4}) {
        const double cot = angle_context(alpha).cot_a;
        CHECK(rel_l2(frac_convolve(f, k, alpha), convolve_oracle(f, k, cot)) < 1e-12);
    }
}

TEST_CASE("order pi/2 degenerates to ordinary convolution") {
    std::mt19937_64 rng(19);
    UniformGrid g = symmetric_grid(2.0, 1.0 / 32.0);
    Signal f = random_signal(rng, g);
    Signal k = random_signal(rng, g);
    Signal frac = frac_convolve(f, k, kPi / 2.0);
    Signal plain = convolve_oracle(f, k, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(frac.samples[i] - plain.samples[i]) < 1e-12);
}

TEST_CASE("discrete delta is the identity element") {
    std::mt19937_64 rng(23);
    UniformGrid g = symmetric_grid(2.0, 1.0 / 32.0);
    Signal f = random_signal(rng, g);
    Signal delta = zero_signal(g);
    delta.samples[(g.count - 1) / 2] = cplx{1.0 / g.step, 0.0};  // unit quadrature mass
    Signal out = frac_convolve(f, delta, 1.2);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(out.samples[i] - f.samples[i]) < 1e-10);
}

TEST_CASE("chirp commutation is the construction") {
    // f *_a g computed independently as demodulate(convolve(modulate(f), g))
    std::mt19937_64 rng(29);
    UniformGrid g = symmetric_grid(2.0, 1.0 / 32.0);
    Signal f = random_signal(rng, g);
    Signal k = random_signal(rng, g);
    const double alpha = 0.6;
    AngleContext ctx = angle_context(alpha);
    Signal mf = chirp_multiply(f, ctx, +1);
    Signal conv = convolve_oracle(mf, k, 0.0);
    Signal rhs = chirp_multiply(conv, ctx, -1);
    CHECK(rel_l2(frac_convolve(f, k, alpha), rhs) < 1e-12);
}

TEST_CASE("convolution rejects incompatible grids") {
    UniformGrid g(0.0, 0.1, 32);
    UniformGrid other(0.0, 0.2, 32);
    UniformGrid off_lattice(0.05 / 3.0, 0.1, 32);
    Signal f = zero_signal(g);
    CHECK_THROWS_AS(frac_convolve(f, zero_signal(other), 1.0), NumericError);
    CHECK_THROWS_AS(frac_convolve(f, zero_signal(off_lattice), 1.0), NumericError);
    CHECK_THROWS_AS(frac_convolve(f, zero_signal(g), kPi + 1e-5), NumericError);
}

TEST_CASE("approximate identity error decreases along the schedule") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 64.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal w1 = weierstrass_kernel(1.0, g);
    double prev = 1e300;
    for (double eps : {1.0, 0.1, 0.01}) {
        auto r = approx_identity_error(f, w1, 0.9, eps, LpExponent(1.0));
        CHECK_FALSE(r.has_warning());
        CHECK(r.value < prev);
        prev = r.value;
    }
    // zero signal stays zero
    for (double eps : {1.0, 0.1}) {
        auto r = approx_identity_error(zero_signal(g), w1, 0.9, eps, LpExponent(1.0));
        CHECK(r.value == 0.0);
    }
}

TEST_CASE("approximate identity error equals an independent quadrature") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 64.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal w1 = weierstrass_kernel(1.0, g);
    const double eps = 0.1, alpha = 0.9;
    auto r = approx_identity_error(f, w1, alpha, eps, LpExponent(1.0));
    // oracle: pointwise difference, trapezoid-summed here
    Signal conv = frac_convolve(f, dilate(w1, eps), alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.count; ++i)
        acc += trapezoid_weight(g, i) * std::abs(conv.samples[i] - f.samples[i]);
    CHECK(r.value == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("mass warning when the kernel does not integrate to one") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 64.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal half = scale(weierstrass_kernel(1.0, g), cplx{0.5, 0.0});
    auto r = approx_identity_error(f, half, 0.9, 0.1, LpExponent(1.0));
    CHECK(r.has_warning());
    CHECK(r.warning.find("mass") != std::string::npos);
}

TEST_CASE("mean spec validation") {
    CHECK_THROWS_AS(MeanSpec::abel(0.0), NumericError);
    CHECK_THROWS_AS(MeanSpec::gauss(-1.0), NumericError);
    CHECK_THROWS_AS(MeanSpec::custom(
                        0.1, [](double) { return cplx{0.5, 0.0}; },
                        [](double) { return cplx{0.0, 0.0}; }, 1.0),
                    NumericError);  // Phi(0) != 1
    CHECK_THROWS_AS(EpsilonSchedule({1.0, 1.0}), NumericError);
    CHECK_THROWS_AS(EpsilonSchedule({0.1, 1.0}), NumericError);
    CHECK_THROWS_AS(EpsilonSchedule(std::vector<double>{}), NumericError);
    CHECK_THROWS_AS(EpsilonSchedule({1.0, -0.5}), NumericError);
}

TEST_CASE("damped inversion of a non-integrable transform stays finite") {
    // the one-sided exponential chirp's transform decays like 1/|x|
    const double alpha = kPi / 3.0;
    UniformGrid g(0.0, 1.0 / 128.0, 1537);  // [0, 12]
    Signal f = make_signal(g, exp_chirp_pair(alpha).time_fn);
    for (double eps : {1.0, 0.25}) {
        Signal m = phi_mean(f, MeanSpec::abel(eps), alpha, g);
        for (const auto& v : m.samples) {
            CHECK(std::isfinite(v.real()));
            CHECK(std::isfinite(v.imag()));
        }
    }
}

TEST_CASE("heavy damping sends the mean to zero") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal m = phi_mean(f, MeanSpec::abel(1e3), 1.0, g);
    CHECK(lp_norm(m, LpExponent(2.0)) < 1e-6 * lp_norm(f, LpExponent(2.0)));
}

TEST_CASE("two-path identity for one order") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid kg = symmetric_grid(16.0, 1.0 / 128.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    const double alpha = kPi / 4.0;
    CHECK(rel_l2(phi_mean(f, MeanSpec::abel(0.01), alpha, g),
                 mean_via_convolution(f, MeanSpec::abel(0.01), alpha, kg)) < 1e-3);
    CHECK(rel_l2(phi_mean(f, MeanSpec::gauss(0.05), alpha, g),
                 mean_via_convolution(f, MeanSpec::gauss(0.05), alpha, kg)) < 1e-3);
}

TEST_CASE("gaussian recovery error at the smallest eps is small") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal conv = mean_via_convolution(f, MeanSpec::abel(0.01), kPi / 2.0,
                                       symmetric_grid(16.0, 1.0 / 128.0));
    const double rel_l1 =
        lp_norm(subtract(conv, f), LpExponent(1.0)) / lp_norm(f, LpExponent(1.0));
    CHECK(rel_l1 < 0.05);
}

TEST_CASE("recover: zero input, validation, monotone trend") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    const EpsilonSchedule schedule;

    auto zero_entries =
        recover(zero_signal(freq), 1.0, MeanKind::Abel, schedule, g, zero_signal(g));
    for (const auto& e : zero_entries) {
        CHECK(lp_norm(e.recovered, LpExponent(2.0)) == 0.0);
        CHECK(*e.l1_error == 0.0);
    }
    CHECK_THROWS_AS(recover(zero_signal(freq), 1.0, MeanKind::CustomPhi, schedule, g, {}),
                    NumericError);

    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    Signal tf = frft(f, 1.0, freq, {});
    auto entries = recover(tf, 1.0, MeanKind::Abel, schedule, g, f);
    REQUIRE(entries.size() == 3);
    CHECK(*entries[1].l1_error < *entries[0].l1_error);
    CHECK(*entries[2].l1_error < *entries[1].l1_error);
}

TEST_CASE("custom phi mean runs both routes") {
    // a gaussian profile as the custom damping: Phi(x) = e^{-pi x^2},
    // F[Phi](x) = e^{-pi x^2}
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    auto spec = MeanSpec::custom(
        0.05, [](double x) { return cplx{std::exp(-kPi * x * x), 0.0}; },
        [](double x) { return cplx{std::exp(-kPi * x * x), 0.0}; }, 2.5);
    Signal a = phi_mean(f, spec, 1.0, g);
    Signal b = mean_via_convolution(f, spec, 1.0, symmetric_grid(16.0, 1.0 / 128.0));
    CHECK(rel_l2(a, b) < 1e-3);
}

TEST_CASE("damped inversion equals a raw kernel-sum evaluation") {
    // phi_mean evaluates the damped integral through chirp-z factorizations;
    // the same trapezoid sum assembled from pointwise kernel values must
    // reproduce it to rounding
    const double alpha = 1.0;
    UniformGrid g = symmetric_grid(3.0, 1.0 / 64.0);
    Signal f = make_signal(g, [](double t) {
        return std::exp(-kPi * t * t) * std::polar(1.0, 2.0 * kPi * 0.7 * t);
    });
    const MeanSpec spec = MeanSpec::abel(0.2);
    AngleContext ctx = angle_context(alpha);
    AngleContext inv = angle_context(-alpha);
    const UniformGrid freq = mean_frequency_grid(spec, g, ctx, g);

    Signal tf = frft_direct(f, ctx, freq, 4.0);
    for (std::size_t k = 0; k < tf.size(); ++k)
        tf.samples[k] *= mean_damping(spec, ctx, tf.grid.point(k));
    Signal want = zero_signal(g);
    for (std::size_t j = 0; j < g.count; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < freq.count; ++k)
            acc += trapezoid_weight(freq, k) * tf.samples[k] *
                   kernel_value(inv, g.point(j), freq.point(k));
        want.samples[j] = acc;
    }
    Signal got = phi_mean(f, spec, alpha, g);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.count; ++j)
        worst = std::max(worst, std::abs(got.samples[j] - want.samples[j]));
    CHECK(worst < 1e-10);
}
