#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frftlab/littlewood_paley.hpp"
#include "frftlab/means.hpp"
#include "frftlab/multiplier.hpp"
#include "frftlab/suites.hpp"

using namespace frftlab;
namespace {
constexpr double kPi = std::numbers::pi;

double rel_l2(const Signal& got, const Signal& want) {
    return lp_norm(subtract(got, want), LpExponent(2.0)) / lp_norm(want, LpExponent(2.0));
}

Signal gaussian_atom(const UniformGrid& g, double c, double nu) {
    return make_signal(g, [c, nu](double t) {
        return std::exp(-kPi * (t - c) * (t - c)) * std::polar(1.0, 2.0 * kPi * nu * t);
    });
}
}  // namespace

TEST_CASE("identity multiplier round-trips") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, 0.3, 0.8);
    MultiplierFn one;
    one.evaluator = [](double) { return cplx{1.0, 0.0}; };
    one.sup_bound = 1.0;
    CHECK(rel_l2(apply_multiplier(one, 1.1, f, freq, 4.0), f) < 1e-3);
}

TEST_CASE("declared sup bound is enforced at probes") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, 0.0, 0.5);
    MultiplierFn bad;
    bad.evaluator = [](double x) { return cplx{x, 0.0}; };
    bad.sup_bound = 1.0;
    CHECK_THROWS_AS(apply_multiplier(bad, 1.1, f, freq, 4.0), NumericError);
}

TEST_CASE("abel damping as a multiplier equals the abel mean") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, 0.2, 0.4);
    const double alpha = 1.0, eps = 0.2;
    AngleContext ctx = angle_context(alpha);
    const MeanSpec spec = MeanSpec::abel(eps);
    const UniformGrid freq = mean_frequency_grid(spec, g, ctx, g);
    const double csc = std::abs(ctx.csc_a);
    MultiplierFn m;
    m.sup_bound = 1.0;
    m.evaluator = [eps, csc](double x) {
        return cplx{std::exp(-2.0 * kPi * eps * csc * std::abs(x)), 0.0};
    };
    CHECK(rel_l2(apply_multiplier(m, alpha, f, freq, 4.0), phi_mean(f, spec, alpha, g)) <
          1e-3);
}

TEST_CASE("hilbert symbol route: degenerate order and basic algebra") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 256.0);
    Signal f = gaussian_atom(g, 0.2, 1.6);
    CHECK_THROWS_AS(frac_hilbert_mult(f, kPi), NumericError);

    // twice = -identity away from the removed null frequency
    Signal twice = frac_hilbert_mult(frac_hilbert_mult(f, kPi / 4.0), kPi / 4.0);
    CHECK(rel_l2(twice, scale(f, cplx{-1.0, 0.0})) < 1e-2);
}

TEST_CASE("phase-shift action on transform samples") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 256.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 256.0);
    // the atom transform vanishes near the origin at both orders, so the
    // truncated 1/t tails of the Hilbert image stay below the tolerance
    Signal f = gaussian_atom(g, 0.0, 3.0);
    for (double alpha : {kPi / 4.0, 1.2}) {
        AngleContext ctx = angle_context(alpha);
        Signal h = frac_hilbert_mult(f, alpha, freq, 5.0);
        Signal tf = frft_fast(f, ctx, freq, 5.0);
        Signal th = frft_fast(h, ctx, freq, 5.0);
        const double peak = lp_norm(tf, LpExponent::infinity());
        for (std::size_t k = 0; k < freq.count; ++k) {
            const double x = freq.point(k);
            if (x == 0.0) continue;
            const cplx want = (x > 0.0 ? cplx{0.0, -1.0} : cplx{0.0, 1.0}) * tf.samples[k];
            CHECK(std::abs(th.samples[k] - want) < 1e-6 * peak + 1e-12);
        }
    }
}

TEST_CASE("principal-value route: parity at the classical order") {
    UniformGrid g = symmetric_grid(8.0, 1.0 / 128.0);
    Signal f = make_signal(g, [](double t) { return cplx{std::exp(-kPi * t * t), 0.0}; });
    auto r = frac_hilbert_pv(f, kPi / 2.0);
    CHECK_FALSE(r.has_warning());
    const Signal& h = r.value;
    const std::size_t mid = (g.count - 1) / 2;
    CHECK(std::abs(h.samples[mid]) < 1e-12);  // vanishes at 0
    for (std::size_t i = 0; i < g.count; ++i)  // odd image of an even signal
        CHECK(std::abs(h.samples[i] + h.samples[g.count - 1 - i]) < 1e-10);
}

TEST_CASE("principal-value route warns on non-decaying input") {
    UniformGrid g = symmetric_grid(4.0, 1.0 / 64.0);
    Signal ones = make_signal(g, [](double) { return cplx{1.0, 0.0}; });
    auto r = frac_hilbert_pv(ones, 1.0);
    CHECK(r.has_warning());
}

TEST_CASE("chirp conjugation ties the fractional and classical pv sums") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, -0.4, 0.7);
    const double alpha = 1.9;
    AngleContext ctx = angle_context(alpha);
    Signal lhs = frac_hilbert_pv(f, alpha).value;
    // classical pv of the chirped signal, demodulated, same discretization
    Signal rhs = chirp_multiply(frac_hilbert_pv(chirp_multiply(f, ctx, +1), kPi / 2.0).value,
                                ctx, -1);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.count; ++i)
        worst = std::max(worst, std::abs(lhs.samples[i] - rhs.samples[i]));
    CHECK(worst < 1e-10);
}

TEST_CASE("two hilbert routes agree") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 512.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 512.0);
    Signal f = gaussian_atom(g, 0.5, 0.3);
    // 4.0 exercises the orientation flip of the sign factor past alpha = pi
    for (double alpha : {kPi / 4.0, kPi / 2.0, 2.0, 4.0})
        CHECK(rel_l2(frac_hilbert_pv(f, alpha).value, frac_hilbert_mult(f, alpha, freq)) <
              1e-2);
}

TEST_CASE("mikhlin checker") {
    MultiplierFn constant;
    constant.evaluator = [](double) { return cplx{0.7, 0.0}; };
    constant.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    constant.sup_bound = 0.7;
    UniformGrid probes(0.1, 0.05, 400);
    auto rc = check_mikhlin(constant, 1.0, probes);
    CHECK(rc.pass);
    CHECK(rc.max_value == 0.0);

    // piecewise-constant sign symbol: zero derivative off the origin
    MultiplierFn sgn;
    sgn.sup_bound = 1.0;
    sgn.evaluator = [](double x) { return cplx{0.0, x > 0 ? -1.0 : 1.0}; };
    sgn.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    CHECK(check_mikhlin(sgn, 0.5, probes).pass);

    // |x m'| = |cos(ln x)| maxes at 1
    MultiplierFn slog;
    slog.sup_bound = 1.0;
    slog.evaluator = [](double x) { return cplx{std::sin(std::log(std::abs(x))), 0.0}; };
    slog.derivative_evaluator = [](double x) {
        return cplx{std::cos(std::log(std::abs(x))) / x, 0.0};
    };
    auto rs = check_mikhlin(slog, 1.0, probes);
    CHECK(rs.pass);
    CHECK(rs.max_value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_FALSE(check_mikhlin(slog, 0.5, probes).pass);
}

TEST_CASE("hormander checker and the mikhlin consistency bound") {
    const std::vector<double> rset{1.0, 2.0, 4.0, 8.0};
    MultiplierFn constant;
    constant.evaluator = [](double) { return cplx{1.0, 0.0}; };
    constant.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    CHECK(check_hormander(constant, rset).max_value == 0.0);

    MultiplierFn slog;
    slog.sup_bound = 1.0;
    slog.evaluator = [](double x) { return cplx{std::sin(std::log(std::abs(x))), 0.0}; };
    slog.derivative_evaluator = [](double x) {
        return cplx{std::cos(std::log(std::abs(x))) / x, 0.0};
    };
    auto rep = check_hormander(slog, rset);
    const double b_emp = std::sqrt(rep.max_value);
    CHECK(b_emp <= 1.0 * std::sqrt(2.0 * std::log(2.0)) * (1.0 + 1e-2));

    MultiplierFn gauss;
    gauss.sup_bound = 1.0;
    gauss.evaluator = [](double x) { return cplx{std::exp(-x * x), 0.0}; };
    gauss.derivative_evaluator = [](double x) {
        return cplx{-2.0 * x * std::exp(-x * x), 0.0};
    };
    auto rg = check_hormander(gauss, rset);
    REQUIRE(rg.rows.size() >= 4);
    for (const auto& row : rg.rows) CHECK(std::isfinite(row.value));
    CHECK(rg.rows[1].value > rg.rows[2].value);  // decreasing beyond R = 2
    CHECK(rg.rows[2].value > rg.rows[3].value);
}

TEST_CASE("marcinkiewicz checker against a dense quadrature oracle") {
    MultiplierFn sine;
    sine.sup_bound = 1.0;
    sine.evaluator = [](double x) { return cplx{std::sin(2.0 * kPi * x), 0.0}; };
    sine.derivative_evaluator = [](double x) {
        return cplx{2.0 * kPi * std::cos(2.0 * kPi * x), 0.0};
    };
    auto rep = check_marcinkiewicz(sine, -3, 3);
    // oracle: dense trapezoid of |m'| over [8,16]
    const std::size_t n = 200001;
    const double h = 8.0 / static_cast<double>(n - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = 8.0 + static_cast<double>(i) * h;
        const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
        acc += w * std::abs(2.0 * kPi * std::cos(2.0 * kPi * x));
    }
    CHECK(acc == doctest::Approx(32.0).epsilon(1e-6));  // 2pi * 8 * mean|cos|
    CHECK(rep.max_value == doctest::Approx(acc).epsilon(1e-4));

    MultiplierFn sgn;
    sgn.sup_bound = 1.0;
    sgn.evaluator = [](double x) { return cplx{0.0, x > 0 ? -1.0 : 1.0}; };
    sgn.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    CHECK(check_marcinkiewicz(sgn, -3, 3).max_value == 0.0);
    CHECK_THROWS_AS(check_marcinkiewicz(sgn, 2, 1), NumericError);
}

TEST_CASE("bernstein norms against gaussian moments") {
    MultiplierFn w1;
    w1.sup_bound = 1.0;
    const double norm = 1.0 / std::sqrt(4.0 * kPi);
    w1.evaluator = [norm](double x) { return cplx{norm * std::exp(-x * x / 4.0), 0.0}; };
    w1.derivative_evaluator = [norm](double x) {
        return cplx{-0.5 * x * norm * std::exp(-x * x / 4.0), 0.0};
    };
    UniformGrid probes = symmetric_grid(14.0, 1.0 / 128.0);
    auto rep = bernstein_norms(w1, probes);
    // ||W_1||_2^2 = sqrt(2 pi)/(4 pi), ||W_1'||_2^2 = sqrt(2 pi)/(16 pi)
    CHECK(rep.l2_m == doctest::Approx(std::sqrt(std::sqrt(2.0 * kPi) / (4.0 * kPi)))
                          .epsilon(1e-6));
    CHECK(rep.l2_mprime == doctest::Approx(std::sqrt(std::sqrt(2.0 * kPi) / (16.0 * kPi)))
                               .epsilon(1e-6));
    CHECK(rep.product == doctest::Approx(rep.l2_m * rep.l2_mprime));

    MultiplierFn zero;
    zero.evaluator = [](double) { return cplx{0.0, 0.0}; };
    zero.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    auto rz = bernstein_norms(zero, probes);
    CHECK(rz.l2_m == 0.0);
    CHECK(rz.l2_mprime == 0.0);
    CHECK(rz.product == 0.0);

    // supported off the probe window
    MultiplierFn far;
    far.sup_bound = 1.0;
    far.evaluator = [](double x) { return cplx{std::abs(x) > 20.0 ? 1.0 : 0.0, 0.0}; };
    far.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    CHECK(bernstein_norms(far, probes).l2_m == 0.0);
}

TEST_CASE("finite-difference fallback for the derivative") {
    MultiplierFn m;
    m.sup_bound = 10.0;
    m.evaluator = [](double x) { return cplx{x * x, 0.0}; };
    CHECK_FALSE(m.has_derivative());
    CHECK(m.derivative(1.5).real() == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("check reports serialize to csv rows") {
    MultiplierFn constant;
    constant.evaluator = [](double) { return cplx{1.0, 0.0}; };
    constant.derivative_evaluator = [](double) { return cplx{0.0, 0.0}; };
    auto rep = check_hormander(constant, {1.0, 2.0});
    const std::string csv = check_report_csv(rep);
    CHECK(csv.find("checker,param,value,pass") == 0);
    CHECK(csv.find("hormander,1,") != std::string::npos);
    CHECK(csv.find("hormander,2,") != std::string::npos);
}

TEST_CASE("dyadic intervals are ordered and abut for both orientations") {
    for (double alpha : {1.0, 4.0}) {  // sin > 0 and sin < 0
        for (int sign : {+1, -1}) {
            for (int j = -3; j < 3; ++j) {
                auto iv = dyadic_interval(j, sign, alpha);
                CHECK(iv.lo < iv.hi);
                auto next = dyadic_interval(j + 1, sign, alpha);
                if (sign > 0 && std::sin(alpha) > 0.0)
                    CHECK(iv.hi == doctest::Approx(next.lo));
            }
        }
    }
    CHECK_THROWS_AS(dyadic_interval(0, 2, 1.0), NumericError);
    CHECK_THROWS_AS(dyadic_interval(0, 1, 0.0), NumericError);
}

TEST_CASE("band projection: full band, additivity, idempotence") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, 0.2, 0.5);
    const double alpha = 1.0;

    // whole resolved band: projection is the identity
    Signal full = partial_sum_mult(f, -7.9, 7.9, alpha, freq, 4.0);
    CHECK(rel_l2(full, f) < 1e-3);

    // indicators add over disjoint intervals
    Signal left = partial_sum_mult(f, -7.9, 0.33, alpha, freq, 4.0);
    Signal right = partial_sum_mult(f, 0.33, 7.9, alpha, freq, 4.0);
    CHECK(rel_l2(add(left, right), full) < 1e-10);

    // cuts in the far shoulder: projecting twice changes nothing
    Signal once = partial_sum_mult(f, -3.9, 3.9, alpha, freq, 4.0);
    Signal twice = partial_sum_mult(once, -3.9, 3.9, alpha, freq, 4.0);
    CHECK(lp_norm(subtract(twice, once), LpExponent(2.0)) /
              lp_norm(f, LpExponent(2.0)) <
          1e-10);

    CHECK_THROWS_AS(partial_sum_mult(f, 1.0, 1.0, alpha, freq, 4.0), NumericError);
    // coincident endpoints: the two Hilbert terms cancel exactly
    Signal nothing = partial_sum_hilbert(f, 1.0, 1.0, alpha, freq, 4.0);
    CHECK(lp_norm(nothing, LpExponent(2.0)) == 0.0);
    CHECK_THROWS_AS(partial_sum_hilbert(f, 2.0, 1.0, alpha, freq, 4.0), NumericError);
}

TEST_CASE("projection through hilbert combinations, classical order") {
    UniformGrid g = symmetric_grid(6.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    Signal f = gaussian_atom(g, -0.3, 0.8);
    // at pi/2 the endpoints need no scaling: classical band pass
    Signal via_h = partial_sum_hilbert(f, 0.25, 1.75, kPi / 2.0, freq, 4.0);
    Signal via_m = partial_sum_mult(f, 0.25, 1.75, kPi / 2.0, freq, 4.0);
    CHECK(rel_l2(via_h, via_m) < 1e-6);
}

TEST_CASE("square function of a single-band signal is its modulus") {
    const double alpha = 1.0;
    const double s = std::sin(alpha);
    // wide time grid: the in-block bump's time envelope must die out before
    // the boundary or its truncation ripple shows up in the square function
    UniformGrid g = symmetric_grid(12.0, 1.0 / 128.0);
    UniformGrid freq = symmetric_grid_offset(8.0, 1.0 / 128.0);
    // one bump inside the j=0 block [s, 2s]
    Signal gamma = make_signal(freq, [s](double x) {
        const double d = (x - 1.5 * s) / (0.2 * s);
        return cplx{std::exp(-kPi * d * d), 0.0};
    });
    Signal f = detail::frft_fast_unchecked(gamma, angle_context(-alpha), g);
    auto sq = lp_square_function(f, alpha, -4, 4, LpExponent(2.0), freq, 5.0);
    CHECK(sq.ratio == doctest::Approx(1.0).epsilon(1e-6));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.count; ++i)
        worst = std::max(worst,
                         std::abs(sq.square_fn.samples[i].real() - std::abs(f.samples[i])));
    CHECK(worst < 1e-5 * lp_norm(f, LpExponent::infinity()));

    CHECK_THROWS_AS(lp_square_function(f, alpha, 3, -3, LpExponent(2.0), freq, 5.0),
                    NumericError);
    CHECK_THROWS_AS(lp_square_function(f, alpha, -2, 2, LpExponent(1.0), freq, 5.0),
                    NumericError);
}
