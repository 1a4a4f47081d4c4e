#include "frftlab/suites.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "frftlab/assets.hpp"
#include "frftlab/convolve.hpp"
#include "frftlab/frft.hpp"
#include "frftlab/kernels.hpp"
#include "frftlab/littlewood_paley.hpp"
#include "frftlab/means.hpp"
#include "frftlab/multiplier.hpp"

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;

double rel_l2(const Signal& got, const Signal& want) {
    const double denom = lp_norm(want, LpExponent(2.0));
    if (denom == 0.0) return lp_norm(got, LpExponent(2.0));
    return lp_norm(subtract(got, want), LpExponent(2.0)) / denom;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// Romberg on a smooth integrand; the independent oracle for the special
// functions (the library itself integrates by adaptive Simpson).
double romberg(const std::function<double(double)>& f, double a, double b) {
    constexpr int kMax = 22;
    double r[kMax][kMax];
    double h = b - a;
    r[0][0] = 0.5 * h * (f(a) + f(b));
    for (int i = 1; i < kMax; ++i) {
        h *= 0.5;
        double s = 0.0;
        const long long steps = 1LL << (i - 1);
        for (long long k = 1; k <= steps; ++k)
            s += f(a + (2.0 * static_cast<double>(k) - 1.0) * h);
        r[i][0] = 0.5 * r[i - 1][0] + h * s;
        double p4 = 4.0;
        for (int j = 1; j <= i; ++j) {
            r[i][j] = r[i][j - 1] + (r[i][j - 1] - r[i - 1][j - 1]) / (p4 - 1.0);
            p4 *= 4.0;
        }
        if (i > 3 && std::abs(r[i][i] - r[i - 1][i - 1]) < 1e-13) return r[i][i];
    }
    return r[kMax - 1][kMax - 1];
}

// Orders drawn at least 0.3 rad away from multiples of pi, so the suite
// grids stay inside the oscillation-resolution bound (|cot| <= ~3.2).
double draw_generic_alpha(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    for (;;) {
        const double a = u(rng);
        const double d0 = std::min(a, 2.0 * kPi - a);
        if (std::min(d0, std::abs(a - kPi)) > 0.3) return a;
    }
}
}  // namespace

std::vector<Signal> gaussian_corpus(std::uint64_t seed, std::size_t count,
                                    const UniformGrid& grid, double center_span,
                                    double mod_span) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(-center_span, center_span);
    std::uniform_real_distribution<double> um(-mod_span, mod_span);
    std::uniform_real_distribution<double> ua(0.3, 1.0);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * kPi);
    std::vector<Signal> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        struct Atom {
            double c, nu;
            cplx amp;
        };
        std::vector<Atom> atoms(3);
        for (auto& a : atoms) a = {uc(rng), um(rng), std::polar(ua(rng), uph(rng))};
        out.push_back(make_signal(grid, [atoms](double t) {
            cplx v{0.0, 0.0};
            for (const auto& a : atoms)
                v += a.amp * std::exp(-kPi * (t - a.c) * (t - a.c)) *
                     std::polar(1.0, 2.0 * kPi * a.nu * t);
            return v;
        }));
    }
    return out;
}

std::vector<Signal> annular_corpus(std::uint64_t seed, std::size_t count,
                                   const UniformGrid& grid) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(-0.25, 0.25);
    std::uniform_real_distribution<double> um(1.7, 2.3);
    std::uniform_real_distribution<double> ua(0.3, 1.0);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * kPi);
    std::bernoulli_distribution flip(0.5);
    std::vector<Signal> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        struct Atom {
            double c, nu;
            cplx amp;
        };
        std::vector<Atom> atoms(2);
        for (auto& a : atoms)
            a = {uc(rng), (flip(rng) ? 1.0 : -1.0) * um(rng), std::polar(ua(rng), uph(rng))};
        out.push_back(make_signal(grid, [atoms](double t) {
            cplx v{0.0, 0.0};
            for (const auto& a : atoms)
                v += a.amp * std::exp(-kPi * (t - a.c) * (t - a.c)) *
                     std::polar(1.0, 2.0 * kPi * a.nu * t);
            return v;
        }));
    }
    return out;
}

// Signals synthesized from transform-domain bumps centered inside dyadic
// blocks of order alpha. A sharp cut through spectral bulk rings like
// |F(cut)|/t in time, and that ring energy leaves any desk-scale grid; the
// energy identity is therefore exercised on signals whose spectrum is small
// at every block endpoint, which is where the decomposition lives anyway.
static std::vector<Signal> in_block_corpus(std::uint64_t seed, std::size_t count,
                                           const UniformGrid& time_grid,
                                           const UniformGrid& freq_grid, double alpha) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ua(0.4, 1.0);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * kPi);
    const double s = std::sin(angle_context(alpha).alpha);
    const AngleContext inv = angle_context(-alpha);
    std::vector<Signal> out;
    for (std::size_t i = 0; i < count; ++i) {
        struct Bump {
            double center, width;
            cplx amp;
        };
        std::vector<Bump> bumps = {
            {1.5 * s, 0.2 * s, std::polar(ua(rng), uph(rng))},
            {-1.5 * s, 0.2 * s, std::polar(ua(rng), uph(rng))},
            {3.0 * s, 0.35 * s, std::polar(ua(rng), uph(rng))},
            {-3.0 * s, 0.35 * s, std::polar(ua(rng), uph(rng))},
        };
        Signal gamma = make_signal(freq_grid, [&bumps](double x) {
            cplx v{0.0, 0.0};
            for (const auto& b : bumps) {
                const double d = (x - b.center) / b.width;
                v += b.amp * std::exp(-kPi * d * d);
            }
            return v;
        });
        out.push_back(detail::frft_fast_unchecked(gamma, inv, time_grid));
    }
    return out;
}

SuiteResult suite_staircase_mass(const SuiteConfig&) {
    const double h = 0.125;
    const std::size_t n_max = 10000;
    UniformGrid grid(0.0, h, static_cast<std::size_t>((static_cast<double>(n_max) + 1.5) / h));
    const auto st = staircase_signal(n_max, grid);
    const double got = lp_norm(st.signal, LpExponent(1.0));
    const double target = kPi * kPi / 6.0;
    const double err = std::abs(got - target);
    SuiteResult r;
    r.name = "staircase-mass";
    r.pass = err < 1e-4 && std::abs(got - st.l1_mass) < 1e-9;
    r.detail = fmt("|quad - pi^2/6| = %.3g (tol 1e-4), analytic partial sum %.10g", err,
                   st.l1_mass);
    return r;
}

SuiteResult suite_unitarity(const SuiteConfig& cfg) {
    const UniformGrid in = symmetric_grid(6.0, 1.0 / 128.0);
    const UniformGrid out = symmetric_grid(8.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x11, 4, in);
    FrftOptions opt;
    opt.bandwidth = 4.0;
    double worst = 0.0;
    for (double alpha : {0.3, kPi / 4.0, 1.0, 2.0, 5.0}) {
        for (const auto& f : corpus) {
            const Signal tf = frft(f, alpha, out, opt);
            const double n0 = lp_norm(f, LpExponent(2.0));
            worst = std::max(worst, std::abs(lp_norm(tf, LpExponent(2.0)) - n0) / n0);
        }
    }
    SuiteResult r;
    r.name = "unitarity";
    r.pass = worst < 1e-3;
    r.detail = fmt("max relative L2 defect %.3g (tol 1e-3) over 5 orders x 4 signals", worst);
    return r;
}

SuiteResult suite_group_law(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x22);
    const UniformGrid in = symmetric_grid(6.0, 1.0 / 128.0);
    const UniformGrid mid = symmetric_grid(8.0, 1.0 / 128.0);
    const UniformGrid out = symmetric_grid(8.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x23, 5, in);
    FrftOptions opt;
    opt.bandwidth = 4.0;
    FrftOptions opt_mid;
    opt_mid.bandwidth = 5.0;

    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        double a, b;
        do {
            a = draw_generic_alpha(rng);
            b = draw_generic_alpha(rng);
        } while (!angle_context(a + b, 0.3).generic());
        const Signal& f = corpus[i];
        const Signal two_step = frft(frft(f, b, mid, opt), a, out, opt_mid);
        const Signal one_step = frft(f, a + b, out, opt);
        worst = std::max(worst, rel_l2(two_step, one_step));
    }
    SuiteResult r;
    r.name = "group-law";
    r.pass = worst < 1e-2;
    r.detail = fmt("max relative L2 defect %.3g (tol 1e-2) over 5 seeded (a,b) pairs", worst);
    return r;
}

SuiteResult suite_fast_vs_direct(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x33);
    const UniformGrid in = symmetric_grid(6.0, 1.0 / 128.0);
    const UniformGrid out = symmetric_grid(8.0, 1.0 / 64.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x34, 10, in);
    double worst = 0.0;
    for (const auto& f : corpus) {
        const AngleContext ctx = angle_context(draw_generic_alpha(rng));
        const Signal fast = frft_fast(f, ctx, out, 4.0);
        const Signal direct = frft_direct(f, ctx, out, 4.0);
        worst = std::max(worst, rel_l2(fast, direct));
    }
    SuiteResult r;
    r.name = "fast-vs-direct";
    r.pass = worst < 1e-6;
    r.detail = fmt("max relative L2 gap %.3g (tol 1e-6) over 10 signals", worst);
    return r;
}

SuiteResult suite_multiplication(const SuiteConfig& cfg) {
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x44, 6, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const Signal& f = corpus[i];
        const Signal& g = corpus[i + 1];
        const AngleContext ctx = angle_context(0.8);
        const cplx lhs = inner_product(frft_direct(f, ctx, grid, 4.0), g);
        const cplx rhs = inner_product(f, frft_direct(g, ctx, grid, 4.0));
        const double denom = lp_norm(f, LpExponent(2.0)) * lp_norm(g, LpExponent(2.0));
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    SuiteResult r;
    r.name = "multiplication";
    r.pass = worst < 1e-6;
    r.detail = fmt("max pairing defect %.3g (tol 1e-6)", worst);
    return r;
}

SuiteResult suite_exp_chirp(const SuiteConfig&) {
    const double alpha = kPi / 3.0;
    const auto pair = exp_chirp_pair(alpha);
    const double h = 1.0 / 256.0;
    UniformGrid in(0.0, h, static_cast<std::size_t>(12.0 / h) + 1);
    const Signal f = make_signal(in, pair.time_fn);
    const UniformGrid out = symmetric_grid(4.0, 1.0 / 32.0);
    const Signal tf = frft_direct(f, angle_context(alpha), out, 16.0);
    double worst = 0.0;
    for (std::size_t k = 0; k < out.count; ++k)
        worst = std::max(worst, std::abs(tf.samples[k] - pair.frft_fn(out.point(k))));
    SuiteResult r;
    r.name = "exp-chirp";
    r.pass = worst < 2e-3;
    r.detail = fmt("max pointwise error %.3g on |x|<=4 (tol 2e-3), alpha = pi/3", worst);
    return r;
}

SuiteResult suite_mean_two_path(const SuiteConfig& cfg) {
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 128.0);
    const UniformGrid kernel_grid = symmetric_grid(16.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x55, 2, grid, 1.0, 1.0);
    double worst_abel = 0.0, worst_gauss = 0.0;
    for (double alpha : {kPi / 4.0, 1.0, 2.5}) {
        for (const auto& f : corpus) {
            const MeanSpec abel = MeanSpec::abel(0.01);
            worst_abel = std::max(worst_abel,
                                  rel_l2(phi_mean(f, abel, alpha, grid),
                                         mean_via_convolution(f, abel, alpha, kernel_grid)));
            // Gauss damping at eps pairs with the heat kernel at eps^2
            const MeanSpec gauss = MeanSpec::gauss(0.05);
            worst_gauss = std::max(worst_gauss,
                                   rel_l2(phi_mean(f, gauss, alpha, grid),
                                          mean_via_convolution(f, gauss, alpha, kernel_grid)));
        }
    }
    SuiteResult r;
    r.name = "mean-two-path";
    r.pass = worst_abel < 1e-3 && worst_gauss < 1e-3;
    r.detail = fmt("rel L2: abel %.3g, gauss(eps<->eps^2) %.3g (tol 1e-3)", worst_abel,
                   worst_gauss);
    return r;
}

SuiteResult suite_recovery_monotone(const SuiteConfig&) {
    SuiteResult r;
    r.name = "recovery-monotone";
    const EpsilonSchedule schedule;  // 1, 0.1, 0.01

    // Gaussian at the classical order
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 128.0);
    const Signal f = make_signal(grid, [](double t) {
        return cplx{std::exp(-kPi * t * t), 0.0};
    });
    const UniformGrid freq = symmetric_grid(8.0, 1.0 / 128.0);
    const Signal tf = frft(f, kPi / 2.0, freq, {});
    const auto gauss_entries = recover(tf, kPi / 2.0, MeanKind::Abel, schedule, grid, f);

    // the order-pi/4 chirp, sampled off its singularity
    const UniformGrid ugrid = symmetric_grid_offset(8.0, 1.0 / 128.0);
    const Signal u = make_signal(ugrid, chirp_u);
    const UniformGrid ufreq = symmetric_grid(16.0, 1.0 / 96.0);
    const Signal utf = frft(u, kPi / 4.0, ufreq, {});
    const auto u_entries = recover(utf, kPi / 4.0, MeanKind::Abel, schedule, ugrid, u);

    auto decreasing = [](const std::vector<RecoverEntry>& es) {
        for (std::size_t i = 1; i < es.size(); ++i)
            if (!(*es[i].l1_error < *es[i - 1].l1_error)) return false;
        return true;
    };
    r.pass = decreasing(gauss_entries) && decreasing(u_entries);
    std::ostringstream ss;
    ss << "L1 errors gaussian:";
    for (const auto& e : gauss_entries) ss << ' ' << fmt("%.3g", *e.l1_error);
    ss << "; chirp-u:";
    for (const auto& e : u_entries) ss << ' ' << fmt("%.3g", *e.l1_error);
    ss << " (strictly decreasing along eps = 1, 0.1, 0.01)";
    r.detail = ss.str();
    return r;
}

SuiteResult suite_hilbert_two_path(const SuiteConfig& cfg) {
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 512.0);
    const UniformGrid freq = symmetric_grid(8.0, 1.0 / 512.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x66, 2, grid, 1.0, 0.5);
    double worst_two_path = 0.0;
    for (double alpha : {kPi / 4.0, kPi / 2.0, 2.0}) {
        for (const auto& f : corpus) {
            const Signal mult = frac_hilbert_mult(f, alpha, freq);
            const Signal pv = frac_hilbert_pv(f, alpha).value;
            worst_two_path = std::max(worst_two_path, rel_l2(pv, mult));
        }
    }
    // Double application = -identity. The Hilbert image of a bump decays like
    // |F_a f(0)|/t, so the atom is modulated to keep its transform away from
    // the origin at every test order; otherwise the truncated tails dominate.
    const Signal atom = make_signal(grid, [](double t) {
        return std::exp(-kPi * (t - 0.2) * (t - 0.2)) * std::polar(1.0, 2.0 * kPi * 1.6 * t);
    });
    double worst_double = 0.0;
    for (double alpha : {kPi / 4.0, kPi / 2.0, 2.0}) {
        const Signal twice = frac_hilbert_mult(frac_hilbert_mult(atom, alpha, freq), alpha, freq);
        worst_double = std::max(worst_double, rel_l2(twice, scale(atom, cplx{-1.0, 0.0})));
    }
    SuiteResult r;
    r.name = "hilbert-two-path";
    r.pass = worst_two_path < 1e-2 && worst_double < 1e-2;
    r.detail = fmt("two-path rel L2 %.3g, double-application defect %.3g (tol 1e-2)",
                   worst_two_path, worst_double);
    return r;
}

SuiteResult suite_partial_sum(const SuiteConfig& cfg) {
    // endpoints chosen on the transform grid lattice: a*sin(pi/6) = 0.5, 1.5
    const double alpha = kPi / 6.0;
    const double sin_a = std::sin(alpha);
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 128.0);
    const UniformGrid freq = symmetric_grid(12.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x77, 2, grid, 1.0, 1.0);
    double worst_two_path = 0.0;
    for (const auto& f : corpus) {
        const double a = 0.5 / sin_a, b = 1.5 / sin_a;
        const Signal via_hilbert = partial_sum_hilbert(f, a, b, alpha, freq, 4.0);
        const Signal via_mult = partial_sum_mult(f, a * sin_a, b * sin_a, alpha, freq, 4.0);
        worst_two_path = std::max(worst_two_path, rel_l2(via_hilbert, via_mult));
    }
    // energy additivity over a covering dyadic family, on an offset grid so
    // no node sits at 0 or on a block endpoint
    const UniformGrid efreq = symmetric_grid_offset(8.0, 1.0 / 128.0);
    const UniformGrid etime = symmetric_grid(8.0, 1.0 / 128.0);
    double worst_energy = 0.0;
    for (const auto& f : in_block_corpus(cfg.seed ^ 0x78, 2, etime, efreq, 1.0)) {
        const auto sq = lp_square_function(f, 1.0, -6, 4, LpExponent(2.0), efreq, 4.5);
        const double total = sq.norm * sq.norm;
        const double want = std::pow(lp_norm(f, LpExponent(2.0)), 2.0);
        worst_energy = std::max(worst_energy, std::abs(total - want) / want);
    }
    SuiteResult r;
    r.name = "partial-sum";
    r.pass = worst_two_path < 1e-6 && worst_energy < 1e-3;
    r.detail = fmt("two-path rel L2 %.3g (tol 1e-6), energy additivity defect %.3g (tol 1e-3)",
                   worst_two_path, worst_energy);
    return r;
}

SuiteResult suite_hausdorff_young(const SuiteConfig& cfg) {
    const UniformGrid grid = symmetric_grid(6.0, 1.0 / 128.0);
    const auto corpus = gaussian_corpus(cfg.seed ^ 0x88, 10, grid);
    FrftOptions opt;
    opt.bandwidth = 4.0;
    bool all = true;
    double worst_ratio = 0.0;
    for (const auto& f : corpus) {
        for (double p : {1.0, 4.0 / 3.0, 2.0}) {
            const auto rep = hausdorff_young_check(f, 0.7, LpExponent(p), opt);
            all = all && rep.satisfied;
            worst_ratio = std::max(worst_ratio, rep.lhs / rep.rhs);
        }
    }
    SuiteResult r;
    r.name = "hausdorff-young";
    r.pass = all;
    r.detail = fmt("lhs/rhs max %.6g over p in {1, 4/3, 2} x 10 signals (slack 1+1e-3)",
                   worst_ratio);
    return r;
}

SuiteResult suite_littlewood_paley(const SuiteConfig& cfg) {
    const UniformGrid grid = symmetric_grid(8.0, 1.0 / 128.0);
    const UniformGrid efreq = symmetric_grid_offset(8.0, 1.0 / 128.0);
    const auto corpus = in_block_corpus(cfg.seed ^ 0x99, 3, grid, efreq, 1.0);
    double worst_p2 = 0.0, lo = 1e9, hi = 0.0;
    for (const auto& f : corpus) {
        const auto sq2 = lp_square_function(f, 1.0, -6, 4, LpExponent(2.0), efreq, 4.5);
        worst_p2 = std::max(worst_p2, std::abs(sq2.ratio - 1.0));
        for (double p : {4.0 / 3.0, 4.0}) {
            const auto sq = lp_square_function(f, 1.0, -6, 4, LpExponent(p), efreq, 4.5);
            lo = std::min(lo, sq.ratio);
            hi = std::max(hi, sq.ratio);
        }
    }
    SuiteResult r;
    r.name = "littlewood-paley";
    r.pass = worst_p2 < 1e-2 && lo >= 0.1 && hi <= 10.0;
    r.detail = fmt("p=2 ratio defect %.3g (tol 1e-2); p in {4/3,4} ratios in [%.3g, %.3g]",
                   worst_p2, lo, hi);
    return r;
}

SuiteResult suite_special_functions(const SuiteConfig& cfg) {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        const double oracle = romberg([](double t) { return std::sin(t * t); }, 0.0, x);
        worst = std::max(worst, std::abs(fresnel_c(x) - oracle));
    }
    for (double x : {1.0, 5.0, 10.0}) {
        const double oracle =
            romberg([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x);
        worst = std::max(worst, std::abs(sine_integral(x) - oracle));
    }
    const bool series_ok = worst < 1e-10;

    const auto adj = adjudicate_chirp_u_frft();
    bool report_written = false;
    if (!cfg.report_dir.empty()) {
        std::ofstream os(cfg.report_dir + "/chirp_u_discrepancy.csv");
        if (os) {
            os << chirp_adjudication_csv(adj);
            report_written = true;
        }
    }
    const bool chirp_ok = adj.stated_form_ok || adj.corrected_form_ok;

    SuiteResult r;
    r.name = "special-functions";
    r.pass = series_ok && chirp_ok;
    std::ostringstream ss;
    ss << fmt("series vs quadrature max gap %.3g (tol 1e-10); ", worst);
    if (adj.stated_form_ok) {
        ss << "stated chirp closed form within " << fmt("%.3g", adj.target);
    } else {
        double best_stated = 1e300, corrected = -1.0;
        const char* best_stated_name = "?";
        for (const auto& res : adj.residuals) {
            if (!res.with_amplitude_factor && res.max_rel_err < best_stated) {
                best_stated = res.max_rel_err;
                best_stated_name = fresnel_variant_name(res.variant);
            }
            if (res.with_amplitude_factor && res.variant == FresnelVariant::CosineNormalized)
                corrected = res.max_rel_err;
        }
        ss << "stated chirp closed form off by " << fmt("%.3g", best_stated) << " (closest "
           << best_stated_name << "); amplitude-corrected normalized-cosine reading within "
           << fmt("%.3g", corrected)
           << (report_written ? "; discrepancy report written" : "");
    }
    r.detail = ss.str();
    return r;
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg, bool concurrent) {
    using Fn = SuiteResult (*)(const SuiteConfig&);
    const Fn fns[] = {suite_staircase_mass,  suite_unitarity,       suite_group_law,
                      suite_fast_vs_direct,  suite_multiplication,  suite_exp_chirp,
                      suite_mean_two_path,   suite_recovery_monotone, suite_hilbert_two_path,
                      suite_partial_sum,     suite_hausdorff_young, suite_littlewood_paley,
                      suite_special_functions};
    std::vector<SuiteResult> out;
    if (concurrent) {
        std::vector<std::future<SuiteResult>> futs;
        for (Fn fn : fns) futs.push_back(std::async(std::launch::async, fn, cfg));
        for (auto& fu : futs) out.push_back(fu.get());
    } else {
        for (Fn fn : fns) out.push_back(fn(cfg));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"staircase-mass", "unitarity",        "group-law",       "fast-vs-direct",
            "multiplication", "exp-chirp",        "mean-two-path",   "recovery-monotone",
            "hilbert-two-path", "partial-sum",    "hausdorff-young", "littlewood-paley",
            "special-functions"};
}

std::optional<SuiteResult> run_suite_by_name(const std::string& name, const SuiteConfig& cfg) {
    using Fn = SuiteResult (*)(const SuiteConfig&);
    const std::pair<const char*, Fn> table[] = {
        {"staircase-mass", suite_staircase_mass},
        {"unitarity", suite_unitarity},
        {"group-law", suite_group_law},
        {"fast-vs-direct", suite_fast_vs_direct},
        {"multiplication", suite_multiplication},
        {"exp-chirp", suite_exp_chirp},
        {"mean-two-path", suite_mean_two_path},
        {"recovery-monotone", suite_recovery_monotone},
        {"hilbert-two-path", suite_hilbert_two_path},
        {"partial-sum", suite_partial_sum},
        {"hausdorff-young", suite_hausdorff_young},
        {"littlewood-paley", suite_littlewood_paley},
        {"special-functions", suite_special_functions}};
    for (const auto& [n, fn] : table)
        if (name == n) return fn(cfg);
    return std::nullopt;
}

}  // namespace frftlab
