#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frftlab/assets.hpp"
#include "frftlab/convolve.hpp"
#include "frftlab/kernels.hpp"
#include "frftlab/littlewood_paley.hpp"
#include "frftlab/means.hpp"
#include "frftlab/multiplier.hpp"
#include "frftlab/special.hpp"
#include "frftlab/suites.hpp"

namespace py = pybind11;
using namespace frftlab;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

Signal to_signal(const CArray& samples, double start, double step) {
    auto buf = samples.request();
    if (buf.ndim != 1) throw NumericError("expected a 1-d complex array");
    const auto* p = static_cast<const cplx*>(buf.ptr);
    return Signal(UniformGrid(start, step, static_cast<std::size_t>(buf.shape[0])),
                  std::vector<cplx>(p, p + buf.shape[0]));
}

py::array_t<std::complex<double>> from_signal(const Signal& s) {
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(s.size()));
    auto buf = out.request();
    std::copy(s.samples.begin(), s.samples.end(), static_cast<cplx*>(buf.ptr));
    return out;
}

UniformGrid to_grid(const std::tuple<double, double, std::size_t>& g) {
    return UniformGrid(std::get<0>(g), std::get<1>(g), std::get<2>(g));
}

FrftOptions make_options(const std::string& method, std::optional<double> bandwidth,
                         double delta_sing) {
    FrftOptions opt;
    if (method == "direct")
        opt.method = FrftMethod::DirectQuadrature;
    else if (method == "fast")
        opt.method = FrftMethod::FastChirp;
    else
        throw NumericError("method must be 'direct' or 'fast'");
    opt.bandwidth = bandwidth;
    opt.delta_sing = delta_sing;
    return opt;
}

MeanKind parse_kind(const std::string& kind) {
    if (kind == "abel") return MeanKind::Abel;
    if (kind == "gauss") return MeanKind::Gauss;
    throw NumericError("mean kind must be 'abel' or 'gauss'");
}
}  // namespace

PYBIND11_MODULE(_frftlab, m) {
    m.doc() = "fractional Fourier transform laboratory";

    py::register_exception<NumericError>(m, "FrftNumericError");

    m.def("grid_points", [](double start, double step, std::size_t count) {
        py::array_t<double> out(static_cast<py::ssize_t>(count));
        auto buf = out.request();
        auto* p = static_cast<double*>(buf.ptr);
        UniformGrid g(start, step, count);
        for (std::size_t i = 0; i < count; ++i) p[i] = g.point(i);
        return out;
    }, py::arg("start"), py::arg("step"), py::arg("count"));

    m.def(
        "frft",
        [](const CArray& samples, double start, double step, double alpha,
           std::tuple<double, double, std::size_t> out, const std::string& method,
           std::optional<double> bandwidth, double delta_sing) {
            return from_signal(frft(to_signal(samples, start, step), alpha, to_grid(out),
                                    make_options(method, bandwidth, delta_sing)));
        },
        py::arg("samples"), py::arg("start"), py::arg("step"), py::arg("alpha"),
        py::arg("out"), py::arg("method") = "fast", py::arg("bandwidth") = py::none(),
        py::arg("delta_sing") = 1e-3,
        "Transform of order alpha onto the grid out = (start, step, count).");

    m.def(
        "inverse_frft",
        [](const CArray& samples, double start, double step, double alpha,
           std::tuple<double, double, std::size_t> out, const std::string& method,
           std::optional<double> bandwidth, double delta_sing) {
            return from_signal(inverse_frft(to_signal(samples, start, step), alpha,
                                            to_grid(out),
                                            make_options(method, bandwidth, delta_sing)));
        },
        py::arg("samples"), py::arg("start"), py::arg("step"), py::arg("alpha"),
        py::arg("out"), py::arg("method") = "fast", py::arg("bandwidth") = py::none(),
        py::arg("delta_sing") = 1e-3);

    m.def(
        "lp_norm",
        [](const CArray& samples, double start, double step, double p) {
            return lp_norm(to_signal(samples, start, step),
                           std::isinf(p) ? LpExponent::infinity() : LpExponent(p));
        },
        py::arg("samples"), py::arg("start"), py::arg("step"), py::arg("p"));

    m.def(
        "frac_convolve",
        [](const CArray& f, double f_start, const CArray& g, double g_start, double step,
           double alpha) {
            return from_signal(
                frac_convolve(to_signal(f, f_start, step), to_signal(g, g_start, step), alpha));
        },
        py::arg("f"), py::arg("f_start"), py::arg("g"), py::arg("g_start"), py::arg("step"),
        py::arg("alpha"));

    m.def(
        "phi_mean",
        [](const CArray& f, double start, double step, const std::string& kind, double eps,
           double alpha) {
            const MeanSpec spec =
                parse_kind(kind) == MeanKind::Abel ? MeanSpec::abel(eps) : MeanSpec::gauss(eps);
            Signal s = to_signal(f, start, step);
            return from_signal(phi_mean(s, spec, alpha, s.grid));
        },
        py::arg("f"), py::arg("start"), py::arg("step"), py::arg("kind"), py::arg("eps"),
        py::arg("alpha"), "Damped inversion mean evaluated back on the input grid.");

    m.def(
        "mean_via_convolution",
        [](const CArray& f, double start, double step, const std::string& kind, double eps,
           double alpha) {
            const MeanSpec spec =
                parse_kind(kind) == MeanKind::Abel ? MeanSpec::abel(eps) : MeanSpec::gauss(eps);
            return from_signal(mean_via_convolution(to_signal(f, start, step), spec, alpha));
        },
        py::arg("f"), py::arg("start"), py::arg("step"), py::arg("kind"), py::arg("eps"),
        py::arg("alpha"));

    m.def(
        "recover",
        [](const CArray& tf, double start, double step, double alpha, const std::string& kind,
           const std::vector<double>& eps, std::tuple<double, double, std::size_t> out,
           std::optional<CArray> reference) {
            std::optional<Signal> ref;
            UniformGrid og = to_grid(out);
            if (reference) ref = to_signal(*reference, og.start, og.step);
            const auto entries = recover(to_signal(tf, start, step), alpha, parse_kind(kind),
                                         EpsilonSchedule(eps), og, ref);
            py::list result;
            for (const auto& e : entries) {
                py::dict d;
                d["eps"] = e.eps;
                d["samples"] = from_signal(e.recovered);
                d["l1_error"] = e.l1_error ? py::object(py::float_(*e.l1_error)) : py::none();
                result.append(d);
            }
            return result;
        },
        py::arg("tf"), py::arg("start"), py::arg("step"), py::arg("alpha"), py::arg("kind"),
        py::arg("eps"), py::arg("out"), py::arg("reference") = py::none());

    m.def(
        "frac_hilbert",
        [](const CArray& f, double start, double step, double alpha,
           const std::string& route) {
            Signal s = to_signal(f, start, step);
            if (route == "pv") return from_signal(frac_hilbert_pv(s, alpha).value);
            if (route == "mult") return from_signal(frac_hilbert_mult(s, alpha));
            throw NumericError("route must be 'mult' or 'pv'");
        },
        py::arg("f"), py::arg("start"), py::arg("step"), py::arg("alpha"),
        py::arg("route") = "mult");

    m.def(
        "partial_sum",
        [](const CArray& f, double start, double step, double a, double b, double alpha,
           const std::string& route) {
            Signal s = to_signal(f, start, step);
            if (route == "hilbert") return from_signal(partial_sum_hilbert(s, a, b, alpha));
            const double sin_a = std::sin(angle_context(alpha).alpha);
            return from_signal(partial_sum_mult(s, a * sin_a, b * sin_a, alpha));
        },
        py::arg("f"), py::arg("start"), py::arg("step"), py::arg("a"), py::arg("b"),
        py::arg("alpha"), py::arg("route") = "mult");

    m.def(
        "square_function",
        [](const CArray& f, double start, double step, double alpha, int j_min, int j_max,
           double p) {
            const auto r = lp_square_function(to_signal(f, start, step), alpha, j_min, j_max,
                                              LpExponent(p));
            return py::make_tuple(from_signal(r.square_fn), r.norm, r.ratio);
        },
        py::arg("f"), py::arg("start"), py::arg("step"), py::arg("alpha"), py::arg("j_min"),
        py::arg("j_max"), py::arg("p"),
        "Returns (square_fn, norm, ratio = ||sq||_p / ||f||_p).");

    m.def(
        "poisson_kernel",
        [](double eps, std::tuple<double, double, std::size_t> grid) {
            return from_signal(poisson_kernel(eps, to_grid(grid)));
        },
        py::arg("eps"), py::arg("grid"));
    m.def(
        "weierstrass_kernel",
        [](double eps, std::tuple<double, double, std::size_t> grid) {
            return from_signal(weierstrass_kernel(eps, to_grid(grid)));
        },
        py::arg("eps"), py::arg("grid"));

    m.def("fresnel_c", [](double x) { return fresnel_c(x); }, py::arg("x"),
          "int_0^x sin(t^2) dt");
    m.def("sine_integral", [](double x) { return sine_integral(x); }, py::arg("x"));
    m.def("chirp_u", [](double t) { return chirp_u(t); }, py::arg("t"));
    m.def(
        "kernel_value",
        [](double alpha, double x, double t) {
            return kernel_value(angle_context(alpha), x, t);
        },
        py::arg("alpha"), py::arg("x"), py::arg("t"));

    m.def(
        "staircase_signal",
        [](std::size_t n_max, std::tuple<double, double, std::size_t> grid) {
            const auto st = staircase_signal(n_max, to_grid(grid));
            return py::make_tuple(from_signal(st.signal), st.l1_mass, st.l2_mass_sq);
        },
        py::arg("n_max"), py::arg("grid"));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed) {
            SuiteConfig cfg;
            cfg.seed = seed;
            const auto r = run_suite_by_name(name, cfg);
            if (!r) throw NumericError("unknown suite '" + name + "'");
            return py::make_tuple(r->pass, r->detail);
        },
        py::arg("name"), py::arg("seed") = 42);

    m.def("suite_names", []() { return suite_names(); });
}
