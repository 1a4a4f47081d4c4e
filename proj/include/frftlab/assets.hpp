#ifndef FRFTLAB_ASSETS_HPP
#define FRFTLAB_ASSETS_HPP

#include <functional>

#include "frftlab/frft.hpp"
#include "frftlab/special.hpp"

namespace frftlab {

// ---- staircase: sum_n n * chi_[n, n+1/n^3), truncated at n_max ----

struct StaircaseSignal {
    Signal signal;
    double l1_mass = 0.0;     // sum_{n<=n_max} 1/n^2
    double l2_mass_sq = 0.0;  // sum_{n<=n_max} 1/n, diverges like ln(n_max)
};

// Blocks are deposited by cell-overlap splitting, so the discrete L1 mass
// matches the analytic partial sum at any step; blocks narrower than a cell
// become a single quadrature mass.
StaircaseSignal staircase_signal(std::size_t n_max, const UniformGrid& grid);

/// Truncated series (A e^{i pi x^2 cot})/(2 pi i x) * sum n e^{-2 pi i n x}(1 - e^{-2 pi i x/n^3}).
/// Exact against the kernel quadrature where cot(alpha) = 0 and csc(alpha) = 1;
/// see staircase_series_compare for the general-order adjudication.
cplx staircase_frft_series(double x, double alpha, std::size_t n_terms);

// ---- one-sided exponential chirp with a closed-form transform ----

struct ExpChirpPair {
    std::function<cplx(double)> time_fn;  // e^{-pi(2t + i t^2 cot a)} for t >= 0
    std::function<cplx(double)> frft_fn;  // A e^{i pi x^2 cot a} / (2 pi (1 + i x csc a))
};

ExpChirpPair exp_chirp_pair(double alpha);

// ---- the order-pi/4 test chirp u and its stated transform ----

/// e^{-i pi t^2}/sqrt(|t|) on 0<|t|<1, e^{-i pi t^2}/t^2 on |t|>=1.
cplx chirp_u(double t);

/// Stated closed form of (F_{pi/4} u)(w) under a chosen Fresnel reading.
/// with_amplitude_factor multiplies by A_{pi/4} = (1-i)^{1/2}.
cplx chirp_u_frft(double w, FresnelVariant variant = FresnelVariant::SineIntegral,
                  bool with_amplitude_factor = false, const SeriesSpec& spec = {});

// ---- graded quadrature path for signals with integrable singularities ----

struct GradedPartition {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Symmetric partition of [-t_max, t_max] minus a vanishing core: geometric
/// octaves from 2^-45 up to 1 (pts_per_octave nodes each), then a uniform zone
/// out to t_max with the given step.
GradedPartition graded_symmetric_partition(double t_max, double smooth_step,
                                           int pts_per_octave = 64);

/// Direct kernel quadrature of a pointwise-defined signal over a graded
/// partition; the oracle path for chirp_u.
cplx frft_pointwise_direct(const std::function<cplx(double)>& u, const AngleContext& ctx,
                           double x, const GradedPartition& q);

/// Quadrature of |u| over the partition.
double abs_mass(const std::function<cplx(double)>& u, const GradedPartition& q);

// ---- adjudication of the stated chirp transform against the oracle ----

struct ChirpFormulaResidual {
    FresnelVariant variant{};
    bool with_amplitude_factor = false;
    double max_rel_err = 0.0;
};

struct ChirpAdjudication {
    std::vector<ChirpFormulaResidual> residuals;
    ChirpFormulaResidual best;
    bool stated_form_ok = false;  // any amplitude-factor-free reading within target
    bool corrected_form_ok = false;
    double target = 5e-2;
};

/// Compare every reading of the closed form against the graded direct
/// quadrature on 0.2 <= |w| <= 3; the quadrature is canonical.
ChirpAdjudication adjudicate_chirp_u_frft(double target = 5e-2);

std::string chirp_adjudication_csv(const ChirpAdjudication& a);

/// Measured gap between the truncated staircase series and the kernel
/// quadrature at order alpha, max over sample points 0.2 <= |x| <= 3.
double staircase_series_compare(double alpha, std::size_t n_max);

}  // namespace frftlab

#endif
