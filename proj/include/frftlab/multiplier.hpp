#ifndef FRFTLAB_MULTIPLIER_HPP
#define FRFTLAB_MULTIPLIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frftlab/frft.hpp"

namespace frftlab {

/// Bounded symbol m of the transform variable. The declared sup_bound is
/// enforced at every probed point (to a 1e-9 slack).
struct MultiplierFn {
    std::function<cplx(double)> evaluator;
    double sup_bound = 1.0;
    std::function<cplx(double)> derivative_evaluator;  // optional

    bool has_derivative() const { return static_cast<bool>(derivative_evaluator); }
    /// m'(x): analytic when provided, central differences at h = 1e-4*max(1,|x|) otherwise.
    cplx derivative(double x) const;
};

/// T_m f = F_{-alpha}[ m * (F_alpha f) ], back on f's grid.
Signal apply_multiplier(const MultiplierFn& m, double alpha, const Signal& f,
                        const UniformGrid& freq_grid, std::optional<double> bandwidth = {});

UniformGrid default_multiplier_grid(const Signal& f);

/// Fractional Hilbert transform by its symbol -i*sgn((pi-alpha)*x), sgn(0)=0.
Signal frac_hilbert_mult(const Signal& f, double alpha,
                         std::optional<UniformGrid> freq_grid = {},
                         std::optional<double> bandwidth = {});

/// Principal-value route: chirp-conjugated discrete Hilbert sum with the node
/// at the singularity excluded and 1/(x-t) terms paired symmetrically.
/// Warns when the signal does not decay at the grid boundary.
Warned<Signal> frac_hilbert_pv(const Signal& f, double alpha);

struct CheckRow {
    std::string checker;
    double param = 0.0;
    double value = 0.0;
    bool pass = true;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    double max_value = 0.0;
    bool pass = true;
};

std::string check_report_csv(const CheckReport& r);

/// max |x m'(x)| over probes vs B.
CheckReport check_mikhlin(const MultiplierFn& m, double bound, const UniformGrid& probe_grid);

/// (1/R) * int_{R<|x|<2R} |m'|^2 per R; reports sqrt(max) as the empirical bound.
CheckReport check_hormander(const MultiplierFn& m, const std::vector<double>& r_set);

/// Total variation of m over each binary interval [2^j, 2^{j+1}] and mirror.
CheckReport check_marcinkiewicz(const MultiplierFn& m, int j_min, int j_max);

struct BernsteinReport {
    double l2_m = 0.0;
    double l2_mprime = 0.0;
    double product = 0.0;  // the operator-norm bound carries an unknown constant
};

BernsteinReport bernstein_norms(const MultiplierFn& m, const UniformGrid& probe_grid);

}  // namespace frftlab

#endif
