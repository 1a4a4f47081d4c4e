#ifndef FRFTLAB_SPECIAL_HPP
#define FRFTLAB_SPECIAL_HPP

#include <cstddef>

#include "frftlab/types.hpp"

namespace frftlab {

struct SeriesSpec {
    std::size_t max_terms = 200;
    double target_accuracy = 1e-14;
};

/// int_0^x sin(t^2) dt. Alternating series up to |x| = 6, quadrature beyond. Odd.
double fresnel_c(double x, const SeriesSpec& spec = {});

/// int_0^x cos(t^2) dt (same series family, even-power variant).
double fresnel_cos(double x, const SeriesSpec& spec = {});

/// int_0^x cos(pi t^2 / 2) dt, the unit-normalized cosine variant.
double fresnel_cos_normalized(double x, const SeriesSpec& spec = {});

/// Si(x) = int_0^x sin(t)/t dt. Series up to |x| = 30, quadrature beyond. Odd,
/// tends to pi/2.
double sine_integral(double x, const SeriesSpec& spec = {});

// Which reading of the Fresnel factor the chirp closed form is evaluated under.
enum class FresnelVariant { SineIntegral, CosineSeries, CosineNormalized };

const char* fresnel_variant_name(FresnelVariant v);
double fresnel_variant_value(FresnelVariant v, double x, const SeriesSpec& spec = {});

}  // namespace frftlab

#endif
