#include "frftlab/angle.hpp"

#include <cmath>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kExactEps = 1e-12;  // machine-exact special-angle window
}

AngleContext angle_context(double alpha, double delta_sing) {
    if (!(delta_sing > 0.0)) throw NumericError("delta_sing must be > 0");
    double a = std::fmod(alpha, kTwoPi);
    if (a < 0.0) a += kTwoPi;

    AngleContext ctx;
    ctx.alpha = a;
    ctx.delta_sing = delta_sing;

    const double d0 = std::min(a, kTwoPi - a);
    const double dpi = std::abs(a - kPi);
    if (d0 < kExactEps) {
        ctx.cls = AngleClass::Identity;
        return ctx;
    }
    if (dpi < kExactEps) {
        ctx.cls = AngleClass::Reflection;
        return ctx;
    }
    const double s = std::sin(a);
    ctx.cot_a = std::cos(a) / s;
    ctx.csc_a = 1.0 / s;
    ctx.a_alpha = std::sqrt(cplx(1.0, -ctx.cot_a));
    ctx.cls = (std::min(d0, dpi) < delta_sing) ? AngleClass::NearSingular : AngleClass::Generic;
    return ctx;
}

const char* angle_class_name(AngleClass c) {
    switch (c) {
        case AngleClass::Generic: return "Generic";
        case AngleClass::Identity: return "Identity";
        case AngleClass::Reflection: return "Reflection";
        case AngleClass::NearSingular: return "NearSingular";
    }
    return "?";
}

}  // namespace frftlab
