#ifndef FRFTLAB_ANGLE_HPP
#define FRFTLAB_ANGLE_HPP

#include "frftlab/types.hpp"

namespace frftlab {

enum class AngleClass { Generic, Identity, Reflection, NearSingular };

// Order alpha reduced to [0, 2pi) with its kernel coefficients cached.
// Identity/Reflection only on machine-exact hits of the special angles;
// within delta_sing of a multiple of pi otherwise -> NearSingular.
struct AngleContext {
    double alpha = 0.0;  // reduced
    AngleClass cls = AngleClass::Identity;
    double cot_a = 0.0;
    double csc_a = 0.0;
    cplx a_alpha{1.0, 0.0};  // principal sqrt(1 - i*cot), Re > 0
    double delta_sing = 1e-3;

    bool generic() const { return cls == AngleClass::Generic; }
};

AngleContext angle_context(double alpha, double delta_sing = 1e-3);

const char* angle_class_name(AngleClass c);

}  // namespace frftlab

#endif
