// Registry of parametric coefficient families. Every family is bounded and
// Lipschitz in x by construction, so problem documents stay serializable and
// hypothesis checks stay tractable.
#pragma once

#include "lagqvi/types.hpp"

#include <string>

namespace lagqvi {

enum class CoefficientFamily {
    Constant,           // params: {c}
    AffineClamped,      // params: {a0, a_t, a_x, bound}; clamp(a0+a_t*t+a_x*x, +-bound)
    SinusoidalBounded,  // params: {amp, w_t, w_x, phase}; amp*sin(w_t*t+w_x*x+phase)
    CustomTable,        // params: {x0, dx, y0, y1, ...}; piecewise linear in x,
                        // constant extrapolation, t-independent
};

struct CoefficientRef {
    CoefficientFamily family = CoefficientFamily::Constant;
    Vector params = Vector::Zero(1);
};

CoefficientRef constant_coefficient(Real c);
CoefficientRef affine_clamped(Real a0, Real a_t, Real a_x, Real bound);
CoefficientRef sinusoidal_bounded(Real amp, Real w_t, Real w_x, Real phase);
CoefficientRef custom_table(Real x0, Real dx, const Vector& values);

// Throws ConfigError if the parameter vector does not match the family.
void check_params(const CoefficientRef& c);

Real eval(const CoefficientRef& c, Real t, Real x);

// Sup-norm bound of the family, valid for all (t, x).
Real value_bound(const CoefficientRef& c);

// Lipschitz constant in x, valid for all t.
Real lipschitz_bound(const CoefficientRef& c);

std::string family_name(CoefficientFamily f);
CoefficientFamily family_from_name(const std::string& name);

}  // namespace lagqvi
