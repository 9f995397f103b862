#pragma once

#include "airyevolve/grid.hpp"
#include "airyevolve/transforms.hpp"

#include <functional>
#include <string>
#include <vector>

// Ordering functions for the time-dependent generator
// L(t) = alpha(t) d_x^2 + beta(t) x on the algebra {1, d_x, d_x^2, x}:
// U(t) = exp(a + b d_x + c d_x^2) exp(d x) with a(0)=b(0)=c(0)=d(0)=0 and
//   a' = -d' b,  b' = -2 d' c,  c' = alpha,  d' = beta.
// Two independent evaluation routes (adaptive ODE integration and the
// explicit nested quadratures) are kept and cross-checked.

namespace airyevolve::weinorman {

struct CoeffFunctions {
    std::function<double(double)> alpha; // diffusion coefficient, >= 0 on the range
    std::function<double(double)> beta;  // linear-potential coefficient
    std::vector<double> breakpoints;     // known discontinuities (piecewise presets)
};

/// Named presets used by the CLI: "constant" (p0 = value), "linear"
/// (p0 * t), "sin" (sin(p0 * t)), "step" (p0 for t < p1, else p0/2).
std::function<double(double)> coeff_preset(const std::string& name, double p0,
                                           double p1 = 0.0);

struct WeiNormanCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

enum class Method { ode, nested_quadrature };

WeiNormanCoeffs wei_norman_coeffs(const CoeffFunctions& cf, double t, Method method);

/// exp(Phi~) . shift by (b + 2 c d) . diffusion by c applied to f0, with
/// Phi~(x) = a + d (c d + b + x). Requires c(t) >= 0 (diffusive regime).
GridFunction factorized_evolution(const CoeffFunctions& cf, const GridFunction& f0,
                                  double t, Method method = Method::ode);

} // namespace airyevolve::weinorman
