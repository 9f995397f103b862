#pragma once

#include <complex>
#include <stdexcept>

// Airy function Ai, its two-variable diffusive extension Ai(x, z) and the
// complex-time closed form. Two independent evaluation routes are kept on
// purpose: a power-series/asymptotic hybrid for Ai itself, and damped
// oscillatory quadrature of the defining integral
//
//   Ai(x, z) = (1/pi) \int_0^inf cos(xi^3/3 + (x/A) xi) exp(-z xi^2/A^2) dxi
//
// (the cube term alone carries the 1/3; with z = 0 this is the standard Airy
// integrand, and the z-damped form is exactly exp(z d^2/dx^2) Ai(x/A)).
//
// As a function of x at fixed z >= 0, y = Ai(x, z) satisfies
//
//   A^3 y'' - 2 z y' - x y = 0,
//
// obtained by integrating d/dxi [sin(phi) exp(-z xi^2/A^2)] over [0, inf).
// fit_two_var_ode confirms this form empirically from high-accuracy samples;
// candidate_ode_residual evaluates a differently-signed textbook candidate
// (A^3 y'' + 2 A^2 z y' + x y) kept for comparison, which does NOT vanish.

namespace airyevolve::special_fn {

using cplx = std::complex<double>;

struct AiryScale {
    double A = 1.0; // length scale, > 0
};

struct QuadratureConfig {
    double xi_max = 200.0; // cap on the integration cutoff in xi
    int n_points = 16;     // sample budget per half-oscillation segment
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
};

void validate(const AiryScale& s);
void validate(const QuadratureConfig& c);

/// Ai(x) via Maclaurin series (|x| <= 4.5) or asymptotic expansion beyond.
double airy_ai(double x);

/// Ai(x) by damped quadrature of the defining integral with eps -> 0
/// Richardson extrapolation of the convergence factor exp(-eps xi^2).
/// Independent of airy_ai's series/asymptotic route.
double airy_ai_quad(double x, const QuadratureConfig& cfg = {});

/// Two-variable extension Ai(x, z), real damped regime z >= 0.
double airy_two_var(double x, double z, AiryScale scale = {},
                    const QuadratureConfig& cfg = {});

/// Damped-quadrature engine for complex diffusion parameter, Re(z) > 0.
/// `deriv` returns d^deriv/dx^deriv of the integral (0..2), taken under
/// the integral sign. Exposed so validation code can run its own
/// contour-damped evaluations and eps -> 0 ladders.
cplx airy_two_var_damped(double x, cplx z, AiryScale scale = {},
                         const QuadratureConfig& cfg = {}, int deriv = 0);

/// Closed-form complex-time value Ai(x, i*tau) = exp(-i Theta) Ai((A^3 x - tau^2)/A^4):
/// a rigid remapping of the profile times a unit-modulus phase. (The phase
/// sign follows the defining integral; see airy_theta.)
cplx airy_complex_closed_form(double x, double tau, AiryScale scale = {});

/// Theta(x, tau) = (tau/A^6)((2/3) tau^2 - A^3 x). The closed form carries
/// exp(-i Theta): completing the cube in the defining integral leaves the
/// constant phase x tau/A^3 - (2/3) tau^3/A^6 = -Theta, confirmed against
/// both the damped quadrature and the spectral free propagator.
double airy_theta(double x, double tau, AiryScale scale = {});

/// Residual of the textbook candidate ODE A^3 y'' + 2 A^2 z y' + x y with
/// y = Ai(., z), derivatives by central differences. See header comment:
/// the satisfied equation differs in sign and in the power of A.
double airy_ode_residual(double x, double z, AiryScale scale = {});

/// Least-squares fit of A^3 y'' = p * y' + q * x * y over x in [x_lo, x_hi]
/// (n sample points, derivatives taken under the integral sign).
/// The satisfied ODE corresponds to p = 2z, q = 1.
struct TwoVarOdeFit {
    double p = 0.0;
    double q = 0.0;
    double rms_fitted = 0.0;   // residual of the fitted coefficients
    double rms_candidate = 0.0; // residual of the textbook candidate form
};
TwoVarOdeFit fit_two_var_ode(double z, AiryScale scale, double x_lo, double x_hi,
                             int n = 41, const QuadratureConfig& cfg = {});

} // namespace airyevolve::special_fn
