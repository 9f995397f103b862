#pragma once

#include "airyevolve/airy.hpp"
#include "airyevolve/grid.hpp"
#include "airyevolve/poly.hpp"

// Gauss-Weierstrass transform (the action of exp(b d^2/dx^2)), Airy
// transform, cubic-diffusion evolution exp(t d^3/dx^3), and the operator
// identities relating them. Every operator has two routes: an exact
// polynomial route (rational coefficients) and a grid route
// (windowed-kernel quadrature or FFT multiplier); identities are tested
// exactly on polynomials and to tolerance on grids.

namespace airyevolve::transforms {

struct TransformParams {
    double diffusion_time_b = 0.0; // GW-T parameter, > 0 on the real path
    double airy_scale_alpha = 1.0; // Ai-T parameter, nonzero
    double cubic_time_t = 0.0;
};
void validate(const TransformParams& p);

enum class GwPath { automatic, quadrature, spectral };

/// exp(b d^2/dx^2) f. Real b > 0 runs the windowed-kernel quadrature of the
/// heat-kernel convolution (falling back to the spectral multiplier when b
/// is below grid resolution, b < dx^2, where the discrete Gaussian
/// degenerates); non-real b with Re(b) >= 0 runs the FFT multiplier
/// exp(-b k^2) (free Fresnel propagation for b = i tau). b = 0 is the
/// identity shortcut.
GridFunction gauss_weierstrass(const GridFunction& f, cplx b,
                               GwPath path = GwPath::automatic);

/// Exact polynomial route: exp(b d^2/dx^2) on coefficients.
poly::PolyDense gauss_weierstrass(const poly::PolyDense& f, const poly::Rational& b);

/// Ai-T: Phi_alpha(eta) = (1/alpha) \int f(x) Ai((eta - x)/alpha) dx on f's grid.
GridFunction airy_transform(const GridFunction& f, double alpha);

/// exp(t d^3/dx^3) g via the scaled-Airy-kernel convolution
/// (1/cbrt(3t)) \int Ai((xi - x)/cbrt(3t)) g(xi) dxi.
GridFunction cubic_evolution(const GridFunction& g, double t);

/// Exact polynomial route: exp(t d^3/dx^3) on coefficients.
poly::PolyDense cubic_evolution(const poly::PolyDense& g, const poly::Rational& t);

/// Coefficient-level check of X_eta = exp(-(alpha^3/3) d^3) . eta . exp((alpha^3/3) d^3)
/// against eta - alpha^3 d^2 on f = eta^n. Returns the max |coefficient
/// deviation| (exact arithmetic: 0 when the identity holds).
double weyl_conjugation_check(unsigned n, const poly::Rational& alpha);

// --- spectral grid utilities (band-limited, consistent with the FFT
// propagator) ---------------------------------------------------------

GridFunction translate(const GridFunction& f, double a); // f(x + a)
GridFunction derivative(const GridFunction& f, int order = 1);
GridFunction multiply_pointwise(const GridFunction& a, const GridFunction& b);
GridFunction mul_by_x(const GridFunction& f);

/// Fourth-order central-difference derivative (order 1 or 2). Local stencils
/// only: usable on functions that do not decay at the grid edges, where the
/// spectral derivative would ring.
GridFunction derivative_fd(const GridFunction& f, int order = 1);

// --- identity residuals (relative L-inf on the window interior) -------

/// GW-T of x*f vs (xi + 2t d/dxi)(GW-T of f).
double gw_position_identity_residual(const GridFunction& f, double t, const Window& w);
/// GW-T of f' vs d/dxi (GW-T of f).
double gw_derivative_identity_residual(const GridFunction& f, double t, const Window& w);
/// Ai-T of x*f vs (eta - alpha^3 d^2/deta^2)(Ai-T of f).
double ait_position_identity_residual(const GridFunction& f, double alpha, const Window& w);
/// Ai-T of f' vs d/deta (Ai-T of f).
double ait_derivative_identity_residual(const GridFunction& f, double alpha, const Window& w);

/// exp(p d^2) e^{qx} g vs e^{p q^2} e^{qx} exp(2pq d) exp(p d^2) g, with each
/// factor realized by gauss_weierstrass, pointwise multiplication and
/// spectral translation. Relative L-inf over |x| <= x_cmp.
double chain_rule_residual(const GridFunction& g, double p, double q, double x_cmp);

/// Same pipeline applied to g == 1 (windowed), compared against
/// exp(p q^2 + q x) on |x| <= x_cmp.
double chain_rule_const_residual(double p, double q);

/// \int e^{u sigma} Ai(sigma) dsigma by trapezoid on an automatic grid
/// (left tail killed by e^{u sigma}, right tail by Ai decay). Equals
/// exp(u^3/3).
double exp_airy_moment(double u);

} // namespace airyevolve::transforms
