#pragma once

#include "airyevolve/airy.hpp"
#include "airyevolve/grid.hpp"
#include "airyevolve/transforms.hpp"

#include <functional>
#include <vector>

// Factorized evolution solvers: phase x translation x diffusion for the
// heat equation with a linear term, d_t F = d_x^2 F + beta x F, and the
// rescaled Schrodinger equation i d_tau Psi = -d_x^2 Psi + b x Psi
// (obtained from the heat solution under t -> i tau, beta -> -b), plus the
// closed-form rigidly-translating Airy packet and its centroid law.

namespace airyevolve::evolution {

using special_fn::AiryScale;

struct LinearPotentialParams {
    double beta = 0.0;   // heat-equation linear coefficient
    double b = 0.0;      // Schrodinger rescaled coefficient (inverse cube length)
    double A = 1.0;      // Airy length scale, > 0
    double B = 1.0;      // field normalization cbrt(2 m qE), > 0 when used
    double m_mass = 1.0; // > 0
    double hbar = 1.0;   // > 0
};
void validate(const LinearPotentialParams& p);

/// Rescale physical Schrodinger inputs (mass, force F or qE0, hbar, t) to the
/// dimensionless pair: tau = hbar t / (2 m), b = 2 F m / hbar^2.
struct Rescaled {
    double tau;
    double b;
};
Rescaled rescale_physical(double mass, double force, double hbar, double t);

/// Field normalization B = cbrt(2 m qE).
double field_scale(double mass, double qE);

/// The phase exponents appearing in the factorized solutions; both vanish
/// at zero time.
struct PhaseFactors {
    std::function<double(double x, double t, double beta)> phi;
    std::function<double(double x, double tau)> theta; // at a fixed AiryScale
};
PhaseFactors make_phase_factors(AiryScale scale);

/// Phi(x, t; beta) = (1/3) beta^2 t^3 + beta t x.
double phase_phi(double x, double t, double beta);

/// e^{Phi} . shift by beta t^2 . heat diffusion of f0 (quadrature GW route).
GridFunction solve_heat_linear(const GridFunction& f0, double beta, double t,
                               transforms::GwPath path = transforms::GwPath::automatic);
GridFunction solve_heat_linear(const GridFunction& f0, const LinearPotentialParams& p,
                               double t);

/// e^{-i Phi} . shift by b tau^2 . spectral free propagation by i tau.
GridFunction solve_schrodinger_linear(const GridFunction& f0, double b, double tau);

struct GridSpec {
    double x_min;
    double x_max;
    std::size_t n;
};

/// Closed-form Airy packet under the linear potential, sampled on a grid,
/// with a peak/density report.
struct AiryPacketState {
    GridFunction psi;
    double x_peak;
    double max_density;
    double phi_at_peak;   // external-field phase at the peak
    double theta_at_peak; // free-propagation phase at the peak
};
AiryPacketState solve_schrodinger_airy(double b, double tau, AiryScale scale,
                                       const GridSpec& grid);
AiryPacketState solve_schrodinger_airy(const LinearPotentialParams& p, double tau,
                                       const GridSpec& grid);

/// Predicted peak trajectory x_peak(tau) = x_peak(0) - (b - A^{-3}) tau^2.
double airy_peak_trajectory(double x_peak0, double b, double tau, AiryScale scale);

/// X_c(t) = B^3 t^2/(4 m^2) + \int_0^t ((t - s)/m) phi(s) ds on the given
/// (strictly increasing) time grid.
std::vector<double> centroid_trajectory(const std::function<double(double)>& phi_of_t,
                                        double B, double m_mass,
                                        const std::vector<double>& t_grid);

} // namespace airyevolve::evolution
