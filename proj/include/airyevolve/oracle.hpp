#pragma once

#include "airyevolve/grid.hpp"

#include <functional>
#include <vector>

// Independent finite-difference/spectral solvers used solely to validate the
// analytic/operational paths. This module deliberately shares nothing with
// the transform/evolution code except the GridFunction carrier and the raw
// FFT wrapper, so cross-validation stays meaningful.

namespace airyevolve::oracle {

enum class Scheme { crank_nicolson, split_step_fourier };

struct OracleConfig {
    double x_min = -20.0;
    double x_max = 20.0;
    int n_grid = 2048; // >= 256
    double dt = 1e-3;
    double apod_center = 0.0;
    double apod_width = 0.0; // 0 = no apodization
    Scheme scheme = Scheme::crank_nicolson;
    int diagnostics_stride = 1;
};
void validate(const OracleConfig& cfg);

/// Sample initial data on the grid described by the config (and apodize it
/// if the config carries a window).
GridFunction make_oracle_grid(const OracleConfig& cfg,
                              const std::function<double(double)>& f);

/// Crank-Nicolson solution of d_t F = alpha(t) d_x^2 F + beta(t) x F on f0's
/// grid with Dirichlet-zero far boundaries. Second order in time and space.
/// Throws if the accuracy guard dt <= safety*dx^2/(2 max alpha) fails
/// (safety = 20) or if the solution reaches the boundaries
/// (edge magnitude > 1e-8 of the max: widen the domain).
GridFunction crank_nicolson_heat(const GridFunction& f0,
                                 const std::function<double(double)>& beta_of_t,
                                 const std::function<double(double)>& alpha_of_t,
                                 double t_final, const OracleConfig& cfg);

/// Strang-split spectral evolution of i d_tau Psi = -d_x^2 Psi + b(tau) x Psi
/// on a periodic grid; b sampled at the step midpoint. Diagnostics carry the
/// norm drift and the peak trajectory/amplitude history.
struct SplitStepResult {
    GridFunction psi;
    double norm_drift = 0.0;
    std::vector<double> times;
    std::vector<double> peak_x;
    std::vector<double> peak_density;
};
SplitStepResult split_step_schrodinger(const GridFunction& f0,
                                       const std::function<double(double)>& b_of_tau,
                                       double tau_final, const OracleConfig& cfg);

/// Non-periodic Crank-Nicolson cross-check for the split-step scheme:
/// i d_tau Psi = -d_x^2 Psi + b(tau) x Psi with Dirichlet-zero boundaries.
GridFunction crank_nicolson_schrodinger(const GridFunction& f0,
                                        const std::function<double(double)>& b_of_tau,
                                        double tau_final, const OracleConfig& cfg);

} // namespace airyevolve::oracle
