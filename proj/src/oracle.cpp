#include "airyevolve/oracle.hpp"

#include "airyevolve/fft.hpp"
#include "airyevolve/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace airyevolve::oracle {

namespace {

constexpr double kBoundaryTol = 1e-8;
constexpr double kStabilitySafety = 20.0;

// Thomas solve for a constant-offdiagonal tridiagonal system
// (-r) u_{j-1} + diag_j u_j + (-r) u_{j+1} = rhs_j.
void solve_tridiagonal(const std::vector<cplx>& diag, cplx r, std::vector<cplx>& rhs) {
    const std::size_t n = rhs.size();
    std::vector<cplx> cp(n);
    cp[0] = -r / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t j = 1; j < n; ++j) {
        cplx denom = diag[j] + r * cp[j - 1];
        cp[j] = -r / denom;
        rhs[j] = (rhs[j] + r * rhs[j - 1]) / denom;
    }
    for (std::size_t j = n - 1; j-- > 0;) rhs[j] -= cp[j] * rhs[j + 1];
}

double max_abs_sample(const std::function<double(double)>& f, double t0, double t1) {
    double m = 0.0;
    for (int i = 0; i <= 512; ++i)
        m = std::max(m, std::abs(f(t0 + (t1 - t0) * i / 512.0)));
    return m;
}

} // namespace

void validate(const OracleConfig& cfg) {
    if (!(cfg.x_min < cfg.x_max)) throw std::domain_error("OracleConfig: x_min >= x_max");
    if (cfg.n_grid < 256) throw std::domain_error("OracleConfig: n_grid must be >= 256");
    if (!(cfg.dt > 0.0)) throw std::domain_error("OracleConfig: dt must be positive");
    if (cfg.apod_width < 0.0) throw std::domain_error("OracleConfig: negative window width");
    if (cfg.diagnostics_stride < 1)
        throw std::domain_error("OracleConfig: diagnostics_stride must be >= 1");
}

namespace {

// apply the config window to the working state, requiring it to sit inside
// the state's actual grid
void apply_window(GridFunction& u, const OracleConfig& cfg) {
    if (cfg.apod_width <= 0.0) return;
    if (cfg.apod_center - cfg.apod_width < u.x0 ||
        cfg.apod_center + cfg.apod_width > u.x_max())
        throw std::domain_error("OracleConfig: apodization window not inside the grid");
    apodize(u, Window{cfg.apod_center, cfg.apod_width});
}

} // namespace

GridFunction make_oracle_grid(const OracleConfig& cfg,
                              const std::function<double(double)>& f) {
    validate(cfg);
    GridFunction g = make_grid(cfg.x_min, cfg.x_max, static_cast<std::size_t>(cfg.n_grid));
    for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = f(g.x(i));
    apply_window(g, cfg);
    return g;
}

GridFunction crank_nicolson_heat(const GridFunction& f0,
                                 const std::function<double(double)>& beta_of_t,
                                 const std::function<double(double)>& alpha_of_t,
                                 double t_final, const OracleConfig& cfg) {
    airyevolve::validate(f0);
    validate(cfg);
    if (!(t_final >= 0.0)) throw std::domain_error("crank_nicolson_heat: t_final < 0");

    GridFunction u = f0;
    apply_window(u, cfg);
    if (t_final == 0.0) return u;

    const double dx = u.dx;
    const double alpha_max = std::max(max_abs_sample(alpha_of_t, 0.0, t_final), 1e-300);
    if (cfg.dt > kStabilitySafety * dx * dx / (2.0 * alpha_max))
        throw std::domain_error("crank_nicolson_heat: dt too large for this grid; "
                                "refine dt or coarsen the grid");

    const auto steps = static_cast<std::size_t>(std::ceil(t_final / cfg.dt));
    const double dt = t_final / static_cast<double>(steps);
    const std::size_t n = u.size();
    const std::size_t ni = n - 2; // interior unknowns, Dirichlet-zero ends

    std::vector<cplx> rhs(ni), diag(ni);
    for (std::size_t s = 0; s < steps; ++s) {
        const double t0 = dt * static_cast<double>(s);
        const double t1 = t0 + dt;
        const double a0 = alpha_of_t(t0), a1 = alpha_of_t(t1);
        const double b0 = beta_of_t(t0), b1 = beta_of_t(t1);
        const double r0 = a0 * dt / (2.0 * dx * dx);
        const double r1 = a1 * dt / (2.0 * dx * dx);

        for (std::size_t j = 0; j < ni; ++j) {
            const double x = u.x(j + 1);
            const cplx uj = u.values[j + 1];
            const cplx um = u.values[j];
            const cplx up = u.values[j + 2];
            rhs[j] = uj + r0 * (um - 2.0 * uj + up) + 0.5 * dt * b0 * x * uj;
            diag[j] = 1.0 + 2.0 * r1 - 0.5 * dt * b1 * x;
        }
        solve_tridiagonal(diag, cplx(r1), rhs);
        for (std::size_t j = 0; j < ni; ++j) u.values[j + 1] = rhs[j];
        u.values[0] = 0.0;
        u.values[n - 1] = 0.0;
    }

    if (edge_magnitude_ratio(u) > kBoundaryTol)
        throw std::runtime_error("crank_nicolson_heat: boundary contamination detected; "
                                 "widen the domain");
    return u;
}

SplitStepResult split_step_schrodinger(const GridFunction& f0,
                                       const std::function<double(double)>& b_of_tau,
                                       double tau_final, const OracleConfig& cfg) {
    airyevolve::validate(f0);
    validate(cfg);
    if (tau_final < 0.0) throw std::domain_error("split_step_schrodinger: tau_final < 0");

    SplitStepResult res;
    res.psi = f0;
    apply_window(res.psi, cfg);

    const std::size_t n = res.psi.size();
    auto record = [&](double tau) {
        res.times.push_back(tau);
        res.peak_x.push_back(peak_location(res.psi));
        res.peak_density.push_back(peak_density(res.psi));
    };
    record(0.0);
    if (tau_final == 0.0) return res;

    const auto steps = static_cast<std::size_t>(std::ceil(tau_final / cfg.dt));
    const double dt = tau_final / static_cast<double>(steps);

    fft::Fft1D plan(n);
    const auto k = fft::wavenumbers(n, res.psi.dx);
    std::vector<cplx> kinetic(n);
    for (std::size_t m = 0; m < n; ++m)
        kinetic[m] = std::polar(1.0, -k[m] * k[m] * dt);

    const double norm0 = kernels::sum_abs2(res.psi.values.data(), n);
    double drift = 0.0;

    std::vector<cplx> half_kick(n);
    for (std::size_t s = 0; s < steps; ++s) {
        const double tau_mid = dt * (static_cast<double>(s) + 0.5);
        const double b = b_of_tau(tau_mid);
        for (std::size_t j = 0; j < n; ++j)
            half_kick[j] = std::polar(1.0, -0.5 * b * res.psi.x(j) * dt);

        kernels::complex_mul(res.psi.values.data(), res.psi.values.data(),
                             half_kick.data(), n);
        plan.forward(res.psi.values.data());
        kernels::complex_mul(res.psi.values.data(), res.psi.values.data(),
                             kinetic.data(), n);
        plan.inverse(res.psi.values.data());
        kernels::complex_mul(res.psi.values.data(), res.psi.values.data(),
                             half_kick.data(), n);

        const double norm = kernels::sum_abs2(res.psi.values.data(), n);
        drift = std::max(drift, std::abs(norm - norm0) / norm0);
        if (drift > 1e-6)
            throw std::runtime_error("split_step_schrodinger: norm drift above 1e-6; "
                                     "reduce the step size");
        if ((s + 1) % static_cast<std::size_t>(cfg.diagnostics_stride) == 0 ||
            s + 1 == steps)
            record(dt * static_cast<double>(s + 1));
    }
    res.norm_drift = drift;
    return res;
}

GridFunction crank_nicolson_schrodinger(const GridFunction& f0,
                                        const std::function<double(double)>& b_of_tau,
                                        double tau_final, const OracleConfig& cfg) {
    airyevolve::validate(f0);
    validate(cfg);
    if (!(tau_final >= 0.0))
        throw std::domain_error("crank_nicolson_schrodinger: tau_final < 0");

    GridFunction u = f0;
    apply_window(u, cfg);
    if (tau_final == 0.0) return u;

    const double dx = u.dx;
    if (cfg.dt > kStabilitySafety * dx * dx / 2.0)
        throw std::domain_error("crank_nicolson_schrodinger: dt too large for this grid");

    const auto steps = static_cast<std::size_t>(std::ceil(tau_final / cfg.dt));
    const double dt = tau_final / static_cast<double>(steps);
    const std::size_t n = u.size();
    const std::size_t ni = n - 2;
    const cplx iu(0.0, 1.0);
    const cplx r = iu * dt / (2.0 * dx * dx); // same r on both half-steps

    std::vector<cplx> rhs(ni), diag(ni);
    for (std::size_t s = 0; s < steps; ++s) {
        const double t0 = dt * static_cast<double>(s);
        const double b0 = b_of_tau(t0), b1 = b_of_tau(t0 + dt);
        for (std::size_t j = 0; j < ni; ++j) {
            const double x = u.x(j + 1);
            const cplx uj = u.values[j + 1];
            rhs[j] = uj + r * (u.values[j] - 2.0 * uj + u.values[j + 2]) -
                     0.5 * dt * iu * b0 * x * uj;
            diag[j] = 1.0 + 2.0 * r + 0.5 * dt * iu * b1 * x;
        }
        solve_tridiagonal(diag, r, rhs);
        for (std::size_t j = 0; j < ni; ++j) u.values[j + 1] = rhs[j];
        u.values[0] = 0.0;
        u.values[n - 1] = 0.0;
    }
    if (edge_magnitude_ratio(u) > kBoundaryTol)
        throw std::runtime_error("crank_nicolson_schrodinger: boundary contamination "
                                 "detected; widen the domain");
    return u;
}

} // namespace airyevolve::oracle
