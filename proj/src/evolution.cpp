#include "airyevolve/evolution.hpp"

#include "airyevolve/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace airyevolve::evolution {

void validate(const LinearPotentialParams& p) {
    if (!(p.A > 0.0)) throw std::domain_error("LinearPotentialParams: A must be positive");
    if (!(p.B > 0.0)) throw std::domain_error("LinearPotentialParams: B must be positive");
    if (!(p.m_mass > 0.0) || !(p.hbar > 0.0))
        throw std::domain_error("LinearPotentialParams: m_mass and hbar must be positive");
}

Rescaled rescale_physical(double mass, double force, double hbar, double t) {
    if (!(mass > 0.0) || !(hbar > 0.0))
        throw std::domain_error("rescale_physical: mass and hbar must be positive");
    return {hbar * t / (2.0 * mass), 2.0 * force * mass / (hbar * hbar)};
}

double field_scale(double mass, double qE) {
    return std::cbrt(2.0 * mass * qE);
}

double phase_phi(double x, double t, double beta) {
    return beta * beta * t * t * t / 3.0 + beta * t * x;
}

PhaseFactors make_phase_factors(AiryScale scale) {
    special_fn::validate(scale);
    PhaseFactors pf;
    pf.phi = phase_phi;
    pf.theta = [scale](double x, double tau) { return special_fn::airy_theta(x, tau, scale); };
    return pf;
}

GridFunction solve_heat_linear(const GridFunction& f0, double beta, double t,
                               transforms::GwPath path) {
    validate(f0);
    if (!(t > 0.0)) throw std::domain_error("solve_heat_linear: t must be positive");
    GridFunction f = transforms::gauss_weierstrass(f0, t, path); // diffusion
    f = transforms::translate(f, beta * t * t);                  // shift
    for (std::size_t i = 0; i < f.size(); ++i)
        f.values[i] *= std::exp(phase_phi(f.x(i), t, beta));
    return f;
}

GridFunction solve_schrodinger_linear(const GridFunction& f0, double b, double tau) {
    validate(f0);
    if (tau == 0.0) return f0;
    GridFunction f = transforms::gauss_weierstrass(f0, cplx(0.0, tau),
                                                   transforms::GwPath::spectral);
    f = transforms::translate(f, b * tau * tau);
    for (std::size_t i = 0; i < f.size(); ++i)
        f.values[i] *= std::polar(1.0, -phase_phi(f.x(i), tau, b));
    return f;
}

GridFunction solve_heat_linear(const GridFunction& f0, const LinearPotentialParams& p,
                               double t) {
    validate(p);
    return solve_heat_linear(f0, p.beta, t);
}

AiryPacketState solve_schrodinger_airy(const LinearPotentialParams& p, double tau,
                                       const GridSpec& grid) {
    validate(p);
    return solve_schrodinger_airy(p.b, tau, AiryScale{p.A}, grid);
}

AiryPacketState solve_schrodinger_airy(double b, double tau, AiryScale scale,
                                       const GridSpec& grid) {
    special_fn::validate(scale);
    const double A = scale.A;
    const double a3 = A * A * A;
    const double shift = b * tau * tau;
    GridFunction psi = make_grid(grid.x_min, grid.x_max, grid.n);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        double x = psi.x(i);
        double arg = (a3 * x + (a3 * b - 1.0) * tau * tau) / (a3 * A);
        // psi = e^{-i Phi} Ai(x + b tau^2, i tau) with the closed-form phase
        double phase = -special_fn::airy_theta(x + shift, tau, scale) - phase_phi(x, tau, b);
        psi.values[i] = std::polar(1.0, phase) * special_fn::airy_ai(arg);
    }
    AiryPacketState st{std::move(psi), 0.0, 0.0, 0.0, 0.0};
    st.x_peak = peak_location(st.psi);
    st.max_density = peak_density(st.psi);
    st.phi_at_peak = phase_phi(st.x_peak, tau, b);
    st.theta_at_peak = special_fn::airy_theta(st.x_peak + shift, tau, scale);
    return st;
}

double airy_peak_trajectory(double x_peak0, double b, double tau, AiryScale scale) {
    special_fn::validate(scale);
    const double a3 = scale.A * scale.A * scale.A;
    return x_peak0 - (b - 1.0 / a3) * tau * tau;
}

std::vector<double> centroid_trajectory(const std::function<double(double)>& phi_of_t,
                                        double B, double m_mass,
                                        const std::vector<double>& t_grid) {
    if (!(B > 0.0) || !(m_mass > 0.0))
        throw std::domain_error("centroid_trajectory: B and m_mass must be positive");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::domain_error("centroid_trajectory: t_grid must be strictly increasing");

    const double self_acc = B * B * B / (4.0 * m_mass * m_mass);
    std::vector<double> xc(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        double drive = 0.0;
        if (t != 0.0)
            drive = quad::integrate(
                        [&](double s) { return (t - s) * phi_of_t(s); }, 0.0, t, 1e-12) /
                    m_mass;
        xc[i] = self_acc * t * t + drive;
    }
    return xc;
}

} // namespace airyevolve::evolution
