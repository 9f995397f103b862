#include "airyevolve/wei_norman.hpp"

#include "airyevolve/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace airyevolve::weinorman {

std::function<double(double)> coeff_preset(const std::string& name, double p0, double p1) {
    if (name == "constant") return [p0](double) { return p0; };
    if (name == "linear") return [p0](double t) { return p0 * t; };
    if (name == "sin") return [p0](double t) { return std::sin(p0 * t); };
    if (name == "step") return [p0, p1](double t) { return t < p1 ? p0 : 0.5 * p0; };
    throw std::domain_error("coeff_preset: unknown preset '" + name + "'");
}

namespace {

WeiNormanCoeffs coeffs_ode(const CoeffFunctions& cf, double t) {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 4>; // a, b, c, d
    State y{0.0, 0.0, 0.0, 0.0};
    auto sys = [&](const State& s, State& dsdt, double u) {
        const double be = cf.beta(u);
        dsdt[0] = -be * s[1];
        dsdt[1] = -2.0 * be * s[2];
        dsdt[2] = cf.alpha(u);
        dsdt[3] = be;
    };
    auto stepper = odeint::make_controlled(1e-12, 1e-9,
                                           odeint::runge_kutta_dopri5<State>());
    // integrate piecewise between declared discontinuities
    std::vector<double> stops{0.0};
    for (double b : cf.breakpoints)
        if (b > 0.0 && b < t) stops.push_back(b);
    stops.push_back(t);
    std::sort(stops.begin(), stops.end());
    for (std::size_t k = 0; k + 1 < stops.size(); ++k)
        odeint::integrate_adaptive(stepper, sys, y, stops[k], stops[k + 1],
                                   (stops[k + 1] - stops[k]) / 256.0);
    return {y[0], y[1], y[2], y[3]};
}

// Cumulative composite Gauss-Legendre integrals over a shared cell partition
// (cells aligned with any declared coefficient breakpoints, so each panel
// sees a smooth integrand). Supports the nested structure
//   c = int a,  d = int b,  b = -2 int b*C,  a = 2 int b*(int b*C)
// in a single sweep each instead of recursively adaptive quadratures.
class Cumulative {
  public:
    Cumulative(const std::function<double(double)>& f, const std::vector<double>& knots)
        : f_(f), knots_(knots), cum_(knots.size(), 0.0) {
        for (std::size_t k = 0; k + 1 < knots_.size(); ++k)
            cum_[k + 1] = cum_[k] + panel(knots_[k], knots_[k + 1]);
    }

    double total() const { return cum_.back(); }

    double operator()(double s) const {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
        std::size_t k = static_cast<std::size_t>(
            std::max<std::ptrdiff_t>(0, it - knots_.begin() - 1));
        k = std::min(k, knots_.size() - 2);
        return cum_[k] + panel(knots_[k], s);
    }

  private:
    double panel(double a, double b) const {
        if (b <= a) return 0.0;
        return boost::math::quadrature::gauss<double, 7>::integrate(f_, a, b);
    }

    const std::function<double(double)>& f_;
    std::vector<double> knots_;
    std::vector<double> cum_;
};

std::vector<double> make_knots(double t, const std::vector<double>& breakpoints) {
    const int cells = 512;
    std::vector<double> knots;
    knots.reserve(cells + 1 + breakpoints.size());
    for (int k = 0; k <= cells; ++k) knots.push_back(t * k / cells);
    for (double b : breakpoints)
        if (b > 0.0 && b < t) knots.push_back(b);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
}

WeiNormanCoeffs coeffs_nested(const CoeffFunctions& cf, double t) {
    const auto knots = make_knots(t, cf.breakpoints);

    Cumulative C(cf.alpha, knots);
    Cumulative D(cf.beta, knots);
    std::function<double(double)> inner = [&](double s) { return cf.beta(s) * C(s); };
    Cumulative Bint(inner, knots);
    std::function<double(double)> outer = [&](double s) { return cf.beta(s) * Bint(s); };
    Cumulative Aint(outer, knots);

    WeiNormanCoeffs w;
    w.c = C.total();
    w.d = D.total();
    w.b = -2.0 * Bint.total();
    w.a = 2.0 * Aint.total();
    return w;
}

} // namespace

WeiNormanCoeffs wei_norman_coeffs(const CoeffFunctions& cf, double t, Method method) {
    if (!(t > 0.0)) throw std::domain_error("wei_norman_coeffs: t must be positive");
    if (!cf.alpha || !cf.beta)
        throw std::domain_error("wei_norman_coeffs: coefficient functions required");
    return method == Method::ode ? coeffs_ode(cf, t) : coeffs_nested(cf, t);
}

GridFunction factorized_evolution(const CoeffFunctions& cf, const GridFunction& f0,
                                  double t, Method method) {
    validate(f0);
    const WeiNormanCoeffs w = wei_norman_coeffs(cf, t, method);
    if (w.c < 0.0)
        throw std::domain_error("factorized_evolution: c(t) < 0 (anti-diffusive regime)");

    GridFunction f = w.c > 0.0 ? transforms::gauss_weierstrass(f0, w.c) : f0;
    f = transforms::translate(f, w.b + 2.0 * w.c * w.d);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double phase = w.a + w.d * (w.c * w.d + w.b + f.x(i));
        f.values[i] *= std::exp(phase);
    }
    return f;
}

} // namespace airyevolve::weinorman
