#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <utility>

namespace airyevolve::quad {

/// Adaptive Gauss-Kronrod integration on a finite interval.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-10, unsigned max_depth = 15) {
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, max_depth, tol);
}

/// Single non-adaptive 15-point Kronrod panel; used where the caller has
/// already split the domain into well-behaved segments.
template <class F>
double panel(F&& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 0);
}

} // namespace airyevolve::quad
