#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace airyevolve {

using cplx = std::complex<double>;

/// Complex-valued samples on a uniform 1-D spatial grid. Carrier for all
/// transforms, evolution solutions and oracle states.
struct GridFunction {
    double x0 = 0.0;          // left endpoint
    double dx = 1.0;          // spacing, > 0
    std::vector<cplx> values; // >= 2 finite samples

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double x_max() const { return x(values.size() - 1); }

    cplx& operator[](std::size_t i) { return values[i]; }
    const cplx& operator[](std::size_t i) const { return values[i]; }
};

void validate(const GridFunction& f);

GridFunction make_grid(double x_min, double x_max, std::size_t n);

template <class F>
GridFunction sample(double x_min, double x_max, std::size_t n, F&& fn) {
    GridFunction g = make_grid(x_min, x_max, n);
    for (std::size_t i = 0; i < n; ++i) g.values[i] = cplx(fn(g.x(i)));
    return g;
}

/// Smooth apodization window w(x) = exp(-((x - center)/width)^8).
/// Tolerance claims on windowed data hold on the interior |x-center| <= 0.6*width.
struct Window {
    double center = 0.0;
    double width = 1.0;

    double operator()(double x) const {
        double u = (x - center) / width;
        double u2 = u * u;
        double u8 = u2 * u2;
        u8 *= u8;
        return std::exp(-u8);
    }
    bool interior(double x) const { return std::abs(x - center) <= 0.6 * width; }
};

void apodize(GridFunction& f, const Window& w);

GridFunction add_grids(const GridFunction& a, const GridFunction& b);
GridFunction sub_grids(const GridFunction& a, const GridFunction& b);
GridFunction scale_grid(const GridFunction& a, cplx c);

// Norms and error metrics. "rel" variants are normalized by the
// corresponding norm of the reference `b`.
double l2_norm(const GridFunction& f);
double linf_norm(const GridFunction& f);
double l2_rel_error(const GridFunction& a, const GridFunction& b);
double linf_rel_error(const GridFunction& a, const GridFunction& b);

// Same metrics restricted to grid points with mask(x) true.
double l2_rel_error_where(const GridFunction& a, const GridFunction& b,
                          const std::function<bool(double)>& mask);
double linf_rel_error_where(const GridFunction& a, const GridFunction& b,
                            const std::function<bool(double)>& mask);

/// Largest |f| over the outer `edge_frac` fraction of the grid on each side,
/// relative to the global max. Used to detect non-decaying inputs before
/// truncated-kernel quadrature.
double edge_magnitude_ratio(const GridFunction& f, double edge_frac = 0.02);

/// Location of the maximum of |f|^2, refined by quadratic interpolation
/// through the three samples around the discrete argmax.
double peak_location(const GridFunction& f);
double peak_density(const GridFunction& f);

} // namespace airyevolve
