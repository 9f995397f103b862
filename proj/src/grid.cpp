#include "airyevolve/grid.hpp"

#include "airyevolve/kernels.hpp"

#include <cmath>

namespace airyevolve {

void validate(const GridFunction& f) {
    if (!(f.dx > 0.0)) throw std::domain_error("GridFunction: dx must be positive");
    if (f.values.size() < 2) throw std::domain_error("GridFunction: need at least 2 samples");
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("GridFunction: non-finite sample");
}

GridFunction make_grid(double x_min, double x_max, std::size_t n) {
    if (n < 2 || !(x_max > x_min)) throw std::domain_error("make_grid: bad extent");
    GridFunction g;
    g.x0 = x_min;
    g.dx = (x_max - x_min) / static_cast<double>(n - 1);
    g.values.assign(n, cplx(0.0));
    return g;
}

void apodize(GridFunction& f, const Window& w) {
    for (std::size_t i = 0; i < f.size(); ++i) f.values[i] *= w(f.x(i));
}

GridFunction add_grids(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw std::domain_error("add_grids: size mismatch");
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] += b.values[i];
    return r;
}

GridFunction sub_grids(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw std::domain_error("sub_grids: size mismatch");
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

GridFunction scale_grid(const GridFunction& a, cplx c) {
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] *= c;
    return r;
}

double l2_norm(const GridFunction& f) {
    return std::sqrt(kernels::sum_abs2(f.values.data(), f.size()) * f.dx);
}

double linf_norm(const GridFunction& f) {
    return std::sqrt(kernels::max_abs2(f.values.data(), f.size()));
}

double l2_rel_error(const GridFunction& a, const GridFunction& b) {
    double num = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) num += std::norm(a[i] - b[i]);
    double den = kernels::sum_abs2(b.values.data(), b.size());
    return std::sqrt(num / den);
}

double linf_rel_error(const GridFunction& a, const GridFunction& b) {
    double num = kernels::max_abs_diff(a.values.data(), b.values.data(), a.size());
    return num / linf_norm(b);
}

double l2_rel_error_where(const GridFunction& a, const GridFunction& b,
                          const std::function<bool(double)>& mask) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask(a.x(i))) continue;
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / den);
}

double linf_rel_error_where(const GridFunction& a, const GridFunction& b,
                            const std::function<bool(double)>& mask) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask(a.x(i))) continue;
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return num / den;
}

double edge_magnitude_ratio(const GridFunction& f, double edge_frac) {
    std::size_t n = f.size();
    auto m = static_cast<std::size_t>(std::ceil(edge_frac * static_cast<double>(n)));
    m = std::max<std::size_t>(m, 1);
    double edge = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        edge = std::max(edge, std::abs(f[i]));
        edge = std::max(edge, std::abs(f[n - 1 - i]));
    }
    double peak = linf_norm(f);
    return peak > 0.0 ? edge / peak : 0.0;
}

double peak_location(const GridFunction& f) {
    std::size_t n = f.size(), jm = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double v = std::norm(f[j]);
        if (v > best) {
            best = v;
            jm = j;
        }
    }
    if (jm == 0 || jm == n - 1) return f.x(jm);
    double ym = std::norm(f[jm - 1]), y0 = std::norm(f[jm]), yp = std::norm(f[jm + 1]);
    double denom = ym - 2.0 * y0 + yp;
    if (denom == 0.0) return f.x(jm);
    return f.x(jm) + 0.5 * f.dx * (ym - yp) / denom;
}

double peak_density(const GridFunction& f) {
    return kernels::max_abs2(f.values.data(), f.size());
}

} // namespace airyevolve
