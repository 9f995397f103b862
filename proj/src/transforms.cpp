#include "airyevolve/transforms.hpp"

#include "airyevolve/fft.hpp"
#include "airyevolve/kernels.hpp"
#include "airyevolve/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace airyevolve::transforms {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKernelTrunc = 1e-18;  // Gaussian kernel tail cut
constexpr double kAiryTrunc = 1e-12;    // Airy kernel cut on the decaying side
constexpr double kEdgeDecay = 1e-6;     // required input decay for truncated kernels

void require_decay(const GridFunction& f, const char* who) {
    if (edge_magnitude_ratio(f) > kEdgeDecay)
        throw std::runtime_error(std::string(who) +
                                 ": input does not decay at the grid edges; apodize it");
}

// out[i] = sum_j kern[(i-j) - m_lo] * f[j] for i-j in [m_lo, m_hi].
// kern holds values for displacements m_lo..m_hi.
GridFunction correlate_displacement(const GridFunction& f, const std::vector<double>& kern,
                                    long m_lo) {
    const long n = static_cast<long>(f.size());
    const long m_hi = m_lo + static_cast<long>(kern.size()) - 1;
    std::vector<double> rev(kern.rbegin(), kern.rend()); // rev[p] = kern at m_hi - p
    GridFunction out = f;
    for (long i = 0; i < n; ++i) {
        long j_lo = std::max<long>(0, i - m_hi);
        long j_hi = std::min<long>(n - 1, i - m_lo);
        if (j_hi < j_lo) {
            out.values[static_cast<std::size_t>(i)] = 0.0;
            continue;
        }
        long p0 = j_lo - (i - m_hi); // offset into rev
        out.values[static_cast<std::size_t>(i)] = kernels::dot_real_complex(
            rev.data() + p0, f.values.data() + j_lo,
            static_cast<std::size_t>(j_hi - j_lo + 1));
    }
    return out;
}

GridFunction spectral_multiply(const GridFunction& f,
                               const std::function<cplx(double)>& mult) {
    GridFunction out = f;
    fft::Fft1D plan(f.size());
    plan.forward(out.values.data());
    auto k = fft::wavenumbers(f.size(), f.dx);
    for (std::size_t m = 0; m < out.size(); ++m) out.values[m] *= mult(k[m]);
    plan.inverse(out.values.data());
    return out;
}

// Smallest s with Ai(s) below the truncation threshold (decaying side).
double airy_cut() {
    double s = 1.0;
    while (special_fn::airy_ai(s) > kAiryTrunc && s < 40.0) s += 0.25;
    return s;
}

// Shared machinery for the two Airy-kernel convolutions. The kernel value
// at grid displacement m = i - j is coef * Ai((sign_m * m * dx)/c); the
// argument is positive (super-exponential decay, truncatable) on one side
// and oscillatory (kept out to the full grid extent) on the other.
GridFunction airy_kernel_correlate(const GridFunction& f, double c, double coef,
                                   bool arg_is_minus_m) {
    const long n = static_cast<long>(f.size());
    const double s_cut = airy_cut();
    const long w_decay = static_cast<long>(std::ceil(s_cut * std::abs(c) / f.dx));

    // displacement m runs over [m_lo, m_hi]; the decaying-argument side is
    // truncated at w_decay, the oscillatory side spans the grid
    long m_lo, m_hi;
    const bool decay_at_positive_m = (arg_is_minus_m ? (c < 0.0) : (c > 0.0));
    if (decay_at_positive_m) {
        m_lo = -(n - 1);
        m_hi = std::min<long>(n - 1, w_decay);
    } else {
        m_lo = -std::min<long>(n - 1, w_decay);
        m_hi = n - 1;
    }
    std::vector<double> kern(static_cast<std::size_t>(m_hi - m_lo + 1));
    for (long m = m_lo; m <= m_hi; ++m) {
        double arg = (arg_is_minus_m ? -1.0 : 1.0) * static_cast<double>(m) * f.dx / c;
        kern[static_cast<std::size_t>(m - m_lo)] = coef * special_fn::airy_ai(arg);
    }
    return correlate_displacement(f, kern, m_lo);
}

} // namespace

void validate(const TransformParams& p) {
    if (p.airy_scale_alpha == 0.0)
        throw std::domain_error("TransformParams: airy_scale_alpha must be nonzero");
}

GridFunction gauss_weierstrass(const GridFunction& f, cplx b, GwPath path) {
    validate(f);
    if (b == cplx(0.0)) return f;
    if (b.real() < 0.0)
        throw std::domain_error("gauss_weierstrass: Re(b) must be >= 0");

    const bool is_real = (b.imag() == 0.0);
    if (path == GwPath::automatic) path = is_real ? GwPath::quadrature : GwPath::spectral;
    if (path == GwPath::quadrature && !is_real)
        throw std::domain_error("gauss_weierstrass: quadrature path needs real b");

    if (path == GwPath::quadrature) {
        const double bb = b.real();
        if (bb < f.dx * f.dx) // sub-grid kernel: the discrete Gaussian degenerates
            return spectral_multiply(f, [&](double k) { return std::exp(-bb * k * k); });
        require_decay(f, "gauss_weierstrass");
        const double radius = std::sqrt(4.0 * bb * std::log(1.0 / kKernelTrunc));
        const long w = static_cast<long>(std::ceil(radius / f.dx));
        std::vector<double> kern(static_cast<std::size_t>(2 * w + 1));
        const double norm = f.dx / (2.0 * std::sqrt(kPi * bb));
        for (long m = -w; m <= w; ++m) {
            double d = static_cast<double>(m) * f.dx;
            kern[static_cast<std::size_t>(m + w)] = norm * std::exp(-d * d / (4.0 * bb));
        }
        return correlate_displacement(f, kern, -w);
    }
    return spectral_multiply(f, [&](double k) { return std::exp(-b * k * k); });
}

poly::PolyDense gauss_weierstrass(const poly::PolyDense& f, const poly::Rational& b) {
    return poly::diff_exponential(f, b, 2);
}

GridFunction airy_transform(const GridFunction& f, double alpha) {
    validate(f);
    if (alpha == 0.0) throw std::domain_error("airy_transform: alpha must be nonzero");
    require_decay(f, "airy_transform");
    // kernel at displacement m: (dx/alpha) * Ai(m dx / alpha)
    return airy_kernel_correlate(f, alpha, f.dx / alpha, /*arg_is_minus_m=*/false);
}

GridFunction cubic_evolution(const GridFunction& g, double t) {
    validate(g);
    if (t == 0.0) return g;
    require_decay(g, "cubic_evolution");
    const double c = std::cbrt(3.0 * t);
    // kernel at displacement m = i - j: (dx/|c|) * Ai((xi - x)/c) with
    // xi - x = -m dx; the |c| keeps unit kernel mass for t < 0, where the
    // substitution sigma = (xi - x)/c reverses orientation
    return airy_kernel_correlate(g, c, g.dx / std::abs(c), /*arg_is_minus_m=*/true);
}

poly::PolyDense cubic_evolution(const poly::PolyDense& g, const poly::Rational& t) {
    return poly::diff_exponential(g, t, 3);
}

double weyl_conjugation_check(unsigned n, const poly::Rational& alpha) {
    if (n > poly::kMaxDegree - 3)
        throw std::domain_error("weyl_conjugation_check: n too large for exact arithmetic");
    const poly::Rational a3 = alpha * alpha * alpha;
    const poly::PolyDense f = poly::monomial(n);
    // direct: eta f - alpha^3 f''
    poly::PolyDense direct =
        poly::sub(poly::mul_x(f), poly::scale(poly::derivative(f, 2), a3));
    // conjugated: exp(-(a3/3) d^3) [ eta . exp((a3/3) d^3) f ]
    poly::PolyDense conj = poly::diff_exponential(
        poly::mul_x(poly::diff_exponential(f, a3 / 3, 3)), -a3 / 3, 3);
    poly::PolyDense diff = poly::sub(direct, conj);
    poly::Rational worst(0);
    for (const auto& cfc : diff.coeffs) {
        poly::Rational m = cfc < 0 ? poly::Rational(-cfc) : cfc;
        if (m > worst) worst = m;
    }
    return poly::to_double(worst);
}

GridFunction translate(const GridFunction& f, double a) {
    if (a == 0.0) return f;
    return spectral_multiply(f, [&](double k) { return std::polar(1.0, k * a); });
}

GridFunction derivative(const GridFunction& f, int order) {
    GridFunction out = f;
    fft::Fft1D plan(f.size());
    plan.forward(out.values.data());
    auto k = fft::wavenumbers(f.size(), f.dx);
    const bool even_n = (f.size() % 2 == 0);
    for (std::size_t m = 0; m < out.size(); ++m) {
        // zero the unmatched Nyquist mode for odd derivative orders
        if (even_n && m == f.size() / 2 && order % 2 == 1) {
            out.values[m] = 0.0;
            continue;
        }
        out.values[m] *= std::pow(cplx(0.0, k[m]), order);
    }
    plan.inverse(out.values.data());
    return out;
}

GridFunction derivative_fd(const GridFunction& f, int order) {
    if (order != 1 && order != 2)
        throw std::domain_error("derivative_fd: order must be 1 or 2");
    const std::size_t n = f.size();
    if (n < 5) throw std::domain_error("derivative_fd: need at least 5 samples");
    GridFunction out = f;
    const double h = f.dx;
    const auto& v = f.values;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        if (order == 1)
            out.values[i] =
                (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
        else
            out.values[i] = (-v[i + 2] + 16.0 * v[i + 1] - 30.0 * v[i] +
                             16.0 * v[i - 1] - v[i - 2]) /
                            (12.0 * h * h);
    }
    // second-order one-sided values at the edges; callers mask to the interior
    auto fd_edge = [&](std::size_t i, int dir) {
        auto at = [&](long k) {
            return v[static_cast<std::size_t>(static_cast<long>(i) + dir * k)];
        };
        const double s = static_cast<double>(dir);
        if (order == 1) return s * (-1.5 * at(0) + 2.0 * at(1) - 0.5 * at(2)) / h;
        return (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / (h * h);
    };
    out.values[0] = fd_edge(0, +1);
    out.values[1] = fd_edge(1, +1);
    out.values[n - 2] = fd_edge(n - 2, -1);
    out.values[n - 1] = fd_edge(n - 1, -1);
    return out;
}

GridFunction multiply_pointwise(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw std::domain_error("multiply_pointwise: size mismatch");
    GridFunction out = a;
    kernels::complex_mul(out.values.data(), a.values.data(), b.values.data(), a.size());
    return out;
}

GridFunction mul_by_x(const GridFunction& f) {
    GridFunction out = f;
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] *= f.x(i);
    return out;
}

double gw_position_identity_residual(const GridFunction& f, double t, const Window& w) {
    GridFunction lhs = gauss_weierstrass(mul_by_x(f), t);
    GridFunction gw = gauss_weierstrass(f, t);
    GridFunction rhs = add_grids(mul_by_x(gw), scale_grid(derivative_fd(gw), 2.0 * t));
    return linf_rel_error_where(lhs, rhs, [&](double x) { return w.interior(x); });
}

double gw_derivative_identity_residual(const GridFunction& f, double t, const Window& w) {
    GridFunction lhs = gauss_weierstrass(derivative_fd(f), t);
    GridFunction rhs = derivative_fd(gauss_weierstrass(f, t));
    return linf_rel_error_where(lhs, rhs, [&](double x) { return w.interior(x); });
}

double ait_position_identity_residual(const GridFunction& f, double alpha, const Window& w) {
    GridFunction lhs = airy_transform(mul_by_x(f), alpha);
    GridFunction at = airy_transform(f, alpha);
    double a3 = alpha * alpha * alpha;
    // the transformed function oscillates without decay on one side, so the
    // eta-derivatives must be local stencils
    GridFunction rhs = sub_grids(mul_by_x(at), scale_grid(derivative_fd(at, 2), a3));
    return linf_rel_error_where(lhs, rhs, [&](double x) { return w.interior(x); });
}

double ait_derivative_identity_residual(const GridFunction& f, double alpha, const Window& w) {
    GridFunction lhs = airy_transform(derivative_fd(f), alpha);
    GridFunction rhs = derivative_fd(airy_transform(f, alpha));
    return linf_rel_error_where(lhs, rhs, [&](double x) { return w.interior(x); });
}

double chain_rule_residual(const GridFunction& g, double p, double q, double x_cmp) {
    GridFunction eqx = g;
    for (std::size_t i = 0; i < g.size(); ++i)
        eqx.values[i] = std::exp(q * g.x(i)) * g.values[i];
    GridFunction lhs = gauss_weierstrass(eqx, p);

    GridFunction rhs = gauss_weierstrass(g, p);
    rhs = translate(rhs, 2.0 * p * q);
    const double c = std::exp(p * q * q);
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs.values[i] *= c * std::exp(q * rhs.x(i));
    return linf_rel_error_where(lhs, rhs, [&](double x) { return std::abs(x) <= x_cmp; });
}

double chain_rule_const_residual(double p, double q) {
    // exp(p d^2) e^{qx} acting on the constant function: no window can both
    // stay flat near the comparison range and crush the growing exponential
    // at grid edges, so evaluate the heat-kernel integral directly per point
    // and compare with e^{p q^2 + q x}.
    const double r = std::sqrt(4.0 * p * std::log(1e22)) + 2.0 * p * std::abs(q) + 1.0;
    double worst = 0.0;
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        auto integrand = [&](double xi) {
            return std::exp(-(x - xi) * (x - xi) / (4.0 * p) + q * xi);
        };
        double v = quad::integrate(integrand, x - r, x + r, 1e-13) /
                   (2.0 * std::sqrt(kPi * p));
        double ref = std::exp(p * q * q + q * x);
        worst = std::max(worst, std::abs(v - ref) / ref);
    }
    return worst;
}

double exp_airy_moment(double u) {
    if (!(u > 0.0)) throw std::domain_error("exp_airy_moment: u must be positive");
    // e^{u sigma} Ai(sigma): left tail suppressed by the exponential, right
    // tail by Ai decay; trapezoid at fine spacing
    const double lo = -34.0 / u;
    double hi = 2.0;
    while (std::exp(u * hi) * std::abs(special_fn::airy_ai(hi)) > 1e-12 && hi < 60.0)
        hi += 0.5;
    const double dx = 0.004;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / dx)) + 1;
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = lo + dx * static_cast<double>(i);
        double v = std::exp(u * s) * special_fn::airy_ai(s);
        if (i == 0 || i + 1 == n) v *= 0.5;
        double y = v - comp, t2 = sum + y;
        comp = (t2 - sum) - y;
        sum = t2;
    }
    return sum * dx;
}

} // namespace airyevolve::transforms
