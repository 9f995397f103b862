#include "airyevolve/airy.hpp"

#include "airyevolve/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace airyevolve::special_fn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kAi0 = 0.35502805388781723926;       // Ai(0) = 3^{-2/3}/Gamma(2/3)
constexpr double kAiPrime0 = -0.25881940379280679841; // Ai'(0) = -3^{-1/3}/Gamma(1/3)

// Maclaurin series of the two fundamental solutions of y'' = x y.
double ai_series(double x) {
    const double x3 = x * x * x;
    double f = 1.0, g = x, tf = 1.0, tg = x;
    for (int k = 0; k < 200; ++k) {
        tf *= x3 / ((3 * k + 2.0) * (3 * k + 3.0));
        tg *= x3 / ((3 * k + 3.0) * (3 * k + 4.0));
        f += tf;
        g += tg;
        if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g)))
            break;
    }
    return kAi0 * f + kAiPrime0 * g;
}

// Poincare expansion for x >> 0, truncated at the smallest term.
double ai_asym_pos(double x) {
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < 60; ++k) {
        double next = term * (-(6 * k + 5.0) * (6 * k + 3.0) * (6 * k + 1.0) /
                              (216.0 * (k + 1.0) * (2 * k + 1.0) * zeta));
        if (std::abs(next) >= std::abs(term)) break;
        sum += next;
        term = next;
    }
    return std::exp(-zeta) * sum / (2.0 * kSqrtPi * std::pow(x, 0.25));
}

// Oscillatory expansion for x << 0 (argument xm = -x > 0).
double ai_asym_neg(double xm) {
    const double zeta = (2.0 / 3.0) * xm * std::sqrt(xm);
    double uz = 1.0; // u_k zeta^{-k}
    double s_even = 0.0, s_odd = 0.0, sign_even = 1.0, sign_odd = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 80; ++k) {
        if (std::abs(uz) >= prev) break;
        prev = std::abs(uz);
        if (k % 2 == 0) {
            s_even += sign_even * uz;
            sign_even = -sign_even;
        } else {
            s_odd += sign_odd * uz;
            sign_odd = -sign_odd;
        }
        uz *= (6 * k + 1.0) * (6 * k + 3.0) * (6 * k + 5.0) /
              (216.0 * (k + 1.0) * (2 * k + 1.0) * zeta);
    }
    const double arg = zeta - kPi / 4.0;
    return (std::cos(arg) * s_even + std::sin(arg) * s_odd) /
           (kSqrtPi * std::pow(xm, 0.25));
}

// --- damped oscillatory quadrature of the defining integral ------------

// integrand for d^deriv/dx^deriv:
//   (1/pi) (xi/A)^deriv cos(xi^3/3 + c xi + deriv pi/2) exp(-s xi^2),
// with c = x/A and s = z/A^2, Re(s) > 0.
struct DampedIntegrand {
    double c;
    double s_re, s_im;
    double inv_a;
    int deriv;

    cplx operator()(double xi) const {
        double phi = xi * xi * xi / 3.0 + c * xi + deriv * (kPi / 2.0);
        double xi2 = xi * xi;
        double env = std::exp(-s_re * xi2);
        double pw = 1.0;
        for (int k = 0; k < deriv; ++k) pw *= xi * inv_a;
        double amp = pw * env * std::cos(phi);
        if (s_im == 0.0) return {amp, 0.0};
        // exp(-i s_im xi^2)
        double cs = std::cos(s_im * xi2), sn = std::sin(s_im * xi2);
        return {amp * cs, -amp * sn};
    }
};

// Segment [0, cutoff] so the phase-variation bound
//   P(xi) = xi^3/3 + |c| xi + |s_im| xi^2
// advances by <= pi per segment, then apply a 15-point Kronrod panel
// (or cfg.n_points/16 panels) on each.
cplx integrate_damped(double x, cplx z, double A, int deriv, const QuadratureConfig& cfg) {
    const double c = x / A;
    const cplx s = z / (A * A);
    const double sr = s.real(), si = std::abs(s.imag()), ca = std::abs(c);
    const double tail = cfg.abs_tol / 20.0;

    auto pbound = [&](double xi) { return xi * xi * xi / 3.0 + ca * xi + si * xi * xi; };
    auto pderiv = [&](double xi) { return xi * xi + ca + 2.0 * si * xi; };

    // cutoff: stationary-phase-free tail bound envelope/P' below `tail`
    double cut = std::sqrt(std::log(2.0 / tail) / sr);
    while (cut < cfg.xi_max &&
           std::exp(-sr * cut * cut) / (pderiv(cut) + 1.0) > tail)
        cut *= 1.2;
    cut = std::min(cut, cfg.xi_max);

    const int panels = std::max(1, cfg.n_points / 16);
    DampedIntegrand f{c, sr, s.imag(), 1.0 / A, deriv};

    double sum_re = 0.0, comp_re = 0.0, sum_im = 0.0, comp_im = 0.0;
    auto accumulate = [&](cplx v) {
        double y = v.real() - comp_re, t = sum_re + y;
        comp_re = (t - sum_re) - y;
        sum_re = t;
        y = v.imag() - comp_im;
        t = sum_im + y;
        comp_im = (t - sum_im) - y;
        sum_im = t;
    };

    double a = 0.0;
    while (a < cut) {
        // next point where the phase bound grows by pi (3 Newton steps,
        // started safely above for the flat region near xi = 0)
        double target = pbound(a) + kPi;
        double b = a + std::min(kPi / std::max(pderiv(a), 1e-12), 3.0);
        for (int it = 0; it < 4; ++it) {
            double fb = pbound(b) - target;
            b -= fb / pderiv(b);
            if (b <= a) b = a + 1e-3;
        }
        b = std::min(b, cut);
        for (int p = 0; p < panels; ++p) {
            double pa = a + (b - a) * p / panels;
            double pb = a + (b - a) * (p + 1) / panels;
            double re = quad::panel([&](double xi) { return f(xi).real(); }, pa, pb);
            double im = (s.imag() == 0.0)
                            ? 0.0
                            : quad::panel([&](double xi) { return f(xi).imag(); }, pa, pb);
            accumulate({re, im});
        }
        a = b;
        if (std::exp(-sr * a * a) < tail) break;
    }
    return cplx(sum_re, sum_im) / kPi;
}

// Polynomial extrapolation to 0 (Neville) over positive nodes.
double neville_at_zero(const double* xs, const double* ys, int n) {
    std::vector<double> t(ys, ys + n);
    for (int level = 1; level < n; ++level)
        for (int i = 0; i < n - level; ++i)
            t[i] = t[i + 1] + (t[i] - t[i + 1]) * xs[i + level] / (xs[i + level] - xs[i]);
    return t[0];
}

// Engine entry valid for Re(z) >= 0: damps directly when the real part is
// comfortably positive, otherwise evaluates on an eps-ladder of additional
// convergence factors exp(-eps xi^2) and extrapolates eps -> 0.
cplx two_var_engine(double x, cplx z, double A, int deriv, const QuadratureConfig& cfg) {
    const double a2 = A * A;
    if (z.real() / a2 >= 5e-3) return integrate_damped(x, z, A, deriv, cfg);

    constexpr int K = 7;
    std::array<double, K> eps{};
    std::array<double, K> vre{}, vim{};
    double e = 0.4;
    for (int k = 0; k < K; ++k, e *= 0.5) {
        eps[k] = e;
        cplx v = integrate_damped(x, z + cplx(e * a2, 0.0), A, deriv, cfg);
        vre[k] = v.real();
        vim[k] = v.imag();
    }
    return {neville_at_zero(eps.data(), vre.data(), K),
            neville_at_zero(eps.data(), vim.data(), K)};
}

} // namespace

void validate(const AiryScale& s) {
    if (!(s.A > 0.0) || !std::isfinite(s.A))
        throw std::domain_error("AiryScale: A must be positive");
}

void validate(const QuadratureConfig& c) {
    if (!(c.xi_max > 0.0)) throw std::domain_error("QuadratureConfig: xi_max must be positive");
    if (c.n_points < 16) throw std::domain_error("QuadratureConfig: n_points must be >= 16");
    if (!(c.abs_tol > 0.0 && c.abs_tol < 1.0) || !(c.rel_tol > 0.0 && c.rel_tol < 1.0))
        throw std::domain_error("QuadratureConfig: tolerances must lie in (0, 1)");
}

double airy_ai(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy_ai: non-finite argument");
    if (std::abs(x) <= 4.5) return ai_series(x);
    return x > 0.0 ? ai_asym_pos(x) : ai_asym_neg(-x);
}

double airy_ai_quad(double x, const QuadratureConfig& cfg) {
    if (!std::isfinite(x)) throw std::domain_error("airy_ai_quad: non-finite argument");
    validate(cfg);
    return two_var_engine(x, cplx(0.0), 1.0, 0, cfg).real();
}

double airy_two_var(double x, double z, AiryScale scale, const QuadratureConfig& cfg) {
    validate(scale);
    validate(cfg);
    if (!std::isfinite(x) || !std::isfinite(z))
        throw std::domain_error("airy_two_var: non-finite argument");
    if (z < 0.0)
        throw std::domain_error("airy_two_var: z < 0 (anti-diffusion regime) excluded");
    return two_var_engine(x, cplx(z, 0.0), scale.A, 0, cfg).real();
}

cplx airy_two_var_damped(double x, cplx z, AiryScale scale, const QuadratureConfig& cfg,
                         int deriv) {
    validate(scale);
    validate(cfg);
    if (!(z.real() > 0.0))
        throw std::domain_error("airy_two_var_damped: requires Re(z) > 0");
    if (deriv < 0 || deriv > 2)
        throw std::domain_error("airy_two_var_damped: deriv must be 0..2");
    return integrate_damped(x, z, scale.A, deriv, cfg);
}

double airy_theta(double x, double tau, AiryScale scale) {
    validate(scale);
    const double A = scale.A;
    const double a3 = A * A * A;
    return tau / (a3 * a3) * ((2.0 / 3.0) * tau * tau - a3 * x);
}

cplx airy_complex_closed_form(double x, double tau, AiryScale scale) {
    validate(scale);
    if (!std::isfinite(x) || !std::isfinite(tau))
        throw std::domain_error("airy_complex_closed_form: non-finite argument");
    const double A = scale.A;
    const double a3 = A * A * A;
    const double arg = (a3 * x - tau * tau) / (a3 * A);
    // Completing the cube in the defining integral leaves the constant phase
    // x tau/A^3 - (2/3) tau^3/A^6 = -Theta; the factor is exp(-i Theta).
    return std::polar(1.0, -airy_theta(x, tau, scale)) * airy_ai(arg);
}

double airy_ode_residual(double x, double z, AiryScale scale) {
    validate(scale);
    if (z < 0.0) throw std::domain_error("airy_ode_residual: z must be >= 0");
    const double A = scale.A;
    const double h = 0.01;
    const double ym = airy_two_var(x - h, z, scale);
    const double y0 = airy_two_var(x, z, scale);
    const double yp = airy_two_var(x + h, z, scale);
    const double d1 = (yp - ym) / (2.0 * h);
    const double d2 = (yp - 2.0 * y0 + ym) / (h * h);
    return A * A * A * d2 + 2.0 * A * A * z * d1 + x * y0;
}

TwoVarOdeFit fit_two_var_ode(double z, AiryScale scale, double x_lo, double x_hi, int n,
                             const QuadratureConfig& cfg) {
    validate(scale);
    const double A = scale.A, a3 = A * A * A;
    const cplx zz(z, 0.0);
    double suu = 0, suv = 0, svv = 0, sut = 0, svt = 0;
    std::vector<std::array<double, 3>> rows(n);
    for (int i = 0; i < n; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (n - 1.0);
        double y0 = two_var_engine(x, zz, A, 0, cfg).real();
        double y1 = two_var_engine(x, zz, A, 1, cfg).real();
        double y2 = two_var_engine(x, zz, A, 2, cfg).real();
        double t = a3 * y2, u = y1, v = x * y0;
        rows[i] = {t, u, v};
        suu += u * u;
        suv += u * v;
        svv += v * v;
        sut += u * t;
        svt += v * t;
    }
    const double det = suu * svv - suv * suv;
    TwoVarOdeFit fit;
    fit.p = (sut * svv - svt * suv) / det;
    fit.q = (svt * suu - sut * suv) / det;
    double acc_f = 0, acc_c = 0;
    for (auto& [t, u, v] : rows) {
        double rf = t - fit.p * u - fit.q * v;
        double rc = t + 2.0 * A * A * z * u + v; // textbook candidate
        acc_f += rf * rf;
        acc_c += rc * rc;
    }
    fit.rms_fitted = std::sqrt(acc_f / n);
    fit.rms_candidate = std::sqrt(acc_c / n);
    return fit;
}

} // namespace airyevolve::special_fn
