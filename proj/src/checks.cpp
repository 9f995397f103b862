#include "airyevolve/checks.hpp"

#include "airyevolve/evolution.hpp"
#include "airyevolve/oracle.hpp"
#include "airyevolve/wei_norman.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace airyevolve::checks {

namespace {

namespace ev = airyevolve::evolution;
namespace tr = airyevolve::transforms;
namespace sf = airyevolve::special_fn;
namespace wn = airyevolve::weinorman;
namespace ap = airyevolve::poly;
namespace orc = airyevolve::oracle;

void push(CheckResult& r, const std::string& name, double value, double tol) {
    bool ok = value <= tol;
    r.subchecks.push_back({name, value, tol, ok});
    r.pass = r.pass && ok;
}

// exact checks: value is 0 (holds) or 1 (failed), tolerance 0
void push_exact(CheckResult& r, const std::string& name, bool ok) {
    r.subchecks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
    r.pass = r.pass && ok;
}

GridFunction gaussian(double x_min, double x_max, std::size_t n) {
    return sample(x_min, x_max, n, [](double x) { return std::exp(-x * x); });
}

GridFunction heat_gaussian_closed_form(const GridFunction& like, double beta, double t) {
    GridFunction ref = like;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        double x = ref.x(i);
        double s = x + beta * t * t;
        ref.values[i] = std::exp(ev::phase_phi(x, t, beta)) *
                        std::exp(-s * s / (1.0 + 4.0 * t)) / std::sqrt(1.0 + 4.0 * t);
    }
    return ref;
}

// --- criterion 1 -------------------------------------------------------
CheckResult check_gleisher() {
    CheckResult r{"gleisher",
                  "heat solution with a linear term vs the Gaussian closed form", {}};
    auto f0 = gaussian(-24.0, 24.0, 2401);
    for (double beta : {0.0, 0.5}) {
        for (double t : {0.1, 0.5, 1.0}) {
            auto F = ev::solve_heat_linear(f0, beta, t);
            auto ref = heat_gaussian_closed_form(f0, beta, t);
            char name[64];
            std::snprintf(name, sizeof(name), "linf-rel beta=%.1f t=%.1f", beta, t);
            push(r, name, linf_rel_error(F, ref), 1e-6);
        }
    }
    return r;
}

// --- criterion 2 -------------------------------------------------------
CheckResult check_heat_oracle() {
    CheckResult r{"heat-oracle",
                  "factorized heat solution vs Crank-Nicolson at n_grid = 2048", {}};
    auto f0 = gaussian(-20.0, 20.0, 2048);
    const double beta = 0.5, t = 0.4;
    auto an = ev::solve_heat_linear(f0, beta, t);
    orc::OracleConfig cfg;
    cfg.dt = 1e-3;
    auto cn = orc::crank_nicolson_heat(
        f0, [beta](double) { return beta; }, [](double) { return 1.0; }, t, cfg);
    push(r, "l2-rel beta=0.5 t=0.4", l2_rel_error(an, cn), 1e-3);
    return r;
}

// --- criterion 3 -------------------------------------------------------
CheckResult check_airy_packet() {
    CheckResult r{"airy-packet",
                  "non-spreading Airy packet: closed form and split-step oracle", {}};
    const sf::AiryScale sc{1.0};
    const ev::GridSpec gs{-30.0, 10.0, 2048};

    // closed form, frozen field b = 1/A^3: density constant, peak pinned
    {
        auto st0 = ev::solve_schrodinger_airy(1.0, 0.0, sc, gs);
        double worst_dens = 0.0, worst_disp = 0.0;
        for (double tau = 0.25; tau <= 2.0 + 1e-12; tau += 0.25) {
            auto st = ev::solve_schrodinger_airy(1.0, tau, sc, gs);
            worst_dens = std::max(worst_dens,
                                  std::abs(st.max_density - st0.max_density) /
                                      st0.max_density);
            worst_disp = std::max(worst_disp, std::abs(st.x_peak - st0.x_peak));
        }
        push(r, "closed-form max-density variation (b=1)", worst_dens, 0.01);
        push(r, "closed-form peak displacement [cells] (b=1)",
             worst_disp / st0.psi.dx, 1.0);
    }

    // closed form, accelerating field: peak follows the quadratic law
    {
        const double b = 2.0;
        auto st0 = ev::solve_schrodinger_airy(b, 0.0, sc, gs);
        double worst = 0.0;
        for (double tau = 0.4; tau <= 2.0 + 1e-12; tau += 0.4) {
            auto st = ev::solve_schrodinger_airy(b, tau, sc, gs);
            double law = ev::airy_peak_trajectory(st0.x_peak, b, tau, sc);
            worst = std::max(worst, std::abs(st.x_peak - law) / st.psi.dx);
        }
        push(r, "closed-form trajectory deviation [cells] (b=2)", worst, 2.0);
    }

    // split-step oracle on the apodized packet
    auto f0 = sample(-64.0, 24.0, 4608, [](double x) { return sf::airy_ai(x); });
    orc::OracleConfig cfg;
    cfg.dt = 1e-3;
    cfg.apod_center = -12.0;
    cfg.apod_width = 32.0;
    cfg.diagnostics_stride = 50;
    {
        auto run = orc::split_step_schrodinger(f0, [](double) { return 1.0; }, 2.0, cfg);
        double rho0 = run.peak_density.front();
        double worst_decay = 0.0, worst_disp = 0.0;
        for (std::size_t k = 0; k < run.times.size(); ++k) {
            worst_decay = std::max(worst_decay, (rho0 - run.peak_density[k]) / rho0);
            worst_disp = std::max(worst_disp,
                                  std::abs(run.peak_x[k] - run.peak_x.front()));
        }
        push(r, "split-step peak decay (frozen b=1)", worst_decay, 0.03);
        push(r, "split-step peak displacement [cells] (frozen b=1)",
             worst_disp / run.psi.dx, 1.0);
    }
    {
        auto run = orc::split_step_schrodinger(f0, [](double) { return 0.0; }, 2.0, cfg);
        double worst = 0.0;
        for (std::size_t k = 0; k < run.times.size(); ++k) {
            double law = run.peak_x.front() + run.times[k] * run.times[k];
            worst = std::max(worst, std::abs(run.peak_x[k] - law) / run.psi.dx);
        }
        push(r, "split-step free trajectory deviation [cells] (b=0)", worst, 2.0);
    }
    return r;
}

// --- criterion 4 -------------------------------------------------------
CheckResult check_poly_identities() {
    CheckResult r{"poly-identities",
                  "exact transform representations and recurrences of the "
                  "quasi-monomial families", {}};
    for (const ap::Rational& t : {ap::Rational(1), ap::Rational(2, 5)}) {
        bool gw_ok = true, cubic_ok = true;
        for (unsigned n = 0; n <= 12; ++n) {
            gw_ok = gw_ok && (tr::gauss_weierstrass(ap::monomial(n), t) ==
                              ap::hermite_higher(n, 2, t));
            cubic_ok = cubic_ok && (tr::cubic_evolution(ap::monomial(n), t) ==
                                    ap::hermite_higher(n, 3, t));
        }
        push_exact(r, "gw of x^n equals heat polynomials (n<=12, t=" + t.str() + ")",
                   gw_ok);
        push_exact(r,
                   "cubic evolution of x^n equals Airy polynomials (n<=12, t=" +
                       t.str() + ")",
                   cubic_ok);
    }
    for (unsigned p : {2u, 3u, 4u}) {
        bool ok = true;
        for (const ap::Rational& t : {ap::Rational(1), ap::Rational(1, 3)})
            ok = ok && ap::verify_recurrences(12, p, t).all_ok;
        char name[48];
        std::snprintf(name, sizeof(name), "recurrences exact p=%u n<=12", p);
        push_exact(r, name, ok);
    }
    return r;
}

// --- criterion 5 -------------------------------------------------------
CheckResult check_transform_identities() {
    CheckResult r{"transform-identities",
                  "Airy-transform and Gauss-Weierstrass operator identities", {}};
    const Window w{0.0, 9.0};
    auto f = gaussian(-15.0, 15.0, 3001);
    for (double alpha : {1.0, -0.8}) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "ait-derivative identity alpha=%.1f", alpha);
        push(r, buf, tr::ait_derivative_identity_residual(f, alpha, w), 1e-4);
        std::snprintf(buf, sizeof(buf), "ait-position identity alpha=%.1f", alpha);
        push(r, buf, tr::ait_position_identity_residual(f, alpha, w), 1e-4);
    }
    push(r, "gw-derivative identity t=0.3",
         tr::gw_derivative_identity_residual(f, 0.3, w), 1e-4);
    push(r, "gw-position identity t=0.3",
         tr::gw_position_identity_residual(f, 0.3, w), 1e-4);
    const double moment = tr::exp_airy_moment(1.0);
    const double target = std::exp(1.0 / 3.0);
    push(r, "exponential-cube moment u=1", std::abs(moment - target) / target, 1e-5);
    return r;
}

// --- criterion 6 -------------------------------------------------------
CheckResult check_wei_norman() {
    CheckResult r{"wei-norman",
                  "ordering-function path equivalence and factorized evolution", {}};
    struct Preset {
        const char* name;
        wn::CoeffFunctions cf;
    };
    const Preset presets[] = {
        {"constant", {wn::coeff_preset("constant", 1.0), wn::coeff_preset("constant", 0.5)}},
        {"diffusion", {wn::coeff_preset("constant", 1.0), wn::coeff_preset("constant", 0.0)}},
        {"linear-alpha", {wn::coeff_preset("linear", 1.0), wn::coeff_preset("constant", 1.0)}},
        {"sin-beta", {wn::coeff_preset("constant", 1.0), wn::coeff_preset("sin", 1.0)}},
        {"step-beta",
         {wn::coeff_preset("constant", 0.8), wn::coeff_preset("step", 1.0, 0.5), {0.5}}},
    };
    for (const auto& p : presets) {
        double worst = 0.0;
        for (double t : {0.4, 1.0}) {
            auto wo = wn::wei_norman_coeffs(p.cf, t, wn::Method::ode);
            auto wq = wn::wei_norman_coeffs(p.cf, t, wn::Method::nested_quadrature);
            auto rel = [](double a, double b) {
                return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
            };
            worst = std::max({worst, rel(wo.a, wq.a), rel(wo.b, wq.b), rel(wo.c, wq.c),
                              rel(wo.d, wq.d)});
        }
        push(r, std::string("ode vs nested-quadrature: ") + p.name, worst, 1e-6);
    }

    // constant-coefficient reduction reproduces the linear-term phase
    {
        const double beta0 = 0.7, t = 0.9;
        auto w = wn::wei_norman_coeffs(
            {wn::coeff_preset("constant", 1.0), wn::coeff_preset("constant", beta0)}, t,
            wn::Method::nested_quadrature);
        double worst = 0.0;
        for (double x : {-3.0, 1.0, 7.0}) {
            double phi_tilde = w.a + w.d * (w.c * w.d + w.b + x);
            double phi = ev::phase_phi(x, t, beta0);
            worst = std::max(worst, std::abs(phi_tilde - phi) / (1.0 + std::abs(phi)));
        }
        push(r, "constant-coefficient phase reduction", worst, 1e-10);
    }

    // time-dependent potential vs Crank-Nicolson
    {
        auto f0 = gaussian(-24.0, 24.0, 2401);
        wn::CoeffFunctions cf{wn::coeff_preset("constant", 1.0),
                              wn::coeff_preset("sin", 1.0)};
        const double t = 0.6;
        auto fe = wn::factorized_evolution(cf, f0, t);
        orc::OracleConfig cfg;
        cfg.dt = 5e-4;
        auto cn = orc::crank_nicolson_heat(f0, cf.beta, cf.alpha, t, cfg);
        push(r, "sin-beta run vs Crank-Nicolson (l2-rel)", l2_rel_error(fe, cn), 1e-3);
    }
    return r;
}

// --- criterion 7 -------------------------------------------------------
CheckResult check_centroid() {
    CheckResult r{"centroid",
                  "second difference of the centroid reproduces the acceleration law", {}};
    std::vector<double> t_grid(201);
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        t_grid[i] = 0.01 * static_cast<double>(i);
    const double h = 0.01;

    struct Drive {
        const char* name;
        std::function<double(double)> phi;
    };
    const Drive drives[] = {
        {"phi=0", [](double) { return 0.0; }},
        {"phi=const", [](double) { return 0.7; }},
        {"phi=sin", [](double t) { return std::sin(t); }},
    };
    const double B = 1.0, m = 1.0;
    for (const auto& d : drives) {
        auto xc = ev::centroid_trajectory(d.phi, B, m, t_grid);
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < t_grid.size(); ++i) {
            double acc = (xc[i + 1] - 2.0 * xc[i] + xc[i - 1]) / (h * h);
            double expect = B * B * B / (2.0 * m * m) + d.phi(t_grid[i]) / m;
            worst = std::max(worst, std::abs(acc - expect) / std::abs(expect));
        }
        push(r, std::string("acceleration law ") + d.name, worst, 1e-4);
    }
    return r;
}

// --- criterion 8 -------------------------------------------------------
CheckResult check_weyl() {
    CheckResult r{"weyl", "conjugation identity for the transformed position operator", {}};
    for (const ap::Rational& alpha : {ap::Rational(1), ap::Rational(3, 2)}) {
        double worst = 0.0;
        for (unsigned n = 0; n <= 12; ++n)
            worst = std::max(worst, tr::weyl_conjugation_check(n, alpha));
        push_exact(r, "exact coefficient equality n<=12, alpha=" +
                          alpha.str(),
                   worst == 0.0);
    }
    return r;
}

// --- criterion 9 -------------------------------------------------------
CheckResult check_chain_rule() {
    CheckResult r{"chain-rule",
                  "operator chain rule for exp(p d^2) e^{qx} on a Gaussian", {}};
    auto g = gaussian(-40.0, 40.0, 4001);
    push(r, "chain rule on a Gaussian (linf-rel)",
         tr::chain_rule_residual(g, 0.1, 0.5, 8.0), 1e-6);
    push(r, "constant-input corollary", tr::chain_rule_const_residual(0.1, 0.5), 1e-8);
    return r;
}

const std::map<std::string, CheckResult (*)()>& registry() {
    static const std::map<std::string, CheckResult (*)()> reg = {
        {"gleisher", check_gleisher},
        {"heat-oracle", check_heat_oracle},
        {"airy-packet", check_airy_packet},
        {"poly-identities", check_poly_identities},
        {"transform-identities", check_transform_identities},
        {"wei-norman", check_wei_norman},
        {"centroid", check_centroid},
        {"weyl", check_weyl},
        {"chain-rule", check_chain_rule},
    };
    return reg;
}

} // namespace

double CheckResult::worst_ratio() const {
    double worst = 0.0;
    for (const auto& s : subchecks) {
        if (s.tolerance > 0.0)
            worst = std::max(worst, s.value / s.tolerance);
        else
            worst = std::max(worst, s.pass ? 0.0 : 2.0);
    }
    return worst;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

bool is_check_name(const std::string& name) { return registry().count(name) > 0; }

CheckResult run_check(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::domain_error("run_check: unknown check '" + name + "'");
    auto start = std::chrono::steady_clock::now();
    CheckResult r = it->second();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

std::vector<CheckResult> run_all_checks() {
    std::vector<CheckResult> all;
    for (const auto& name : check_names()) all.push_back(run_check(name));
    return all;
}

} // namespace airyevolve::checks
