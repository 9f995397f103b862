#include "airyevolve/evolution.hpp"

#include "airyevolve/oracle.hpp"
#include "airyevolve/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

namespace ev = airyevolve::evolution;
namespace tr = airyevolve::transforms;
namespace sf = airyevolve::special_fn;
using namespace airyevolve;

namespace {

GridFunction gaussian_grid(double x_min = -24.0, double x_max = 24.0,
                           std::size_t n = 2401) {
    return sample(x_min, x_max, n, [](double x) { return std::exp(-x * x); });
}

// Eq.-style closed form for Gaussian initial data under the linear-term heat
// flow: e^{Phi} (1+4t)^{-1/2} exp(-(x + beta t^2)^2/(1+4t))
GridFunction heat_gaussian_ref(const GridFunction& like, double beta, double t) {
    GridFunction ref = like;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        double x = ref.x(i);
        double s = x + beta * t * t;
        ref.values[i] = std::exp(ev::phase_phi(x, t, beta)) *
                        std::exp(-s * s / (1.0 + 4.0 * t)) / std::sqrt(1.0 + 4.0 * t);
    }
    return ref;
}

} // namespace

TEST_CASE("phase_phi") {
    CHECK(ev::phase_phi(3.7, 0.0, 1.2) == 0.0);
    CHECK(ev::phase_phi(3.7, 0.9, 0.0) == 0.0);
    CHECK(ev::phase_phi(1.0, 1.0, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("parameter bundles and phase factors") {
    ev::LinearPotentialParams p;
    p.beta = 0.5;
    p.b = 1.0;
    p.A = 1.0;
    ev::validate(p);
    auto f0 = gaussian_grid();
    CHECK(linf_rel_error(ev::solve_heat_linear(f0, p, 0.3),
                         ev::solve_heat_linear(f0, p.beta, 0.3)) == 0.0);
    auto st = ev::solve_schrodinger_airy(p, 0.5, ev::GridSpec{-30.0, 10.0, 1024});
    CHECK(st.max_density > 0.0);
    p.A = -1.0;
    CHECK_THROWS_AS(ev::validate(p), std::domain_error);

    auto pf = ev::make_phase_factors(sf::AiryScale{1.3});
    for (double x : {-2.0, 0.0, 3.0}) {
        CHECK(pf.phi(x, 0.0, 0.7) == 0.0);   // Phi(x, 0) = 0
        CHECK(pf.theta(x, 0.0) == 0.0);      // Theta(x, 0) = 0
    }
    CHECK(pf.phi(1.0, 1.0, 1.0) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("physical-units front door") {
    auto r = ev::rescale_physical(2.0, 3.0, 0.5, 4.0);
    CHECK(r.tau == doctest::Approx(0.5 * 4.0 / 4.0));   // hbar t / 2m
    CHECK(r.b == doctest::Approx(2.0 * 3.0 * 2.0 / 0.25)); // 2 F m / hbar^2
    CHECK(ev::field_scale(4.0, 2.0) == doctest::Approx(std::cbrt(16.0)));
    CHECK_THROWS_AS(ev::rescale_physical(-1.0, 0.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("solve_heat_linear matches the Gaussian closed form") {
    auto f0 = gaussian_grid();
    for (double beta : {0.0, 0.5}) {
        for (double t : {0.1, 0.4}) {
            auto F = ev::solve_heat_linear(f0, beta, t);
            auto ref = heat_gaussian_ref(f0, beta, t);
            CHECK(linf_rel_error(F, ref) < 1e-6);
        }
    }
}

TEST_CASE("beta = 0 reduces to the plain Gauss-Weierstrass transform") {
    auto f0 = gaussian_grid();
    auto F = ev::solve_heat_linear(f0, 0.0, 0.3);
    auto gw = tr::gauss_weierstrass(f0, 0.3);
    CHECK(linf_rel_error(F, gw) < 1e-14);
}

TEST_CASE("t <= 0 rejected") {
    auto f0 = gaussian_grid();
    CHECK_THROWS_AS(ev::solve_heat_linear(f0, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(ev::solve_heat_linear(f0, 0.1, -0.5), std::domain_error);
}

TEST_CASE("translation and diffusion commute") {
    auto f0 = gaussian_grid();
    auto a = tr::translate(tr::gauss_weierstrass(f0, 0.35), 0.8);
    auto b = tr::gauss_weierstrass(tr::translate(f0, 0.8), 0.35);
    CHECK(linf_rel_error(a, b) < 1e-8);
}

TEST_CASE("PDE residual of the factorized heat solution") {
    auto f0 = gaussian_grid();
    const double beta = 0.5, t = 0.4, dt = 1e-3;
    auto Fm = ev::solve_heat_linear(f0, beta, t - dt);
    auto F0 = ev::solve_heat_linear(f0, beta, t);
    auto Fp = ev::solve_heat_linear(f0, beta, t + dt);
    auto Fxx = tr::derivative_fd(F0, 2);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < F0.size(); ++i) {
        double x = F0.x(i);
        cplx dt_f = (Fp[i] - Fm[i]) / (2.0 * dt);
        cplx resid = dt_f - Fxx[i] - beta * x * F0[i];
        worst = std::max(worst, std::abs(resid));
    }
    CHECK(worst < 1e-3 * linf_norm(F0));
}

TEST_CASE("solve_schrodinger_linear") {
    SUBCASE("tau = 0 is the identity") {
        auto f0 = gaussian_grid();
        auto psi = ev::solve_schrodinger_linear(f0, 0.7, 0.0);
        CHECK(linf_rel_error(psi, f0) == 0.0);
    }

    SUBCASE("unitarity on the periodic grid") {
        auto f0 = gaussian_grid(-20.0, 20.0, 2048);
        double n0 = l2_norm(f0);
        for (double tau : {0.2, 1.0}) {
            auto psi = ev::solve_schrodinger_linear(f0, 0.6, tau);
            CHECK(std::abs(l2_norm(psi) - n0) / n0 < 1e-6);
        }
    }

    SUBCASE("free Gaussian packet matches the split-step oracle") {
        auto f0 = gaussian_grid(-20.0, 20.0, 2048);
        oracle::OracleConfig cfg;
        cfg.dt = 5e-4;
        auto ss = oracle::split_step_schrodinger(f0, [](double) { return 0.0; }, 0.5, cfg);
        auto an = ev::solve_schrodinger_linear(f0, 0.0, 0.5);
        CHECK(l2_rel_error(an, ss.psi) < 1e-4);
    }

    SUBCASE("sign pinning against brute-force quadrature of the integral form") {
        // psi(x) = e^{-i Phi} (1/(2 sqrt(i pi tau))) int e^{-(x + b tau^2 - xi)^2/(4 i tau)} f0(xi) dxi
        const double b = 0.7, tau = 0.3;
        auto f0 = gaussian_grid(-16.0, 16.0, 1601);
        auto psi = ev::solve_schrodinger_linear(f0, b, tau);
        const cplx i_unit(0.0, 1.0);
        const cplx root = std::sqrt(i_unit * M_PI * tau);
        for (double x : {-1.0, 0.0, 0.8, 2.5}) {
            auto integrand = [&](double xi) {
                double d = x + b * tau * tau - xi;
                return std::exp(i_unit * d * d / (4.0 * tau)) * std::exp(-xi * xi);
            };
            cplx integral = 0.0;
            const int nseg = 160;
            for (int s = 0; s < nseg; ++s) {
                double a0 = -8.0 + 16.0 * s / nseg, b0 = -8.0 + 16.0 * (s + 1) / nseg;
                integral += cplx(
                    airyevolve::quad::integrate(
                        [&](double xi) { return integrand(xi).real(); }, a0, b0, 1e-12),
                    airyevolve::quad::integrate(
                        [&](double xi) { return integrand(xi).imag(); }, a0, b0, 1e-12));
            }
            cplx ref = std::exp(-i_unit * ev::phase_phi(x, tau, b)) * integral / (2.0 * root);
            auto idx = static_cast<std::size_t>(std::llround((x + 16.0) / psi.dx));
            CHECK(std::abs(psi[idx] - ref) < 1e-8);
        }
    }
}

TEST_CASE("Airy packet closed form") {
    const sf::AiryScale sc{1.0};
    const ev::GridSpec gs{-30.0, 10.0, 2048};

    SUBCASE("tau = 0 gives Ai(x/A) with zero total phase") {
        auto st = ev::solve_schrodinger_airy(0.8, 0.0, sc, gs);
        for (std::size_t i = 0; i < st.psi.size(); i += 97) {
            CHECK(st.psi[i].imag() == 0.0);
            CHECK(st.psi[i].real() ==
                  doctest::Approx(sf::airy_ai(st.psi.x(i))).epsilon(1e-13));
        }
        CHECK(st.phi_at_peak == 0.0);
        CHECK(st.theta_at_peak == 0.0);
    }

    SUBCASE("frozen packet at b = 1/A^3: density is tau-independent") {
        auto st0 = ev::solve_schrodinger_airy(1.0, 0.0, sc, gs);
        for (double tau : {0.5, 1.0, 2.0}) {
            auto st = ev::solve_schrodinger_airy(1.0, tau, sc, gs);
            CHECK(std::abs(st.max_density - st0.max_density) / st0.max_density < 1e-12);
            CHECK(std::abs(st.x_peak - st0.x_peak) < st.psi.dx);
        }
    }

    SUBCASE("peak trajectory follows x_peak(0) - (b - A^{-3}) tau^2") {
        for (double b : {0.0, 2.0}) {
            auto st0 = ev::solve_schrodinger_airy(b, 0.0, sc, gs);
            for (double tau : {0.6, 1.2}) {
                auto st = ev::solve_schrodinger_airy(b, tau, sc, gs);
                double predicted = ev::airy_peak_trajectory(st0.x_peak, b, tau, sc);
                CHECK(std::abs(st.x_peak - predicted) < 2.0 * st.psi.dx);
            }
        }
    }

    SUBCASE("closed form agrees with the operator path including phase") {
        // comparison region must sit where the window is flat to ~5e-4
        // (density deviation 2(1-w)), i.e. |x - c| <= 0.39 width
        const double b = 0.5, tau = 0.5;
        const Window w{-8.0, 40.0};
        auto mask = [](double x) { return std::abs(x + 8.0) <= 15.0; };
        auto f0 = sample(-70.0, 20.0, 4608, [](double x) { return sf::airy_ai(x); });
        apodize(f0, w);
        auto op = ev::solve_schrodinger_linear(f0, b, tau);
        auto cf = ev::solve_schrodinger_airy(b, tau, sc, ev::GridSpec{-70.0, 20.0, 4608});

        auto dens = [](const GridFunction& g) {
            GridFunction d = g;
            for (auto& v : d.values) v = std::norm(v);
            return d;
        };
        CHECK(l2_rel_error_where(dens(op), dens(cf.psi), mask) < 1e-3);

        // pointwise phase agreement (variance of the wrapped difference)
        double peak = linf_norm(cf.psi);
        std::vector<double> diffs;
        for (std::size_t i = 0; i < op.size(); ++i) {
            if (!mask(op.x(i))) continue;
            if (std::abs(cf.psi[i]) < 0.05 * peak) continue;
            diffs.push_back(std::arg(op[i] / cf.psi[i]));
        }
        REQUIRE(diffs.size() > 100);
        double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) /
                      static_cast<double>(diffs.size());
        double var = 0.0;
        for (double d : diffs) var += (d - mean) * (d - mean);
        var /= static_cast<double>(diffs.size());
        CHECK(var < 1e-3);
    }
}

TEST_CASE("Airy-transform diagonalization of the linear-potential equation") {
    // with alpha^3 = -1/b the transformed equation reduces to
    // i d_tau Phi = b eta Phi, so Phi(eta, tau) = e^{-i b eta tau} Phi(eta, 0)
    const double b = 1.0, tau = 0.4, alpha = -1.0;
    auto f0 = gaussian_grid(-40.0, 40.0, 4001);
    auto psi = ev::solve_schrodinger_linear(f0, b, tau);
    auto lhs = tr::airy_transform(psi, alpha);
    auto t0 = tr::airy_transform(f0, alpha);
    GridFunction rhs = t0;
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs.values[i] *= std::polar(1.0, -b * rhs.x(i) * tau);
    CHECK(linf_rel_error_where(lhs, rhs, [](double x) { return std::abs(x) <= 10.0; }) <
          1e-3);
}

TEST_CASE("centroid trajectory") {
    const double B = 1.3, m = 0.9;
    std::vector<double> t_grid(201);
    for (std::size_t i = 0; i < t_grid.size(); ++i) t_grid[i] = 0.01 * static_cast<double>(i);

    SUBCASE("free case is exactly the self-acceleration parabola") {
        auto xc = ev::centroid_trajectory([](double) { return 0.0; }, B, m, t_grid);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            double expect = B * B * B * t_grid[i] * t_grid[i] / (4.0 * m * m);
            CHECK(xc[i] == doctest::Approx(expect).epsilon(1e-14));
        }
    }

    SUBCASE("constant drive adds phi0 t^2 / (2m)") {
        const double phi0 = 0.7;
        auto xc = ev::centroid_trajectory([&](double) { return phi0; }, B, m, t_grid);
        for (std::size_t i = 0; i < t_grid.size(); i += 20) {
            double t = t_grid[i];
            double expect =
                B * B * B * t * t / (4.0 * m * m) + phi0 * t * t / (2.0 * m);
            CHECK(xc[i] == doctest::Approx(expect).epsilon(1e-12));
        }
    }

    SUBCASE("second difference reproduces the acceleration law for phi = sin") {
        std::vector<double> tg(201);
        for (std::size_t i = 0; i < tg.size(); ++i) tg[i] = 0.01 * static_cast<double>(i);
        auto xc = ev::centroid_trajectory([](double t) { return std::sin(t); }, 1.0, 1.0, tg);
        const double h = 0.01;
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < tg.size(); ++i) {
            double acc = (xc[i + 1] - 2.0 * xc[i] + xc[i - 1]) / (h * h);
            double expect = 0.5 + std::sin(tg[i]);
            worst = std::max(worst, std::abs(acc - expect) / std::abs(expect));
        }
        CHECK(worst < 1e-4);
    }

    SUBCASE("non-monotone grid rejected") {
        CHECK_THROWS_AS(
            ev::centroid_trajectory([](double) { return 0.0; }, 1.0, 1.0, {0.0, 0.5, 0.4}),
            std::domain_error);
    }
}
