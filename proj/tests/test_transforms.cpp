#include "airyevolve/transforms.hpp"

#include "airyevolve/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

namespace tr = airyevolve::transforms;
namespace ap = airyevolve::poly;
using namespace airyevolve;

namespace {

GridFunction gaussian_grid(double x_min = -20.0, double x_max = 20.0,
                           std::size_t n = 2001) {
    return sample(x_min, x_max, n, [](double x) { return std::exp(-x * x); });
}

} // namespace

TEST_CASE("Gleisher rule at beta = 0: GW of a Gaussian") {
    for (double t : {0.1, 0.25, 1.0}) {
        auto f = gaussian_grid(-24.0, 24.0, 2401);
        auto g = tr::gauss_weierstrass(f, t);
        auto ref = sample(-24.0, 24.0, 2401, [&](double x) {
            return std::exp(-x * x / (1.0 + 4.0 * t)) / std::sqrt(1.0 + 4.0 * t);
        });
        CHECK(linf_rel_error(g, ref) < 1e-8);
    }
}

TEST_CASE("polynomial route: GW of x^n is the heat polynomial H_n^{(2)}") {
    for (unsigned n = 0; n <= 12; ++n) {
        auto h = tr::gauss_weierstrass(ap::monomial(n), ap::Rational(2, 5));
        CHECK(h == ap::hermite_higher(n, 2, ap::Rational(2, 5)));
    }
}

TEST_CASE("b -> 0+ limit returns the input") {
    auto f = gaussian_grid();
    // GW(f, b) - f ~ b f'', so at b = 1e-9 the deviation itself is O(1e-9)
    auto g = tr::gauss_weierstrass(f, 1e-9);
    CHECK(linf_rel_error(g, f) < 1e-8);
    g = tr::gauss_weierstrass(f, 1e-12);
    CHECK(linf_rel_error(g, f) < 1e-10);
    auto id = tr::gauss_weierstrass(f, 0.0); // identity shortcut
    CHECK(kernels::max_abs_diff(id.values.data(), f.values.data(), f.size()) == 0.0);
}

TEST_CASE("semigroup: GW(t1) then GW(t2) equals GW(t1 + t2)") {
    auto f = gaussian_grid(-26.0, 26.0, 2601);
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(0.05, 0.6);
    for (int trial = 0; trial < 5; ++trial) {
        double t1 = u(rng), t2 = u(rng);
        CAPTURE(t1);
        CAPTURE(t2);
        auto two = tr::gauss_weierstrass(tr::gauss_weierstrass(f, t1), t2);
        auto one = tr::gauss_weierstrass(f, t1 + t2);
        CHECK(l2_rel_error(two, one) < 1e-7);
    }
}

TEST_CASE("translation inverts: shift by a then by -a returns the input") {
    auto f = gaussian_grid();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        double a = u(rng);
        CAPTURE(a);
        auto g = tr::translate(tr::translate(f, a), -a);
        CHECK(linf_rel_error(g, f) < 1e-12);
    }
}

TEST_CASE("non-decaying input raises a convergence error on the quadrature path") {
    auto bad = sample(-10.0, 10.0, 1001, [](double x) { return 1.0 + 0.0 * x; });
    CHECK_THROWS_AS(tr::gauss_weierstrass(bad, 0.5), std::runtime_error);
    CHECK_THROWS_AS(tr::airy_transform(bad, 1.0), std::runtime_error);
    CHECK_THROWS_AS(tr::cubic_evolution(bad, 0.2), std::runtime_error);
}

TEST_CASE("negative real part rejected") {
    auto f = gaussian_grid();
    CHECK_THROWS_AS(tr::gauss_weierstrass(f, -0.1), std::domain_error);
}

TEST_CASE("spectral translate matches the closed-form shifted Gaussian") {
    auto f = gaussian_grid();
    auto s = tr::translate(f, 0.35);
    auto ref = sample(-20.0, 20.0, 2001,
                      [](double x) { return std::exp(-(x + 0.35) * (x + 0.35)); });
    CHECK(linf_rel_error(s, ref) < 1e-10);
}

TEST_CASE("Airy transform of an exponential and the exponential-cube moment") {
    // The Ai-T of e^{ux} converges only when u*alpha < 0 (the kernel's
    // decaying side must face the growing exponential). For u = 1,
    // alpha = -1 the substitution s = (eta - x)/alpha gives
    //   Phi_{-1}(eta) = -e^{eta} \int e^{s} Ai(s) ds = -exp(eta + 1/3)
    // (the 1/alpha normalization carries net mass -1 for alpha < 0).
    const Window w{0.0, 32.0};
    auto f = sample(-36.0, 52.0, 8801, [&](double x) { return std::exp(x) * w(x); });
    auto phi = tr::airy_transform(f, -1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        double eta = phi.x(i);
        if (std::abs(eta) > 4.0) continue;
        double ref = -std::exp(eta + 1.0 / 3.0);
        worst = std::max(worst, std::abs(phi[i].real() - ref) / std::abs(ref));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("exponential-cube identity: int e^sigma Ai(sigma) dsigma = e^{1/3}") {
    double v = tr::exp_airy_moment(1.0);
    CHECK(std::abs(v - 1.3956124250860895286) < 1e-5 * 1.3956124250860895286);
}

TEST_CASE("Ai-T derivative and position identities") {
    const Window w{0.0, 9.0};
    auto f = gaussian_grid(-15.0, 15.0, 3001);
    for (double alpha : {1.0, -0.8}) {
        CHECK(tr::ait_derivative_identity_residual(f, alpha, w) < 1e-5);
        CHECK(tr::ait_position_identity_residual(f, alpha, w) < 1e-4);
    }
}

TEST_CASE("GW-T derivative and position identities") {
    const Window w{0.0, 9.0};
    auto f = gaussian_grid(-15.0, 15.0, 3001);
    CHECK(tr::gw_derivative_identity_residual(f, 0.3, w) < 1e-5);
    CHECK(tr::gw_position_identity_residual(f, 0.3, w) < 1e-5);
}

TEST_CASE("cubic evolution") {
    SUBCASE("constants are invariant (polynomial route)") {
        auto g = tr::cubic_evolution(ap::monomial(0), ap::Rational(5));
        CHECK(g == ap::monomial(0));
    }
    SUBCASE("x^n becomes H_n^{(3)} exactly") {
        for (unsigned n = 0; n <= 12; ++n) {
            auto h = tr::cubic_evolution(ap::monomial(n), ap::Rational(1, 5));
            CHECK(h == ap::hermite_higher(n, 3, ap::Rational(1, 5)));
        }
    }
    SUBCASE("exp(t d^3) then exp(-t d^3) is the identity on polynomials") {
        const ap::Rational t(3, 7);
        for (unsigned n = 0; n <= 12; ++n) {
            auto roundtrip = tr::cubic_evolution(tr::cubic_evolution(ap::monomial(n), t),
                                                 ap::Rational(-t));
            CHECK(roundtrip == ap::monomial(n));
        }
    }
    SUBCASE("grid route vs polynomial route on x^2, t = +-0.2") {
        const Window w{0.0, 20.0};
        auto g = sample(-42.0, 42.0, 4201, [&](double x) { return x * x * w(x); });
        for (double t : {0.2, -0.2}) {
            CAPTURE(t);
            auto evolved = tr::cubic_evolution(g, t);
            double worst = 0.0;
            for (std::size_t i = 0; i < evolved.size(); ++i) {
                double x = evolved.x(i);
                if (std::abs(x) > 2.0) continue;
                worst = std::max(worst, std::abs(evolved[i].real() - x * x));
            }
            CHECK(worst / 4.0 < 1e-4); // relative to max |x^2| on [-2, 2]
        }
    }
    SUBCASE("t = 0 identity") {
        auto g = gaussian_grid();
        auto same = tr::cubic_evolution(g, 0.0);
        CHECK(kernels::max_abs_diff(same.values.data(), g.values.data(), g.size()) == 0.0);
    }
}

TEST_CASE("Weyl conjugation on monomials") {
    CHECK(tr::weyl_conjugation_check(0, ap::Rational(1)) == 0.0);
    CHECK(tr::weyl_conjugation_check(1, ap::Rational(1)) == 0.0);
    CHECK(tr::weyl_conjugation_check(3, ap::Rational(1)) == 0.0);
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(tr::weyl_conjugation_check(n, ap::Rational(3, 2)) == 0.0);
}

TEST_CASE("commutator preservation: [X_eta, d_eta] f = -f on polynomials") {
    const ap::Rational a3 = ap::Rational(27, 8); // alpha = 3/2
    for (unsigned n = 0; n <= 10; ++n) {
        ap::PolyDense f = ap::monomial(n, ap::Rational(2, 3));
        auto X = [&](const ap::PolyDense& q) {
            return ap::sub(ap::mul_x(q), ap::scale(ap::derivative(q, 2), a3));
        };
        ap::PolyDense comm = ap::sub(X(ap::derivative(f)), ap::derivative(X(f)));
        CHECK(comm == ap::scale(f, ap::Rational(-1)));
    }
}

TEST_CASE("chain rule identity on a Gaussian") {
    auto g = gaussian_grid(-40.0, 40.0, 4001);
    CHECK(tr::chain_rule_residual(g, 0.1, 0.5, 8.0) < 1e-6);
}

TEST_CASE("chain rule corollary on the constant input") {
    CHECK(tr::chain_rule_const_residual(0.1, 0.5) < 1e-8);
}

TEST_CASE("concurrent invocation is safe (per-invocation FFT plans)") {
    auto f = gaussian_grid(-20.0, 20.0, 1024);
    auto reference = tr::gauss_weierstrass(f, cplx(0.0, 0.3));
    std::vector<std::thread> pool;
    std::vector<double> diffs(8, -1.0);
    for (int k = 0; k < 8; ++k) {
        pool.emplace_back([&, k] {
            auto g = tr::gauss_weierstrass(f, cplx(0.0, 0.3));
            auto h = tr::translate(tr::airy_transform(f, 1.0), 0.25);
            (void)h;
            diffs[static_cast<std::size_t>(k)] = airyevolve::kernels::max_abs_diff(
                g.values.data(), reference.values.data(), g.size());
        });
    }
    for (auto& t : pool) t.join();
    for (double d : diffs) CHECK(d == 0.0);
}
