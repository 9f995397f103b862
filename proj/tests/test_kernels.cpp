#include "airyevolve/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using airyevolve::kernels::Backend;
using cplx = std::complex<double>;
namespace kn = airyevolve::kernels;

namespace {

struct Data {
    std::vector<double> w;
    std::vector<cplx> f, g;
};

Data make_test_data(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Data d;
    d.w.resize(n);
    d.f.resize(n);
    d.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.w[i] = u(rng);
        d.f[i] = {u(rng), u(rng)};
        d.g[i] = {u(rng), u(rng)};
    }
    return d;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 31, 64, 257, 1001};

} // namespace

TEST_CASE("scalar kernels match naive long-double references") {
    for (std::size_t n : kSizes) {
        auto d = make_test_data(n, 42 + static_cast<unsigned>(n));
        long double dot_ref = 0.0L, sum2_ref = 0.0L;
        long double re_ref = 0.0L, im_ref = 0.0L;
        double max2_ref = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot_ref += static_cast<long double>(d.w[i]) * d.f[i].real();
            re_ref += static_cast<long double>(d.w[i]) * d.f[i].real();
            im_ref += static_cast<long double>(d.w[i]) * d.f[i].imag();
            sum2_ref += static_cast<long double>(std::norm(d.f[i]));
            max2_ref = std::max(max2_ref, std::norm(d.f[i]));
        }
        std::vector<double> fr(n);
        for (std::size_t i = 0; i < n; ++i) fr[i] = d.f[i].real();

        CHECK(kn::scalar::dot(d.w.data(), fr.data(), n) ==
              doctest::Approx(static_cast<double>(dot_ref)).epsilon(1e-12));
        cplx dc = kn::scalar::dot_real_complex(d.w.data(), d.f.data(), n);
        CHECK(dc.real() == doctest::Approx(static_cast<double>(re_ref)).epsilon(1e-12));
        CHECK(dc.imag() == doctest::Approx(static_cast<double>(im_ref)).epsilon(1e-12));
        CHECK(kn::scalar::sum_abs2(d.f.data(), n) ==
              doctest::Approx(static_cast<double>(sum2_ref)).epsilon(1e-12));
        CHECK(kn::scalar::max_abs2(d.f.data(), n) == doctest::Approx(max2_ref));

        std::vector<cplx> prod(n);
        kn::scalar::complex_mul(prod.data(), d.f.data(), d.g.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(prod[i] - d.f[i] * d.g[i]) < 1e-14);
    }
}

#if defined(AIRYEVOLVE_HAVE_AVX2_TU)
TEST_CASE("avx2 variants agree with the scalar reference") {
    if (!kn::supported(Backend::avx2)) {
        MESSAGE("avx2 not available on this machine; skipping");
        return;
    }
    for (std::size_t n : kSizes) {
        // offset slices exercise unaligned loads
        for (std::size_t off : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
            auto d = make_test_data(n + off, 7 + static_cast<unsigned>(n + off));
            const double* w = d.w.data() + off;
            const cplx* f = d.f.data() + off;
            const cplx* g = d.g.data() + off;
            std::vector<double> fr(n);
            for (std::size_t i = 0; i < n; ++i) fr[i] = f[i].real();

            CHECK(kn::avx2::dot(w, fr.data(), n) ==
                  doctest::Approx(kn::scalar::dot(w, fr.data(), n)).epsilon(1e-12));

            cplx a = kn::avx2::dot_real_complex(w, f, n);
            cplx s = kn::scalar::dot_real_complex(w, f, n);
            CHECK(std::abs(a - s) <= 1e-12 * (1.0 + std::abs(s)));

            CHECK(kn::avx2::sum_abs2(f, n) ==
                  doctest::Approx(kn::scalar::sum_abs2(f, n)).epsilon(1e-12));
            CHECK(kn::avx2::max_abs2(f, n) == doctest::Approx(kn::scalar::max_abs2(f, n)));
            CHECK(kn::avx2::max_abs_diff(f, g, n) ==
                  doctest::Approx(kn::scalar::max_abs_diff(f, g, n)).epsilon(1e-12));

            std::vector<cplx> pa(n), ps(n);
            kn::avx2::complex_mul(pa.data(), f, g, n);
            kn::scalar::complex_mul(ps.data(), f, g, n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(pa[i] - ps[i]) < 1e-14);
        }
    }
}
#endif

TEST_CASE("runtime backend selection") {
    Backend before = kn::active();
    kn::select(Backend::scalar);
    CHECK(kn::active() == Backend::scalar);
    double v[] = {1.0, 2.0, 3.0};
    CHECK(kn::dot(v, v, 3) == doctest::Approx(14.0));
    if (kn::supported(Backend::avx2)) {
        kn::select(Backend::avx2);
        CHECK(kn::active() == Backend::avx2);
        CHECK(kn::dot(v, v, 3) == doctest::Approx(14.0));
    } else {
        CHECK_THROWS_AS(kn::select(Backend::avx2), std::runtime_error);
    }
    kn::select(before);
}
