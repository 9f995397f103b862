#include "airyevolve/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace airyevolve::fft {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft1D::Fft1D(std::size_t n) : n_(n) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    // UNALIGNED lets the plans execute on any caller buffer.
    std::vector<cplx> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft1D::~Fft1D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void Fft1D::forward(cplx* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(fwd_), p, p);
}

void Fft1D::inverse(cplx* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(bwd_), p, p);
    double s = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) data[i] *= s;
}

std::vector<double> wavenumbers(std::size_t n, double dx) {
    std::vector<double> k(n);
    const double base = 2.0 * 3.14159265358979323846 / (static_cast<double>(n) * dx);
    for (std::size_t m = 0; m < n; ++m) {
        auto mm = static_cast<double>(m);
        if (m >= (n + 1) / 2) mm -= static_cast<double>(n);
        k[m] = base * mm;
    }
    return k;
}

} // namespace airyevolve::fft
