#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace airyevolve::fft {

using cplx = std::complex<double>;

/// Forward/backward 1-D transforms of a fixed size with reusable plans.
/// Plan creation/destruction is serialized internally (FFTW requirement);
/// execution on caller buffers is safe for concurrent instances.
class Fft1D {
  public:
    explicit Fft1D(std::size_t n);
    ~Fft1D();
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    std::size_t size() const { return n_; }
    void forward(cplx* data) const;  // unnormalized
    void inverse(cplx* data) const;  // scaled by 1/n

  private:
    std::size_t n_;
    void* fwd_;
    void* bwd_;
};

/// Angular wavenumbers in FFT bin order: k[m] = 2*pi*m~/(n*dx), with
/// m~ = m for m < n/2 and m - n beyond (standard fftfreq layout).
std::vector<double> wavenumbers(std::size_t n, double dx);

} // namespace airyevolve::fft
