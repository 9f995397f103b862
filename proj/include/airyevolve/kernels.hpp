#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops used by the quadrature/correlation paths and the
// grid metrics. Scalar reference implementations always exist; AVX2 variants
// are compiled in a separate TU and selected at runtime (cpuid, overridable
// via AIRY_EVOLVE_SIMD={auto,scalar,avx2} or select()).

namespace airyevolve::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

const char* name(Backend b);
bool supported(Backend b);
Backend active();
void select(Backend b); // throws std::runtime_error if unsupported

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i w[i]*f[i] with real weights and complex samples
cplx dot_real_complex(const double* w, const cplx* f, std::size_t n);

// out[i] = a[i]*b[i]; out may alias a or b
void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n);

double sum_abs2(const cplx* f, std::size_t n);
double max_abs2(const cplx* f, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
cplx dot_real_complex(const double* w, const cplx* f, std::size_t n);
void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n);
double sum_abs2(const cplx* f, std::size_t n);
double max_abs2(const cplx* f, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
} // namespace scalar

#if defined(AIRYEVOLVE_HAVE_AVX2_TU)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
cplx dot_real_complex(const double* w, const cplx* f, std::size_t n);
void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n);
double sum_abs2(const cplx* f, std::size_t n);
double max_abs2(const cplx* f, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
} // namespace avx2
#endif

} // namespace airyevolve::kernels
