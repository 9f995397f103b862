#include "airyevolve/kernels.hpp"

#include <algorithm>
#include <cmath>

// Reference kernels. Keep these loops plain: they define the semantics the
// SIMD variants are equivalence-tested against.

namespace airyevolve::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

cplx dot_real_complex(const double* w, const cplx* f, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += w[i] * f[i].real();
        im += w[i] * f[i].imag();
    }
    return {re, im};
}

void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

double sum_abs2(const cplx* f, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += f[i].real() * f[i].real() + f[i].imag() * f[i].imag();
    return s;
}

double max_abs2(const cplx* f, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = f[i].real() * f[i].real() + f[i].imag() * f[i].imag();
        m = std::max(m, v);
    }
    return m;
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace airyevolve::kernels::scalar
