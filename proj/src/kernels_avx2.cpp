#include "airyevolve/kernels.hpp"

#if defined(AIRYEVOLVE_HAVE_AVX2_TU)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace airyevolve::kernels::avx2 {

namespace {

inline double reduce_add(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double reduce_max(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = reduce_add(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

cplx dot_real_complex(const double* w, const cplx* f, std::size_t n) {
    const double* fd = reinterpret_cast<const double*>(f);
    __m256d acc = _mm256_setzero_pd(); // [re, im, re, im]
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d wv = _mm256_loadu_pd(w + i);
        __m256d wlo = _mm256_permute4x64_pd(wv, 0x50); // [w0,w0,w1,w1]
        __m256d whi = _mm256_permute4x64_pd(wv, 0xFA); // [w2,w2,w3,w3]
        acc = _mm256_fmadd_pd(wlo, _mm256_loadu_pd(fd + 2 * i), acc);
        acc = _mm256_fmadd_pd(whi, _mm256_loadu_pd(fd + 2 * i + 4), acc);
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    double re = s[0] + s[2], im = s[1] + s[3];
    for (; i < n; ++i) {
        re += w[i] * f[i].real();
        im += w[i] * f[i].imag();
    }
    return {re, im};
}

void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    double* od = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ad + 2 * i);
        __m256d bv = _mm256_loadu_pd(bd + 2 * i);
        __m256d bre = _mm256_movedup_pd(bv);        // [br0,br0,br1,br1]
        __m256d bim = _mm256_permute_pd(bv, 0xF);   // [bi0,bi0,bi1,bi1]
        __m256d asw = _mm256_permute_pd(av, 0x5);   // [ai0,ar0,ai1,ar1]
        __m256d r = _mm256_fmaddsub_pd(av, bre, _mm256_mul_pd(asw, bim));
        _mm256_storeu_pd(od + 2 * i, r);
    }
    for (; i < n; ++i) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

double sum_abs2(const cplx* f, std::size_t n) {
    // sum of re^2 + im^2 over n complex == dot of the flat double array with itself
    const double* fd = reinterpret_cast<const double*>(f);
    return avx2::dot(fd, fd, 2 * n);
}

double max_abs2(const cplx* f, std::size_t n) {
    const double* fd = reinterpret_cast<const double*>(f);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(fd + 2 * i);
        __m256d sq = _mm256_mul_pd(v, v);
        m = _mm256_max_pd(m, _mm256_hadd_pd(sq, sq)); // [|f0|^2,|f0|^2,|f1|^2,|f1|^2]
    }
    double r = reduce_max(m);
    for (; i < n; ++i) {
        double v = f[i].real() * f[i].real() + f[i].imag() * f[i].imag();
        r = std::max(r, v);
    }
    return r;
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ad + 2 * i), _mm256_loadu_pd(bd + 2 * i));
        __m256d sq = _mm256_mul_pd(d, d);
        m = _mm256_max_pd(m, _mm256_hadd_pd(sq, sq));
    }
    double r = reduce_max(m);
    for (; i < n; ++i) {
        cplx d = a[i] - b[i];
        double v = d.real() * d.real() + d.imag() * d.imag();
        r = std::max(r, v);
    }
    return std::sqrt(r);
}

} // namespace airyevolve::kernels::avx2

#endif // AIRYEVOLVE_HAVE_AVX2_TU
