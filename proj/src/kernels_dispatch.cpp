#include "airyevolve/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace airyevolve::kernels {

namespace {

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    cplx (*dot_real_complex)(const double*, const cplx*, std::size_t);
    void (*complex_mul)(cplx*, const cplx*, const cplx*, std::size_t);
    double (*sum_abs2)(const cplx*, std::size_t);
    double (*max_abs2)(const cplx*, std::size_t);
    double (*max_abs_diff)(const cplx*, const cplx*, std::size_t);
};

constexpr Ops kScalarOps = {scalar::dot,      scalar::dot_real_complex,
                            scalar::complex_mul, scalar::sum_abs2,
                            scalar::max_abs2, scalar::max_abs_diff};

#if defined(AIRYEVOLVE_HAVE_AVX2_TU)
constexpr Ops kAvx2Ops = {avx2::dot,      avx2::dot_real_complex,
                          avx2::complex_mul, avx2::sum_abs2,
                          avx2::max_abs2, avx2::max_abs_diff};
#endif

bool cpu_has_avx2() {
#if defined(AIRYEVOLVE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("AIRY_EVOLVE_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && supported(Backend::avx2)) return Backend::avx2;
        // "auto" or anything unrecognized falls through to detection
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Ops& ops() {
    const Ops* p = g_ops.load(std::memory_order_acquire);
    if (!p) {
        select(pick_default());
        p = g_ops.load(std::memory_order_acquire);
    }
    return *p;
}

} // namespace

const char* name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool supported(Backend b) {
    if (b == Backend::scalar) return true;
    return cpu_has_avx2();
}

Backend active() {
    ops();
    return g_backend.load(std::memory_order_acquire);
}

void select(Backend b) {
    if (!supported(b)) throw std::runtime_error("kernel backend not supported on this CPU");
    switch (b) {
#if defined(AIRYEVOLVE_HAVE_AVX2_TU)
        case Backend::avx2:
            g_ops.store(&kAvx2Ops, std::memory_order_release);
            break;
#endif
        default:
            g_ops.store(&kScalarOps, std::memory_order_release);
            b = Backend::scalar;
            break;
    }
    g_backend.store(b, std::memory_order_release);
}

double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
cplx dot_real_complex(const double* w, const cplx* f, std::size_t n) {
    return ops().dot_real_complex(w, f, n);
}
void complex_mul(cplx* out, const cplx* a, const cplx* b, std::size_t n) {
    ops().complex_mul(out, a, b, n);
}
double sum_abs2(const cplx* f, std::size_t n) { return ops().sum_abs2(f, n); }
double max_abs2(const cplx* f, std::size_t n) { return ops().max_abs2(f, n); }
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    return ops().max_abs_diff(a, b, n);
}

} // namespace airyevolve::kernels
