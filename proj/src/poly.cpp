#include "airyevolve/poly.hpp"

#include "airyevolve/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace airyevolve::poly {

namespace {

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

void PolyDense::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

PolyDense monomial(unsigned n, const Rational& c) {
    PolyDense f;
    if (c == 0) return f;
    f.coeffs.assign(n + 1, Rational(0));
    f.coeffs[n] = c;
    return f;
}

PolyDense add(const PolyDense& a, const PolyDense& b) {
    PolyDense r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = a.coeff(k) + b.coeff(k);
    r.normalize();
    return r;
}

PolyDense sub(const PolyDense& a, const PolyDense& b) {
    PolyDense r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = a.coeff(k) - b.coeff(k);
    r.normalize();
    return r;
}

PolyDense scale(const PolyDense& a, const Rational& c) {
    if (c == 0) return {};
    PolyDense r = a;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

PolyDense mul_x(const PolyDense& a) {
    if (a.is_zero()) return {};
    PolyDense r;
    r.coeffs.resize(a.coeffs.size() + 1, Rational(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k + 1] = a.coeffs[k];
    return r;
}

PolyDense derivative(const PolyDense& a, unsigned order) {
    PolyDense r = a;
    for (unsigned o = 0; o < order; ++o) {
        if (r.coeffs.size() <= 1) return {};
        std::vector<Rational> d(r.coeffs.size() - 1);
        for (std::size_t k = 1; k < r.coeffs.size(); ++k)
            d[k - 1] = r.coeffs[k] * Rational(static_cast<unsigned long>(k));
        r.coeffs = std::move(d);
    }
    r.normalize();
    return r;
}

PolyDense diff_exponential(const PolyDense& f, const Rational& lambda, unsigned p) {
    if (p == 0) throw std::domain_error("diff_exponential: p must be >= 1");
    PolyDense sum = f;
    PolyDense term = f;
    Rational coef(1);
    for (unsigned r = 1;; ++r) {
        term = derivative(term, p);
        if (term.is_zero()) break;
        coef *= lambda / Rational(r);
        sum = add(sum, scale(term, coef));
    }
    return sum;
}

PolyDense hermite_higher(unsigned n, unsigned p, const Rational& lambda) {
    if (p < 2) throw std::domain_error("hermite_higher: p must be >= 2");
    if (n > kMaxDegree) throw std::domain_error("hermite_higher: degree above configured max");
    PolyDense h;
    h.coeffs.assign(n + 1, Rational(0));
    const Int nfact = factorial(n);
    Rational lam_pow(1);
    for (unsigned r = 0; r * p <= n; ++r) {
        unsigned deg = n - r * p;
        h.coeffs[deg] = Rational(nfact) * lam_pow / Rational(factorial(deg) * factorial(r));
        lam_pow *= lambda;
    }
    h.normalize();
    return h;
}

PolyDense airy_polynomial(unsigned n, const Rational& t) {
    return hermite_higher(n, 3, t);
}

double airy_polynomial_quad(unsigned n, double t, double x,
                            const special_fn::QuadratureConfig& cfg) {
    if (n > kMaxDegree) throw std::domain_error("airy_polynomial_quad: degree above max");
    if (t == 0.0) return std::pow(x, static_cast<double>(n));
    const double c = std::cbrt(3.0 * t);
    // substitute u = (xi - x)/c:  int Ai(u) (x + c u)^n du. The u^k moments of
    // the Airy kernel converge only in the regularized sense (a fixed window
    // does NOT converge as it widens), so damp with exp(-eps u^2) and
    // extrapolate eps -> 0 on a geometric ladder.
    auto damped = [&](double eps) {
        auto integrand = [&](double u) {
            return special_fn::airy_ai(u) *
                   std::pow(x + c * u, static_cast<double>(n)) * std::exp(-eps * u * u);
        };
        const double reach =
            std::sqrt((30.0 + 4.0 * std::log(1.0 / eps)) / eps);
        const double lo = -reach, hi = 14.0;
        const int nseg = static_cast<int>(std::ceil((hi - lo) * 2.0));
        double sum = 0.0;
        for (int s = 0; s < nseg; ++s) {
            double a = lo + (hi - lo) * s / nseg;
            double b = lo + (hi - lo) * (s + 1) / nseg;
            sum += quad::integrate(integrand, a, b, cfg.rel_tol);
        }
        return sum;
    };
    constexpr int K = 7;
    double eps[K], val[K], e = 0.4;
    for (int k = 0; k < K; ++k, e *= 0.5) {
        eps[k] = e;
        val[k] = damped(e);
    }
    for (int lev = 1; lev < K; ++lev) // Neville at eps = 0
        for (int i = 0; i < K - lev; ++i)
            val[i] = val[i + 1] +
                     (val[i] - val[i + 1]) * eps[i + lev] / (eps[i + lev] - eps[i]);
    return val[0];
}

PolyDense raising(const PolyDense& f, unsigned p, const Rational& t) {
    return add(mul_x(f), scale(derivative(f, p - 1), Rational(p) * t));
}

RecurrenceReport verify_recurrences(unsigned n_max, unsigned p, const Rational& t) {
    if (n_max + 1 > kMaxDegree) throw std::domain_error("verify_recurrences: n_max above max");
    RecurrenceReport rep;
    std::vector<PolyDense> h(n_max + 2);
    for (unsigned n = 0; n <= n_max + 1; ++n) h[n] = hermite_higher(n, p, t);
    for (unsigned n = 0; n <= n_max; ++n) {
        RecurrenceReport::Entry e{n, true, true};
        e.raising_ok = (raising(h[n], p, t) == h[n + 1]);
        if (n >= 1)
            e.lowering_ok =
                (derivative(h[n]) == scale(h[n - 1], Rational(n)));
        else
            e.lowering_ok = derivative(h[0]).is_zero();
        rep.all_ok = rep.all_ok && e.raising_ok && e.lowering_ok;
        rep.entries.push_back(e);
    }
    return rep;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("rational_from_double: non-finite");
    if (v == 0.0) return Rational(0);
    int e = 0;
    double m = std::frexp(v, &e);
    auto mi = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    Rational r(mi);
    if (e > 0)
        r *= Rational(Int(1) << e);
    else if (e < 0)
        r /= Rational(Int(1) << (-e));
    return r;
}

double eval(const PolyDense& f, double x) {
    double acc = 0.0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

std::string to_string(const PolyDense& f) {
    std::ostringstream os;
    if (f.is_zero()) return "0";
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << c;
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

} // namespace airyevolve::poly
