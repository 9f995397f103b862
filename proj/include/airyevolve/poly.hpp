#pragma once

#include "airyevolve/airy.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

// Exact construction of the quasi-monomial families generated by
// exp(lambda d^p/dx^p) x^n: heat polynomials (p = 2), Airy polynomials
// (p = 3) and the general higher-order Hermite family, with exact rational
// coefficients so recurrence checks distinguish formula errors from rounding.

namespace airyevolve::poly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kMaxDegree = 30;

/// Dense coefficient list, ascending degree, trailing coefficient nonzero
/// unless the zero polynomial (empty).
struct PolyDense {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Rational coeff(std::size_t k) const {
        return k < coeffs.size() ? coeffs[k] : Rational(0);
    }
    void normalize();

    bool operator==(const PolyDense& o) const { return coeffs == o.coeffs; }
};

PolyDense monomial(unsigned n, const Rational& c = Rational(1));
PolyDense add(const PolyDense& a, const PolyDense& b);
PolyDense sub(const PolyDense& a, const PolyDense& b);
PolyDense scale(const PolyDense& a, const Rational& c);
PolyDense mul_x(const PolyDense& a);
PolyDense derivative(const PolyDense& a, unsigned order = 1);

/// exp(lambda d^p/dx^p) applied to a polynomial (the series terminates).
PolyDense diff_exponential(const PolyDense& f, const Rational& lambda, unsigned p);

/// H_n^{(p)}(x, lambda) = n! sum_{r=0}^{floor(n/p)} x^{n-pr} lambda^r / ((n-pr)! r!)
PolyDense hermite_higher(unsigned n, unsigned p, const Rational& lambda);

/// Airy polynomials ai_n(x, t) = H_n^{(3)}(x, t).
PolyDense airy_polynomial(unsigned n, const Rational& t);

/// Quadrature route for ai_n: (1/c) \int Ai((xi - x)/c) xi^n dxi with
/// c = cbrt(3t), apodized on the oscillatory side. Cross-validates the
/// coefficient route on sample points.
double airy_polynomial_quad(unsigned n, double t, double x,
                            const special_fn::QuadratureConfig& cfg = {});

/// Raising operator (x + p t d^{p-1}).
PolyDense raising(const PolyDense& f, unsigned p, const Rational& t);

struct RecurrenceReport {
    struct Entry {
        unsigned n;
        bool raising_ok;
        bool lowering_ok;
    };
    std::vector<Entry> entries;
    bool all_ok = true;
};

/// Checks H_{n+1}^{(p)} = (x + p t d^{p-1}) H_n^{(p)} and
/// d/dx H_n^{(p)} = n H_{n-1}^{(p)} exactly for n = 0..n_max.
RecurrenceReport verify_recurrences(unsigned n_max, unsigned p, const Rational& t);

double to_double(const Rational& r);
Rational rational_from_double(double v); // exact (doubles are dyadic)

/// Horner evaluation with double-converted coefficients.
double eval(const PolyDense& f, double x);

std::string to_string(const PolyDense& f);

} // namespace airyevolve::poly
