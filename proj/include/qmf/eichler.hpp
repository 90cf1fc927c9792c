#pragma once

/**
 * Eichler integrals of a weight k cusp form f = sum a(n) q^n:
 *
 *   holomorphic      f~(tau) = sum a(n) n^{1-k} q^n,                                   Im tau > 0
 *   non-holomorphic  f*(tau) = ((-2 pi i)^{k-1} / Gamma(k-1)) int_{conj tau}^{i inf} f(w) (w - tau)^{k-2} dw,
 *                                                                                      Im tau < 0
 *
 * and their asymptotic expansions at a rational d/c in terms of twisted L-values.
 */

#include <vector>

#include "qmf/forms.hpp"
#include "qmf/lfunc.hpp"

namespace qmf {

ComplexValue tilde_f(const CuspForm& f, const Point& tau, double tol);
inline ComplexValue tilde_f(const CuspForm& f, cplx tau, double tol) { return tilde_f(f, Point{Rational(0), tau}, tol); }

// f*(tau) = Gamma(k-1)^{-1} sum a(n) n^{1-k} e^{2 pi i n tau} Gamma(k-1, 4 pi n |v|), tau = u - i|v|.
ComplexValue f_star_series(const CuspForm& f, const Point& tau, double tol);
// Vertical ray w = conj(tau) + iy: f*(tau) = (2 pi)^{k-1}/Gamma(k-1) int_0^inf f(u + i(|v| + y)) (2|v| + y)^{k-2} dy.
ComplexValue f_star_integral(const CuspForm& f, const Point& tau, double tol);
inline ComplexValue f_star_series(const CuspForm& f, cplx tau, double tol) { return f_star_series(f, Point{Rational(0), tau}, tol); }
inline ComplexValue f_star_integral(const CuspForm& f, cplx tau, double tol) { return f_star_integral(f, Point{Rational(0), tau}, tol); }

inline constexpr int kMaxExpansionOrder = 12;

struct AsymptoticExpansion {
    Rational base;
    // f~(d/c + it/2pi)  ~ sum upper[n] t^n
    // f*(d/c - it/2pi)  ~ sum lower[n] t^n,  lower[n] = (-1)^n upper[n]
    std::vector<cplx> upper;
    std::vector<cplx> lower;
    std::vector<double> err;
    std::vector<cplx> l_arguments;  // s = k - 1 - n used for coefficient n
};

// upper[n] = (-1)^n / n! L_f(e(d/c); k - 1 - n), n < M, M <= 12.
AsymptoticExpansion asymptotic_coeffs(const CuspForm& f, const Rational& base, int M, double tol);

struct AgreementReport {
    Rational base;
    int M = 0;
    std::vector<double> t;
    std::vector<double> r_upper;  // |f~(x + it/2pi) - sum_{n<M} beta(n) t^n|
    std::vector<double> r_lower;  // |f*(x - it/2pi) - sum_{n<M} beta(n) (-t)^n|
    double exponent_upper = 0.0;
    double exponent_lower = 0.0;
    double slack = 0.25;
    bool passed = false;
};

AgreementReport expansion_agreement_check(const CuspForm& f, const Rational& base, const std::vector<double>& t_grid,
                                          int M, double tol);

// Extrapolated t -> 0+ limit of f~(x + it/2pi) (upper) or f*(x - it/2pi) (lower) by Neville
// interpolation on t_j = t0 2^{-j}, j < levels.
ComplexValue radial_limit(const CuspForm& f, const Rational& base, bool upper, double t0, int levels, double tol);

// Coefficients c_0..c_{n-1} of the interpolating polynomial through (t_i, v_i).
std::vector<cplx> fit_polynomial(const std::vector<double>& t, const std::vector<cplx>& v);

}  // namespace qmf
