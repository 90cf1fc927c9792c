#pragma once

/**
 * Twisted L-values L_f(e(d/c); s) = sum a(n) e(nd/c) n^{-s}, continued to all s through the
 * entire Mellin integral
 *
 *   I(s) = int_0^inf f(d/c + iy) y^{s-1} dy = Gamma(s) (2 pi)^{-s} L_f(e(d/c); s),
 *
 * plus completed L-functions and the Fricke functional equation.
 */

#include <vector>

#include "qmf/forms.hpp"

namespace qmf {

struct LValue {
    enum class Method { direct_series, mellin_integral };

    Rational twist;       // d/c, reduced mod 1
    long long level = 0;  // level of the untwisted form
    cplx s;
    cplx value;
    double err = 0.0;
    Method method = Method::mellin_integral;
};

// I(s) above. For |Im s| > 3 the ray is rotated towards the cusp to avoid cancellation.
ComplexValue mellin_integral(const CuspForm& f, const Rational& twist, cplx s, double tol);

// Same to relative accuracy rel.
ComplexValue mellin_integral_relative(const CuspForm& f, const Rational& twist, cplx s, double rel);

// Analytic continuation; exact zero on -N_0 (1/Gamma vanishes there, the integral is finite).
LValue l_twisted(const CuspForm& f, const Rational& twist, cplx s, double tol);

// Direct Dirichlet series; needs Re s > alpha + 1 for the coefficient bound |a(n)| <= C n^alpha
// (Re s > (nu + 1)/2 for theta series).
LValue l_direct(const CuspForm& f, const Rational& twist, cplx s, double tol);

struct VanishingReport {
    Rational twist;
    std::vector<double> abs_values;      // |L(-m)|, m = 0..m_max
    std::vector<double> integral_sizes;  // |I(-m)|, finite
    double tol = 0.0;
    bool passed = false;
};

VanishingReport l_vanishing_check(const CuspForm& f, const Rational& twist, int m_max, double tol);

struct CompletedLValue {
    cplx s;
    cplx value;
    double err = 0.0;
};

// Lambda(s) = int_1^inf (f|W_N)(iv/sqrt N) v^{k-s-1} dv + int_1^inf f(iv/sqrt N) v^{s-1} dv,
// with f|W_N evaluated numerically.
CompletedLValue lambda_completed(const CuspForm& f, cplx s, double tol);
// Lambda(s) = (sqrt N / 2 pi)^s Gamma(s) L(s) = N^{s/2} I(s) at the trivial twist.
CompletedLValue lambda_mellin(const CuspForm& f, cplx s, double tol);

struct FunctionalEquationReport {
    std::vector<cplx> s;
    std::vector<double> residual;  // |Lambda_f(s) - Lambda_{f|W_N}(k - s)|
    double max_residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

FunctionalEquationReport functional_equation_residual(const CuspForm& f, const std::vector<cplx>& s_grid,
                                                      double threshold, double tol);

struct GrowthReport {
    std::vector<double> t;
    std::vector<double> abs_l;
    double exponent = 0.0;  // NaN when all samples vanish
};

GrowthReport vertical_growth_probe(const CuspForm& f, const Rational& twist, double x, double t_max, int n,
                                   double tol);

struct CauchyMeanReport {
    cplx center_value;
    cplx circle_mean;
    double difference = 0.0;
};

CauchyMeanReport cauchy_mean_probe(const CuspForm& f, const Rational& twist, cplx center, double radius,
                                   int n, double tol);

// Least-squares slope of log y against log x over samples with y > 0; NaN if fewer than two.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qmf
