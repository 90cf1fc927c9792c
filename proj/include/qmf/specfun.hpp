#pragma once

// Complex special functions: Gamma, upper incomplete Gamma, Gauss 2F1,
// incomplete / regularized beta, and the Mellin transform of e^t Gamma(k-1, 2t).

#include <complex>

#include "qmf/arith.hpp"

namespace qmf {

struct ComplexValue {
    cplx value;
    double err = 0.0;
};

// Working relative accuracy of the elementary routines below; error budgets downstream use it.
inline constexpr double kSpecfunRelErr = 5e-15;

cplx sin_pi(cplx z);
bool is_nonpositive_integer(cplx z);

cplx gamma_fn(cplx s);       // Status::pole on -N_0
cplx rgamma(cplx s);      // 1/Gamma, entire; exactly 0 on -N_0
cplx log_gamma(cplx s);   // some branch of log Gamma (only exp() of it is meaningful)
cplx pochhammer(cplx x, int n);

// Gamma(s, x) for real x >= 0. Status::domain for x < 0, or x = 0 with Re s <= 0.
cplx inc_gamma_upper(cplx s, double x);
// e^x Gamma(s, x); avoids underflow for large x.
cplx inc_gamma_upper_scaled(cplx s, double x);

// Gauss 2F1 for |z| <= 1 (z = 1 only when Re(c-a-b) > 0). Status::pole when c is in -N_0 and
// the series does not terminate first; Status::convergence when summation fails.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);
// 2F1 / Gamma(c), entire in c.
cplx hyp2f1_reg(cplx a, cplx b, cplx c, cplx z);
// Direct series with Wynn-epsilon acceleration (Abel limit on |z| = 1). Used as an oracle.
cplx hyp2f1_abel(cplx a, cplx b, cplx c, cplx z);

cplx beta(cplx a, cplx b);
// beta(x; a, b), continued in (a, b) through the 2F1 representation; x in [0, 1].
cplx inc_beta(double x, cplx a, cplx b);
// I(x; a, b) = beta(x; a, b) / beta(a, b), entire in a and b where Gamma(a+b) is finite.
cplx reg_beta(double x, cplx a, cplx b);

// M(e^t Gamma(k-1, 2t))(s) = beta(1/2; s, 2-k-s) Gamma(k-1+s). Status::pole on the excluded set.
cplx mellin_exp_incgamma(cplx s, Weight k);
// 2^{k-1} Gamma(s+k-1)/s * 2F1(1, s+k-1; 1+s; -1), 2F1 summed directly at z = -1.
cplx mellin_exp_incgamma_at_minus_one(cplx s, Weight k);
// 2^{-s} Gamma(s+k-1)/s * 2F1(s+k-1, s; 1+s; 1/2), after the Pfaff transformation.
cplx mellin_exp_incgamma_pfaff(cplx s, Weight k);
// Direct quadrature of int_0^inf e^t Gamma(k-1, 2t) t^{s-1} dt.
ComplexValue mellin_exp_incgamma_quad(cplx s, Weight k, double tol);

}  // namespace qmf
