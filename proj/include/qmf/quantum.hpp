#pragma once

/**
 * The quantum modular form Q_f(d/c) = L_f(e(d/c); k-1) on the rationals, the period cocycle
 *
 *   r_g(tau) = ((-2 pi i)^{k-1} / Gamma(k-1)) int_{-d/c}^{i inf} f(w) (w - tau)^{k-2} dw,
 *
 * and the weight 2-k transformation residual
 *
 *   Q(x) - chi(d) chi_{-4}(d) mu_{2-k}(g, x) Q(gx) - r_g(x).
 *
 * Also Kontsevich's strange function at roots of unity.
 */

#include <array>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/lfunc.hpp"

namespace qmf {

struct QuantumValue {
    Rational point;
    cplx value;
    double err = 0.0;
};

QuantumValue q_value(const CuspForm& f, const Rational& x, double tol);

// chi(d) chi_{-4}(d) eps_d^{2(2-k)} (c/d) (c tau + d)^{-(2-k)}, Im tau < 0.
cplx transformation_multiplier(const CuspForm& f, const GroupElement& g, cplx tau);
// Same at a real point, as the limit from the lower half-plane.
cplx transformation_multiplier(const CuspForm& f, const GroupElement& g, const Rational& x);

struct CocycleValue {
    cplx value;
    double err = 0.0;
    bool near_singular = false;  // |x + d/c| < 1e-3
};

// Vertical path w = -d/c + iy with arg(w - tau) in (0, pi). tau real or in the lower half-plane.
CocycleValue cocycle_integral(const CuspForm& f, const GroupElement& g, cplx tau, double tol);

struct ModularityResidual {
    GroupElement gamma;
    Rational x;
    Rational gx;
    cplx q_x;
    cplx q_gx;
    cplx multiplier;
    cplx cocycle;
    cplx residual;
    double err = 0.0;
};

ModularityResidual modularity_residual(const CuspForm& f, const GroupElement& g, const Rational& x, double tol);

struct CocycleReport {
    GroupElement gamma;
    double excluded = 0.0;  // -d/c; NaN when c = 0
    std::vector<double> x;
    std::vector<cplx> r;
    std::vector<double> err;
    std::array<double, 3> max_divided_difference{};  // orders 1..3
};

inline constexpr double kCocycleExclusion = 1e-2;

CocycleReport cocycle_scan(const CuspForm& f, const GroupElement& g, double lo, double hi, int n, double tol);

// F(zeta) = sum_{n >= 0} (zeta; zeta)_n for zeta = e(a/b); a finite sum of b terms.
ComplexValue strange_function(const Rational& exponent);

}  // namespace qmf
