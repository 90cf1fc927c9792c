#include "qmf/quantum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qmf/quadrature.hpp"

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
constexpr double kEvalTol = 1e-30;

void require_gamma0(const CuspForm& f, const GroupElement& g) {
    if (!g.valid()) fail(Status::invalid_argument, "matrix does not have determinant 1");
    if (!in_gamma0(g, f.level()))
        fail(Status::invalid_argument, "matrix " + g.str() + " is not in Gamma_0(" + std::to_string(f.level()) + ")");
}

double character_sign(const CuspForm& f, const GroupElement& g) { return double(f.character(g.d) * chi_m4(g.d)); }

}  // namespace

QuantumValue q_value(const CuspForm& f, const Rational& x, double tol) {
    LValue L = l_twisted(f, x, f.weight().value() - 1.0, tol);
    return {x, L.value, L.err};
}

cplx transformation_multiplier(const CuspForm& f, const GroupElement& g, cplx tau) {
    require_gamma0(f, g);
    if (!(tau.imag() < 0)) fail(Status::domain, "multiplier is taken in the lower half-plane");
    return character_sign(f, g) * automorphy(g, tau, f.weight().dual(), f.level()).factor.value;
}

cplx transformation_multiplier(const CuspForm& f, const GroupElement& g, const Rational& x) {
    require_gamma0(f, g);
    return character_sign(f, g) * boundary_multiplier(g, x, f.weight().dual());
}

CocycleValue cocycle_integral(const CuspForm& f, const GroupElement& g, cplx tau, double tol) {
    require_gamma0(f, g);
    if (tau.imag() > 0) fail(Status::domain, "cocycle is evaluated on the real line or below it");
    CocycleValue out;
    if (f.is_zero() || g.c == 0) return out;
    if (!f.near_real_supported())
        fail(Status::unsupported, "transformation law unavailable: the cocycle needs values near the cusp");
    const Rational cusp(-g.d, g.c);
    const cplx delta = cusp.value() - tau;
    if (delta == cplx(0.0)) fail(Status::domain, "point is the excluded cusp -d/c");
    out.near_singular = std::abs(delta) < 1e-3;
    const double k = f.weight().value();
    const cplx pre = ppow(cplx(0.0, -2.0 * kPi), k - 1.0) * rgamma(k - 1.0) * kI;
    const double pre_abs = std::abs(pre);
    auto h = [&](double y) {
        cplx v = f.evaluate(Point{cusp, cplx(0.0, y)}, kEvalTol).value;
        if (v == cplx(0.0)) return cplx(0.0);
        return v * ppow(delta + kI * y, k - 2.0);
    };
    QuadResult q = integrate_halfline_log(h, tol / pre_abs);
    if (!q.converged)
        fail(Status::convergence, "cocycle quadrature did not converge (achieved error " + std::to_string(q.err * pre_abs) + ")");
    out.value = pre * q.value;
    out.err = pre_abs * q.err;
    return out;
}

ModularityResidual modularity_residual(const CuspForm& f, const GroupElement& g, const Rational& x, double tol) {
    require_gamma0(f, g);
    ModularityResidual r;
    r.gamma = g;
    r.x = x;
    r.gx = g.apply(x);
    r.multiplier = transformation_multiplier(f, g, x);
    QuantumValue qx = q_value(f, x, tol);
    QuantumValue qg = q_value(f, r.gx, tol);
    r.q_x = qx.value;
    r.q_gx = qg.value;
    CocycleValue c = cocycle_integral(f, g, cplx(x.value(), 0.0), tol);
    r.cocycle = c.value;
    r.residual = r.q_x - r.multiplier * r.q_gx - r.cocycle;
    r.err = qx.err + std::abs(r.multiplier) * qg.err + c.err;
    return r;
}

CocycleReport cocycle_scan(const CuspForm& f, const GroupElement& g, double lo, double hi, int n, double tol) {
    require_gamma0(f, g);
    if (n < 5 || !(hi > lo)) fail(Status::invalid_argument, "scan needs hi > lo and at least 5 samples");
    CocycleReport rep;
    rep.gamma = g;
    rep.excluded = std::numeric_limits<double>::quiet_NaN();
    if (g.c != 0) {
        rep.excluded = -double(g.d) / double(g.c);
        if (rep.excluded >= lo - kCocycleExclusion && rep.excluded <= hi + kCocycleExclusion)
            fail(Status::invalid_argument, "scan interval must stay 0.01 away from the excluded point " +
                                               Rational(-g.d, g.c).str());
    }
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        double x = lo + h * i;
        CocycleValue c = cocycle_integral(f, g, cplx(x, 0.0), tol);
        rep.x.push_back(x);
        rep.r.push_back(c.value);
        rep.err.push_back(c.err);
    }
    std::vector<cplx> d = rep.r;
    for (int order = 1; order <= 3; ++order) {
        double m = 0.0;
        for (size_t i = 0; i + order < rep.r.size(); ++i) {
            d[i] = (d[i + 1] - d[i]) / h;
            m = std::max(m, std::abs(d[i]));
        }
        rep.max_divided_difference[order - 1] = m;
    }
    return rep;
}

ComplexValue strange_function(const Rational& exponent) {
    const long long b = exponent.den();
    const long long a = exponent.num();
    cplx sum = 1.0, prod = 1.0;
    double mag = 1.0;
    for (long long n = 1; n < b; ++n) {
        prod *= 1.0 - expi_2pi(Rational(a * n % b, b));
        sum += prod;
        mag += std::abs(prod);
    }
    return {sum, 4e-16 * double(b) * mag * (b > 2 ? 1.0 : 0.0)};
}

}  // namespace qmf
