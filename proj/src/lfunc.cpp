#include "qmf/lfunc.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qmf/quadrature.hpp"

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
constexpr double kEvalTol = 1e-30;

void require_near_real(const CuspForm& f) {
    if (!f.near_real_supported())
        fail(Status::unsupported, "transformation law unavailable: L-values need an eta quotient or matched theta series");
}

// (2 pi)^s / Gamma(s)
cplx l_factor(cplx s) { return std::exp(s * std::log(2.0 * kPi)) * rgamma(s); }

}  // namespace

ComplexValue mellin_integral(const CuspForm& f, const Rational& twist, cplx s, double tol) {
    if (f.is_zero()) return {0.0, 0.0};
    require_near_real(f);
    const Rational x = twist.frac();
    const double t = s.imag();
    const double phi = std::abs(t) > 3.0 ? std::copysign(kPi / 2.0 - 2.0 / std::abs(t), t) : 0.0;
    const cplx rot = std::polar(1.0, phi);
    const cplx pre = std::exp(kI * phi * s);
    const double pre_abs = std::abs(pre);
    auto g = [&](double u) {
        Point p{x, kI * std::exp(u) * rot};
        cplx v = f.evaluate(p, kEvalTol).value;
        if (v == cplx(0.0)) return cplx(0.0);
        return v * std::exp(u * s);
    };
    QuadResult q = integrate_line(g, tol / std::max(pre_abs, 1e-300));
    if (!q.converged)
        fail(Status::convergence, "Mellin integral did not converge (achieved error " + std::to_string(q.err * pre_abs) + ")");
    return {pre * q.value, pre_abs * q.err};
}

ComplexValue mellin_integral_relative(const CuspForm& f, const Rational& twist, cplx s, double rel) {
    ComplexValue coarse = mellin_integral(f, twist, s, std::numeric_limits<double>::infinity());
    double scale = std::abs(coarse.value);
    if (!std::isfinite(scale)) fail(Status::convergence, "Mellin integral is not finite");
    if (scale == 0.0) return coarse;
    return mellin_integral(f, twist, s, rel * scale);
}

LValue l_twisted(const CuspForm& f, const Rational& twist, cplx s, double tol) {
    LValue out;
    out.twist = twist.frac();
    out.level = f.level();
    out.s = s;
    out.method = LValue::Method::mellin_integral;
    if (f.is_zero()) return out;
    const cplx fac = l_factor(s);
    const double fac_abs = std::abs(fac);
    // on -N_0 the value is exactly zero; the integral only has to be finite
    ComplexValue I = fac_abs > 0 ? mellin_integral(f, twist, s, tol / fac_abs) : mellin_integral_relative(f, twist, s, 1e-10);
    if (!std::isfinite(I.value.real()) || !std::isfinite(I.value.imag()))
        fail(Status::convergence, "Mellin integral is not finite");
    out.value = fac * I.value;
    out.err = fac_abs * I.err + kSpecfunRelErr * std::abs(out.value);
    return out;
}

LValue l_direct(const CuspForm& f, const Rational& twist, cplx s, double tol) {
    LValue out;
    out.twist = twist.frac();
    out.level = f.level();
    out.s = s;
    out.method = LValue::Method::direct_series;
    if (f.is_zero()) return out;
    const Rational x = out.twist;
    const double sigma = s.real();
    auto term = [&](long long n) {
        Point p{x, 0.0};
        return p.q_power(n) * std::exp(-s * std::log(double(n)));
    };
    cplx sum = 0.0;
    double abs_sum = 0.0;
    if (f.spec().kind == CuspFormSpec::Kind::raw && !f.theta()) {
        for (long long n = 1; n <= static_cast<long long>(f.spec().raw.size()); ++n) {
            cplx t = f.coefficient(n) * term(n);
            sum += t;
            abs_sum += std::abs(t);
        }
    } else if (f.theta()) {
        const ThetaRule& th = *f.theta();
        const double e = th.power - 2.0 * sigma;
        if (e >= -1.0) fail(Status::domain, "Dirichlet series does not converge absolutely here");
        const double C = f.bound_constant();
        for (long long j = 1;; ++j) {
            cplx t = f.coefficient(j * j) * term(j * j);
            sum += t;
            abs_sum += std::abs(t);
            double tail = C * std::pow(double(j), e + 1.0) / (-e - 1.0);
            if (tail <= tol / 2) break;
            if (j > 50000000) fail(Status::budget, "Dirichlet series needs too many terms");
        }
    } else {
        const double e = f.bound_exponent() - sigma;
        if (e >= -1.0) fail(Status::domain, "Dirichlet series does not converge absolutely here");
        const double C = f.bound_constant();
        for (long long n = 1;; ++n) {
            cplx t = f.coefficient(n) * term(n);
            sum += t;
            abs_sum += std::abs(t);
            double tail = C * std::pow(double(n), e + 1.0) / (-e - 1.0);
            if (tail <= tol / 2) break;
            if (n >= kMaxSeriesTerms) fail(Status::budget, "Dirichlet series needs too many terms");
        }
    }
    out.value = sum;
    out.err = tol / 2 + 4e-16 * abs_sum;
    return out;
}

VanishingReport l_vanishing_check(const CuspForm& f, const Rational& twist, int m_max, double tol) {
    VanishingReport r;
    r.twist = twist.frac();
    r.tol = tol;
    r.passed = true;
    for (int m = 0; m <= m_max; ++m) {
        const cplx s(-double(m), 0.0);
        ComplexValue I = mellin_integral_relative(f, twist, s, 1e-10);
        double size = std::abs(I.value);
        bool finite = std::isfinite(size);
        LValue L = l_twisted(f, twist, s, tol);
        double v = std::abs(L.value);
        r.abs_values.push_back(v);
        r.integral_sizes.push_back(size);
        if (!finite || !(v <= tol)) r.passed = false;
    }
    return r;
}

CompletedLValue lambda_completed(const CuspForm& f, cplx s, double tol) {
    CompletedLValue out;
    out.s = s;
    if (f.is_zero()) return out;
    require_near_real(f);
    const double rn = std::sqrt(double(f.level()));
    const double k = f.weight().value();
    auto upper = [&](double v) {
        cplx val = f.evaluate(cplx(0.0, v / rn), kEvalTol).value;
        return val * std::exp((s - 1.0) * std::log(v));
    };
    auto image = [&](double v) {
        cplx val = f.fricke(cplx(0.0, v / rn), kEvalTol).value;
        return val * std::exp((k - s - 1.0) * std::log(v));
    };
    QuadResult a = integrate_expsinh(image, 1.0, tol / 2);
    QuadResult b = integrate_expsinh(upper, 1.0, tol / 2);
    if (!a.converged || !b.converged)
        fail(Status::convergence, "completed L-function integral did not converge (achieved error " +
                                      std::to_string(a.err + b.err) + ")");
    out.value = a.value + b.value;
    out.err = a.err + b.err;
    return out;
}

CompletedLValue lambda_mellin(const CuspForm& f, cplx s, double tol) {
    CompletedLValue out;
    out.s = s;
    if (f.is_zero()) return out;
    cplx fac = std::exp(0.5 * s * std::log(double(f.level())));
    ComplexValue I = mellin_integral(f, Rational(0), s, tol / std::abs(fac));
    out.value = fac * I.value;
    out.err = std::abs(fac) * I.err;
    return out;
}

FunctionalEquationReport functional_equation_residual(const CuspForm& f, const std::vector<cplx>& s_grid,
                                                      double threshold, double tol) {
    FunctionalEquationReport r;
    r.threshold = threshold;
    r.passed = true;
    if (f.is_zero()) {
        r.s = s_grid;
        r.residual.assign(s_grid.size(), 0.0);
        return r;
    }
    const CuspForm image = f.fricke_image();
    const double k = f.weight().value();
    for (cplx s : s_grid) {
        CompletedLValue a = lambda_completed(f, s, tol);
        CompletedLValue b = lambda_mellin(image, k - s, tol);
        double res = std::abs(a.value - b.value);
        r.s.push_back(s);
        r.residual.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
        if (!(res <= threshold)) r.passed = false;
    }
    return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(y[i] > 0) || !(x[i] > 0)) continue;
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double den = n * sxx - sx * sx;
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / den;
}

GrowthReport vertical_growth_probe(const CuspForm& f, const Rational& twist, double x, double t_max, int n,
                                   double tol) {
    if (n < 2 || !(t_max > 1.0)) fail(Status::invalid_argument, "growth probe needs n >= 2 and t_max > 1");
    GrowthReport r;
    for (int j = 0; j < n; ++j) {
        double t = 1.0 + (t_max - 1.0) * j / (n - 1);
        r.t.push_back(t);
        r.abs_l.push_back(std::abs(l_twisted(f, twist, cplx(x, t), tol).value));
    }
    r.exponent = loglog_slope(r.t, r.abs_l);
    return r;
}

CauchyMeanReport cauchy_mean_probe(const CuspForm& f, const Rational& twist, cplx center, double radius,
                                   int n, double tol) {
    if (n < 3 || !(radius > 0)) fail(Status::invalid_argument, "Cauchy probe needs n >= 3 and radius > 0");
    CauchyMeanReport r;
    r.center_value = l_twisted(f, twist, center, tol).value;
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) acc += l_twisted(f, twist, center + std::polar(radius, 2.0 * kPi * j / n), tol).value;
    r.circle_mean = acc / double(n);
    r.difference = std::abs(r.circle_mean - r.center_value);
    return r;
}

}  // namespace qmf
