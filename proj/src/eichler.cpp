#include "qmf/eichler.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qmf/quadrature.hpp"

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEvalTol = 1e-30;

}  // namespace

ComplexValue tilde_f(const CuspForm& f, const Point& tau, double tol) {
    if (!(tau.imag() > 0)) fail(Status::domain, "holomorphic Eichler integral needs Im(tau) > 0");
    return f.series(tau, tol, 1.0 - f.weight().value());
}

ComplexValue f_star_series(const CuspForm& f, const Point& tau, double tol) {
    if (!(tau.imag() < 0)) fail(Status::domain, "non-holomorphic Eichler integral needs Im(tau) < 0");
    if (f.is_zero()) return {0.0, 0.0};
    const double k = f.weight().value();
    const double v = -tau.imag();
    const Point up{tau.base, cplx(tau.offset.real(), v)};
    const cplx rg = rgamma(k - 1.0);
    const double x1 = 4.0 * kPi * v;
    auto w = [&](long long n) {
        double x = x1 * double(n);
        return std::pow(double(n), 1.0 - k) * up.q_power(n) * inc_gamma_upper_scaled(k - 1.0, x) * rg;
    };
    SeriesBound b;
    b.K = 2.0 * std::pow(x1, k - 2.0) * std::abs(rg);
    b.p = -1.0;
    b.y = v;
    b.n_from = std::max<long long>(1, static_cast<long long>(std::ceil(2.0 * (k - 1.0) / x1)));
    ComplexValue r = f.sum_series(w, b, tol);
    r.err += kSpecfunRelErr * std::abs(r.value) * 4.0;
    return r;
}

ComplexValue f_star_integral(const CuspForm& f, const Point& tau, double tol) {
    if (!(tau.imag() < 0)) fail(Status::domain, "non-holomorphic Eichler integral needs Im(tau) < 0");
    if (f.is_zero()) return {0.0, 0.0};
    const double k = f.weight().value();
    const double v = -tau.imag();
    const double u = tau.offset.real();
    const cplx pre = std::pow(2.0 * kPi, k - 1.0) * rgamma(k - 1.0);
    const double pre_abs = std::abs(pre);
    // a raw coefficient list is summed as it stands, at any height
    const bool raw = f.spec().kind == CuspFormSpec::Kind::raw;
    auto g = [&](double y) {
        Point w{tau.base, cplx(u, v + y)};
        cplx fw = raw ? f.series(w, kEvalTol).value : f.evaluate(w, kEvalTol).value;
        return fw * std::pow(2.0 * v + y, k - 2.0);
    };
    QuadResult q = integrate_expsinh(g, 0.0, tol / pre_abs);
    if (!q.converged)
        fail(Status::convergence, "f* quadrature did not converge (achieved error " + std::to_string(q.err * pre_abs) + ")");
    return {pre * q.value, pre_abs * q.err};
}

AsymptoticExpansion asymptotic_coeffs(const CuspForm& f, const Rational& base, int M, double tol) {
    if (M < 1 || M > kMaxExpansionOrder)
        fail(Status::invalid_argument, "expansion order must lie in 1.." + std::to_string(kMaxExpansionOrder));
    AsymptoticExpansion e;
    e.base = base.frac();
    const double k = f.weight().value();
    double fact = 1.0;
    for (int n = 0; n < M; ++n) {
        if (n > 0) fact *= n;
        cplx s = k - 1.0 - n;
        LValue L = l_twisted(f, e.base, s, tol * fact);
        cplx low = L.value / fact;
        e.lower.push_back(low);
        e.upper.push_back((n % 2) ? -low : low);
        e.err.push_back(L.err / fact);
        e.l_arguments.push_back(s);
    }
    return e;
}

AgreementReport expansion_agreement_check(const CuspForm& f, const Rational& base, const std::vector<double>& t_grid,
                                          int M, double tol) {
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0)) fail(Status::invalid_argument, "t grid must be positive");
        if (i > 0 && !(t_grid[i] < t_grid[i - 1])) fail(Status::invalid_argument, "t grid must be decreasing");
    }
    AgreementReport r;
    r.base = base.frac();
    r.M = M;
    r.t = t_grid;
    AsymptoticExpansion e = asymptotic_coeffs(f, r.base, M, tol);
    for (double t : t_grid) {
        cplx up_sum = 0.0, low_sum = 0.0;
        for (int n = M - 1; n >= 0; --n) {
            up_sum = up_sum * t + e.upper[n];
            low_sum = low_sum * t + e.lower[n];
        }
        double y = t / (2.0 * kPi);
        cplx ft = tilde_f(f, Point{r.base, cplx(0.0, y)}, tol).value;
        cplx fs = f_star_series(f, Point{r.base, cplx(0.0, -y)}, tol).value;
        r.r_upper.push_back(std::abs(ft - up_sum));
        r.r_lower.push_back(std::abs(fs - low_sum));
    }
    if (f.is_zero()) {
        r.passed = true;
        r.exponent_upper = r.exponent_lower = std::numeric_limits<double>::infinity();
        return r;
    }
    r.exponent_upper = loglog_slope(r.t, r.r_upper);
    r.exponent_lower = loglog_slope(r.t, r.r_lower);
    const double need = M - r.slack;
    r.passed = r.exponent_upper >= need && r.exponent_lower >= need;
    return r;
}

ComplexValue radial_limit(const CuspForm& f, const Rational& base, bool upper, double t0, int levels, double tol) {
    if (levels < 2 || !(t0 > 0)) fail(Status::invalid_argument, "radial limit needs t0 > 0 and at least two levels");
    const Rational x = base.frac();
    std::vector<double> t;
    std::vector<cplx> p;
    for (int j = 0; j < levels; ++j) {
        double tj = t0 * std::ldexp(1.0, -j);
        double y = tj / (2.0 * kPi);
        t.push_back(tj);
        p.push_back(upper ? tilde_f(f, Point{x, cplx(0.0, y)}, tol).value
                          : f_star_series(f, Point{x, cplx(0.0, -y)}, tol).value);
    }
    // Neville at t = 0
    std::vector<cplx> q = p;
    cplx prev = q.back();
    for (int m = 1; m < levels; ++m) {
        for (int i = 0; i + m < levels; ++i) q[i] = (t[i] * q[i + 1] - t[i + m] * q[i]) / (t[i] - t[i + m]);
        if (m == levels - 2) prev = q[0];
    }
    return {q[0], std::abs(q[0] - prev) + tol};
}

std::vector<cplx> fit_polynomial(const std::vector<double>& t, const std::vector<cplx>& v) {
    const size_t n = t.size();
    if (n == 0 || v.size() != n) fail(Status::invalid_argument, "fit needs matching nonempty samples");
    // Newton divided differences, then expand to monomials
    std::vector<cplx> d = v;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) d[i] = (d[i] - d[i - 1]) / (t[i] - t[i - j]);
    std::vector<cplx> c(n, 0.0);
    for (size_t i = n; i-- > 0;) {
        // c <- c * (x - t_i) + d_i
        for (size_t j = n - 1; j > 0; --j) c[j] = c[j - 1] - t[i] * c[j];
        c[0] = -t[i] * c[0] + d[i];
    }
    return c;
}

}  // namespace qmf
