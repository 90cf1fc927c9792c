#include "qmf/specfun.hpp"

#include <climits>
#include <cmath>
#include <numbers>
#include <vector>

#include "qmf/quadrature.hpp"

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// B_{2m} / (2m (2m-1)), m = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// log Gamma for Re z >= 0.5 via upward shift and Stirling's series.
cplx log_gamma_right(cplx z) {
    cplx prod = 1.0;
    int shifts = 0;
    while (z.real() < 15.0 || std::abs(z) < 17.0) {
        prod *= z;
        z += 1.0;
        ++shifts;
    }
    cplx zi = 1.0 / z;
    cplx zi2 = zi * zi;
    cplx series = 0.0;
    cplx p = zi;
    for (double c : kStirling) {
        series += c * p;
        p *= zi2;
    }
    cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
    return shifts > 0 ? lg - std::log(prod) : lg;
}

bool near_integer(double x) { return x == std::round(x); }

// Wynn epsilon acceleration of partial sums; err is the gap between the last two
// even-column estimates.
cplx wynn(const std::vector<cplx>& s, double& err) {
    const size_t n = s.size();
    std::vector<cplx> prev(n + 1, 0.0), cur(s);
    cplx best = s.back();
    err = n > 1 ? std::abs(s[n - 1] - s[n - 2]) : 0.0;
    for (size_t k = 1; k < n; ++k) {
        std::vector<cplx> nxt(n - k);
        for (size_t i = 0; i + k < n; ++i) {
            cplx d = cur[i + 1] - cur[i];
            if (d == cplx(0.0)) {
                if (k % 2 == 1) err = 0.0, best = cur[i];
                return best;
            }
            nxt[i] = prev[i + 1] + 1.0 / d;
        }
        if (k % 2 == 0) {
            err = std::abs(nxt.back() - best);
            best = nxt.back();
        }
        prev = std::move(cur);
        cur = std::move(nxt);
    }
    return best;
}

cplx series_2f1(cplx a, cplx b, cplx c, cplx z, bool accelerate) {
    cplx term = 1.0, sum = 1.0;
    std::vector<cplx> partial{1.0};
    int small = 0;
    const int cap = accelerate ? 160 : 100000;
    for (int n = 0; n < cap; ++n) {
        cplx num = (a + double(n)) * (b + double(n));
        if (num == cplx(0.0)) return sum;
        cplx den = (c + double(n)) * double(n + 1);
        if (den == cplx(0.0)) fail(Status::pole, "2F1: c is a non-positive integer");
        term *= num / den * z;
        sum += term;
        if (accelerate) {
            partial.push_back(sum);
        } else {
            small = std::abs(term) <= 1e-17 * std::abs(sum) ? small + 1 : 0;
            if (small >= 3) return sum;
        }
    }
    if (!accelerate) fail(Status::convergence, "2F1 series did not converge");
    const size_t w = 48;
    double err1 = 0, err2 = 0;
    std::vector<cplx> s1(partial.begin() + 60, partial.begin() + 60 + w);
    std::vector<cplx> s2(partial.end() - w, partial.end());
    cplx e1 = wynn(s1, err1);
    cplx e2 = wynn(s2, err2);
    double scale = std::max(1.0, std::abs(e2));
    if (std::abs(e1 - e2) > 1e-11 * scale || err2 > 1e-11 * scale)
        fail(Status::convergence, "2F1: Abel summation did not settle");
    return e2;
}

// -m if z is exactly that non-positive integer, else 1.
long long nonpos_int(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && near_integer(z.real())) return static_cast<long long>(z.real());
    return 1;
}

}  // namespace

cplx sin_pi(cplx z) {
    double x = z.real(), y = z.imag();
    return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

bool is_nonpositive_integer(cplx z) { return nonpos_int(z) <= 0; }

cplx log_gamma(cplx s) {
    if (is_nonpositive_integer(s)) fail(Status::pole, "Gamma has a pole at a non-positive integer");
    if (s.real() < 0.5) return std::log(kPi) - std::log(sin_pi(s)) - log_gamma_right(1.0 - s);
    return log_gamma_right(s);
}

cplx gamma_fn(cplx s) {
    if (is_nonpositive_integer(s)) fail(Status::pole, "Gamma has a pole at a non-positive integer");
    if (s.imag() == 0.0 && s.real() > 0 && s.real() <= 20 && near_integer(s.real())) {
        double f = 1.0;
        for (int j = 2; j < static_cast<int>(s.real()); ++j) f *= j;
        return f;
    }
    if (s.real() < 0.5) return kPi / (sin_pi(s) * std::exp(log_gamma_right(1.0 - s)));
    return std::exp(log_gamma_right(s));
}

cplx rgamma(cplx s) {
    if (is_nonpositive_integer(s)) return 0.0;
    if (s.real() < 0.5) return sin_pi(s) * std::exp(log_gamma_right(1.0 - s)) / kPi;
    return 1.0 / gamma_fn(s);
}

cplx pochhammer(cplx x, int n) {
    cplx p = 1.0;
    for (int j = 0; j < n; ++j) p *= x + double(j);
    return p;
}

cplx inc_gamma_upper_scaled(cplx s, double x) {
    if (x < 0) fail(Status::domain, "incomplete Gamma needs x >= 0");
    if (x == 0.0) {
        if (s.real() <= 0) fail(Status::domain, "Gamma(s, 0) needs Re s > 0");
        return gamma_fn(s);
    }
    const cplx xs = std::exp(s * std::log(x));
    if (x >= 1.5 && x >= s.real() + 1.0) {
        // modified Lentz on the Legendre continued fraction
        const double tiny = 1e-300;
        cplx b = x + 1.0 - s;
        cplx c = 1.0 / tiny;
        cplx d = 1.0 / b;
        cplx h = d;
        for (int i = 1; i < 5000; ++i) {
            cplx an = -double(i) * (double(i) - s);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            cplx del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) return xs * h;
        }
        fail(Status::convergence, "incomplete Gamma continued fraction did not converge");
    }
    long long m = nonpos_int(s);
    if (m <= 0) {
        // Gamma(0, x) = E1(x) by its series, then downward recurrence to s = m.
        double e1 = -std::numbers::egamma - std::log(x);
        double term = 1.0;
        for (int n = 1; n < 200; ++n) {
            term *= -x / n;
            double add = -term / n;
            e1 += add;
            if (std::abs(add) < 1e-17 * std::abs(e1)) break;
        }
        cplx g = e1 * std::exp(x);  // scaled
        for (long long j = 0; j > m; --j) {
            // Gamma(j-1, x) = (Gamma(j, x) - x^{j-1} e^{-x}) / (j-1)
            g = (g - std::pow(x, double(j - 1))) / double(j - 1);
        }
        return g;
    }
    // lower series: gamma_fn(s, x) = x^s e^{-x} sum_n x^n / (s)_{n+1}
    cplx term = 1.0 / s, sum = term;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (s + double(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return gamma_fn(s) * std::exp(x) - xs * sum;
}

cplx inc_gamma_upper(cplx s, double x) {
    if (x == 0.0) return inc_gamma_upper_scaled(s, x);
    return inc_gamma_upper_scaled(s, x) * std::exp(-x);
}

cplx hyp2f1_abel(cplx a, cplx b, cplx c, cplx z) {
    if (std::abs(z) > 1.0 + 1e-15) fail(Status::domain, "2F1 Abel summation needs |z| <= 1");
    return series_2f1(a, b, c, z, true);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
    const long long ma = nonpos_int(a), mb = nonpos_int(b), mc = nonpos_int(c);
    const bool poly = ma <= 0 || mb <= 0;
    if (mc <= 0) {
        long long deg = std::max(ma <= 0 ? ma : LLONG_MIN, mb <= 0 ? mb : LLONG_MIN);
        if (!poly || -deg > -mc) fail(Status::pole, "2F1: c is a non-positive integer");
        return series_2f1(a, b, c, z, false);
    }
    if (z == cplx(0.0)) return 1.0;
    if (poly) return series_2f1(a, b, c, z, false);
    if (std::abs(z) > 1.0 + 1e-15) fail(Status::domain, "2F1 is only provided for |z| <= 1");
    if (z == cplx(1.0)) {
        if ((c - a - b).real() <= 0) fail(Status::convergence, "2F1 diverges at z = 1");
        return gamma_fn(c) * gamma_fn(c - a - b) * rgamma(c - a) * rgamma(c - b);
    }
    if (std::abs(z) <= 0.9) return series_2f1(a, b, c, z, false);
    cplx w = z / (z - 1.0);
    if (std::abs(w) <= 0.9) return std::exp(-a * std::log(1.0 - z)) * series_2f1(a, c - b, c, w, false);
    cplx s = c - a - b;
    if (std::abs(1.0 - z) <= 0.9 && !(s.imag() == 0.0 && near_integer(s.real()))) {
        cplx y = 1.0 - z;
        cplx t1 = gamma_fn(c) * gamma_fn(s) * rgamma(c - a) * rgamma(c - b) * series_2f1(a, b, 1.0 - s, y, false);
        cplx t2 = std::exp(s * std::log(y)) * gamma_fn(c) * gamma_fn(-s) * rgamma(a) * rgamma(b) *
                  series_2f1(c - a, c - b, 1.0 + s, y, false);
        return t1 + t2;
    }
    return series_2f1(a, b, c, z, true);
}

cplx hyp2f1_reg(cplx a, cplx b, cplx c, cplx z) {
    long long mc = nonpos_int(c);
    if (mc <= 0) {
        const int m = static_cast<int>(-mc);
        // DLMF 15.2.3_5
        cplx f = pochhammer(a, m + 1) * pochhammer(b, m + 1) * std::pow(z, m + 1);
        if (f == cplx(0.0)) return 0.0;
        return f * hyp2f1_reg(a + double(m + 1), b + double(m + 1), double(m + 2), z);
    }
    return hyp2f1(a, b, c, z) * rgamma(c);
}

cplx beta(cplx a, cplx b) {
    if (is_nonpositive_integer(a + b)) {
        if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) fail(Status::pole, "beta at a pole");
        return 0.0;
    }
    return gamma_fn(a) * gamma_fn(b) * rgamma(a + b);
}

namespace {

cplx powx(double x, cplx e) { return std::exp(e * std::log(x)); }

}  // namespace

cplx inc_beta(double x, cplx a, cplx b) {
    if (x < 0.0 || x > 1.0) fail(Status::domain, "incomplete beta needs x in [0, 1]");
    if (is_nonpositive_integer(a)) fail(Status::pole, "incomplete beta has a pole at a in -N_0");
    if (x == 0.0) {
        if (a.real() <= 0) fail(Status::domain, "beta(0; a, b) needs Re a > 0");
        return 0.0;
    }
    if (x == 1.0) return beta(a, b);
    if (x <= 0.5)
        return powx(x, a) * powx(1.0 - x, b - 1.0) / a * hyp2f1(1.0, 1.0 - b, a + 1.0, x / (x - 1.0));
    return powx(x, a) * powx(1.0 - x, b) / a * hyp2f1(a + b, 1.0, a + 1.0, x);
}

cplx reg_beta(double x, cplx a, cplx b) {
    if (x < 0.0 || x > 1.0) fail(Status::domain, "regularized beta needs x in [0, 1]");
    if (is_nonpositive_integer(a + b)) fail(Status::pole, "regularized beta: Gamma(a+b) has a pole");
    if (x == 0.0) {
        if (a.real() <= 0) fail(Status::domain, "I(0; a, b) needs Re a > 0");
        return 0.0;
    }
    if (x == 1.0) return 1.0;
    cplx g = gamma_fn(a + b) * rgamma(b);
    if (g == cplx(0.0)) return 0.0;
    if (x <= 0.5)
        return g * powx(x, a) * powx(1.0 - x, b - 1.0) * hyp2f1_reg(1.0, 1.0 - b, a + 1.0, x / (x - 1.0));
    return g * powx(x, a) * powx(1.0 - x, b) * hyp2f1_reg(a + b, 1.0, a + 1.0, x);
}

namespace {

void check_mellin_poles(cplx s, Weight k) {
    if (is_nonpositive_integer(s) || is_nonpositive_integer(s + (k.value() - 1.0)))
        fail(Status::pole, "Mellin transform of e^t Gamma(k-1, 2t) has a pole here");
}

}  // namespace

cplx mellin_exp_incgamma(cplx s, Weight k) {
    check_mellin_poles(s, k);
    const double kv = k.value();
    return inc_beta(0.5, s, 2.0 - kv - s) * gamma_fn(kv - 1.0 + s);
}

cplx mellin_exp_incgamma_at_minus_one(cplx s, Weight k) {
    check_mellin_poles(s, k);
    const double kv = k.value();
    cplx b = s + (kv - 1.0);
    return std::pow(2.0, kv - 1.0) * gamma_fn(b) / s * hyp2f1_abel(1.0, b, 1.0 + s, -1.0);
}

cplx mellin_exp_incgamma_pfaff(cplx s, Weight k) {
    check_mellin_poles(s, k);
    const double kv = k.value();
    cplx b = s + (kv - 1.0);
    return std::exp(-s * std::log(2.0)) * gamma_fn(b) / s * hyp2f1(b, s, 1.0 + s, 0.5);
}

ComplexValue mellin_exp_incgamma_quad(cplx s, Weight k, double tol) {
    const double kv = k.value();
    if (s.real() <= 0 || s.real() + kv - 1.0 <= 0)
        fail(Status::domain, "direct Mellin quadrature needs Re s > 0 and Re(s+k-1) > 0");
    auto f = [&](double t) -> cplx {
        // e^t Gamma(k-1, 2t) = e^{-t} * [e^{2t} Gamma(k-1, 2t)]
        cplx g = inc_gamma_upper_scaled(kv - 1.0, 2.0 * t);
        return std::exp(-t) * g * std::exp((s - 1.0) * std::log(t));
    };
    QuadResult r = integrate_halfline_log(f, tol);
    require_converged(r, tol, "Mellin transform of e^t Gamma(k-1, 2t)");
    return {r.value, r.err};
}

}  // namespace qmf
