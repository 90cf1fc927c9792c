#pragma once

// Trapezoid quadrature on the real line for integrands that decay at least
// exponentially in the integration variable, with automatic range detection and
// step halving. Used through the log and exp-sinh substitutions below.

#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <string>
#include <vector>

#include "qmf/error.hpp"

namespace qmf {

struct QuadResult {
    std::complex<double> value;
    double err = 0.0;
    int evals = 0;
    bool converged = false;
};

struct QuadOptions {
    double lo_limit = -700.0;
    double hi_limit = 60.0;
    double step = 0.25;
    double cutoff = 1e-18;  // relative to the peak sample
    int quiet_run = 8;      // consecutive sub-cutoff samples that end the scan
    int max_halvings = 9;
};

namespace detail {

template <class G>
void scan_direction(G& g, double start, double step, double limit, double cutoff, int quiet_run,
                    std::deque<std::pair<double, std::complex<double>>>& out, bool forward,
                    double& peak, int& evals) {
    int quiet = 0;
    for (double u = start; forward ? u <= limit : u >= limit; u += forward ? step : -step) {
        std::complex<double> v = g(u);
        ++evals;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(Status::convergence, "non-finite integrand sample");
        double a = std::abs(v);
        if (a > peak) peak = a;
        if (forward)
            out.emplace_back(u, v);
        else
            out.emplace_front(u, v);
        quiet = (a <= cutoff * peak) ? quiet + 1 : 0;
        if (quiet >= quiet_run) return;
    }
}

}  // namespace detail

// Integral of g over the real line. g must be smooth and decay at both ends.
template <class G>
QuadResult integrate_line(G g, double abs_tol, const QuadOptions& opt = {}) {
    std::deque<std::pair<double, std::complex<double>>> samples;
    double peak = 0.0;
    int evals = 0;
    detail::scan_direction(g, 0.0, opt.step, opt.hi_limit, opt.cutoff, opt.quiet_run, samples, true,
                           peak, evals);
    detail::scan_direction(g, -opt.step, opt.step, opt.lo_limit, opt.cutoff, opt.quiet_run, samples,
                           false, peak, evals);
    QuadResult res;
    res.evals = evals;
    if (peak == 0.0) {
        res.converged = true;
        return res;
    }
    double thr = opt.cutoff * peak;
    size_t i0 = 0, i1 = samples.size() - 1;
    while (i0 < samples.size() && std::abs(samples[i0].second) <= thr) ++i0;
    while (i1 > 0 && std::abs(samples[i1].second) <= thr) --i1;
    i0 = i0 > 0 ? i0 - 1 : 0;
    i1 = std::min(i1 + 1, samples.size() - 1);
    const bool open_lo = std::abs(samples.front().second) > thr && samples.front().first <= opt.lo_limit;
    const bool open_hi = std::abs(samples.back().second) > thr && samples.back().first >= opt.hi_limit;

    double a = samples[i0].first, b = samples[i1].first;
    double h = opt.step;
    std::complex<double> sum = 0.0;
    double abs_sum = 0.0;
    for (size_t i = i0; i <= i1; ++i) {
        sum += samples[i].second;
        abs_sum += std::abs(samples[i].second);
    }
    std::complex<double> t_old = h * sum;
    int n_old = static_cast<int>(i1 - i0);
    for (int level = 1; level <= opt.max_halvings; ++level) {
        std::complex<double> mid = 0.0;
        for (int j = 0; j < n_old; ++j) {
            std::complex<double> v = g(a + (j + 0.5) * h);
            mid += v;
            abs_sum += std::abs(v);
        }
        res.evals += n_old;
        sum += mid;
        h *= 0.5;
        n_old *= 2;
        std::complex<double> t_new = h * sum;
        double diff = std::abs(t_new - t_old);
        double floor = 4e-16 * h * abs_sum;
        t_old = t_new;
        if (level >= 2 && diff <= std::max(abs_tol / 4.0, floor)) {
            res.value = t_new;
            res.err = diff + floor;
            res.converged = !(open_lo || open_hi);
            if (!res.converged) res.err = std::max(res.err, thr * (b - a));
            return res;
        }
        res.err = diff + floor;
    }
    res.value = t_old;
    res.converged = false;
    return res;
}

// int_0^inf g(y) dy via y = e^u.
template <class F>
QuadResult integrate_halfline_log(F f, double abs_tol, const QuadOptions& opt = {}) {
    auto g = [&](double u) {
        double y = std::exp(u);
        return f(y) * y;
    };
    return integrate_line(g, abs_tol, opt);
}

// int_a^inf g(x) dx via x = a + exp(pi/2 sinh t).
template <class F>
QuadResult integrate_expsinh(F f, double a, double abs_tol) {
    QuadOptions opt;
    opt.lo_limit = -6.5;
    opt.hi_limit = 6.5;
    opt.step = 0.125;
    opt.cutoff = 1e-20;
    auto g = [&](double t) {
        double e = std::exp(0.5 * std::numbers::pi * std::sinh(t));
        if (e == 0.0 || !std::isfinite(e)) return std::complex<double>(0.0);
        return f(a + e) * (e * 0.5 * std::numbers::pi * std::cosh(t));
    };
    return integrate_line(g, abs_tol, opt);
}

inline void require_converged(const QuadResult& r, double tol, const std::string& what) {
    if (!r.converged || r.err > tol)
        fail(Status::convergence, what + ": quadrature did not reach tolerance (achieved error " +
                                      std::to_string(r.err) + ")");
}

}  // namespace qmf
