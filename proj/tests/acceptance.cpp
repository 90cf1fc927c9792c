// Acceptance harness: one line per criterion, exit status 0 iff every selected criterion passes.
// usage: acceptance [criterion ...]   (default: all nine)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qmf/eichler.hpp"
#include "qmf/lfunc.hpp"
#include "qmf/quantum.hpp"
#include "qmf/verify.hpp"

using namespace qmf;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned thresholds and runtime budgets (seconds).
constexpr double kVanishingTol = 1e-7, kVanishingBudget = 60;
constexpr double kCircleRadius = 0.05;
constexpr int kCircleNodes = 32;
constexpr double kCircleRelTol = 1e-10;
constexpr double kFunctionalTol = 1e-8, kFunctionalBudget = 30;
constexpr double kExponentMin = 3.75, kAsymptoticBudget = 120;
constexpr int kExpansionOrder = 4;
constexpr double kTheoremTol = 1e-6, kTheoremBudget = 120;
constexpr double kFstarTol = 1e-8, kFstarBudget = 30;
constexpr double kMellinTol = 1e-9, kBetaTol = 1e-10, kPfaffTol = 1e-10, kSpecfunBudget = 10;
constexpr double kQRouteTol = 1e-5, kQRouteBudget = 60;
constexpr double kStrangeTol = 1e-12, kStrangeBudget = 1;
constexpr double kModularityTol = 1e-9, kModularityBudget = 30;

struct Fixture {
    const char* name;
    CuspForm form;
};

std::vector<Fixture> fixtures() {
    return {
        {"eta(24t)", CuspForm(CuspFormSpec::eta_quotient({{24, 1}}, Weight{1}, 576))},
        {"eta(8t)^3", CuspForm(CuspFormSpec::eta_quotient({{8, 3}}, Weight{3}, 64))},
    };
}

// Largest residual (or smallest exponent) seen, with where it happened.
struct Worst {
    bool at_least = false;
    double value = 0.0;
    std::string where;
    bool any = false;

    void see(double v, const std::string& w) {
        if (std::isnan(v)) v = at_least ? -INFINITY : INFINITY;
        bool worse = at_least ? v < value : v > value;
        if (!any || worse) {
            value = v;
            where = w;
            any = true;
        }
    }
};

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome bound(const Worst& w, double thr) {
    bool ok = w.at_least ? w.value >= thr : w.value <= thr;
    char buf[256];
    std::snprintf(buf, sizeof buf, "worst %.3g %s %.3g at %s", w.value, w.at_least ? ">=" : "<=", thr, w.where.c_str());
    return {ok, buf};
}

Outcome merge(std::vector<Outcome> parts) {
    Outcome o;
    for (size_t i = 0; i < parts.size(); ++i) {
        o.passed = o.passed && parts[i].passed;
        o.detail += (i ? "; " : "") + parts[i].detail;
    }
    return o;
}

std::string cs(cplx s) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g%+gi", s.real(), s.imag());
    return buf;
}

// Mean of L(s) = (2 pi)^s Gamma(s)^{-1} I(s) over a circle about s0, which equals L(s0) for entire L,
// relative to the largest |L| on the circle.
double circle_mean(const CuspForm& f, const Rational& x, int s0) {
    cplx sum = 0.0;
    double scale = 0.0;
    for (int j = 0; j < kCircleNodes; ++j) {
        cplx s = double(s0) + std::polar(kCircleRadius, 2 * kPi * (j + 0.5) / kCircleNodes);
        cplx I = mellin_integral_relative(f, x, s, 1e-14).value;
        cplx L = std::exp(s * std::log(2 * kPi)) * rgamma(s) * I;
        scale = std::max(scale, std::abs(L));
        sum += L;
    }
    return std::abs(sum) / double(kCircleNodes) / scale;
}

Outcome c1_vanishing() {
    Worst w, circle;
    for (const auto& fx : fixtures())
        for (const Rational& x : vanishing_twists())
            for (int m = 0; m <= 5; ++m) {
                std::string at = std::string(fx.name) + " L(" + x.str() + "; -" + std::to_string(m) + ")";
                LValue v = l_twisted(fx.form, x, cplx(-m), 1e-12);
                w.see(std::abs(v.value), at);
                // mean over a circle around -m, none of whose nodes is a zero of 1/Gamma
                circle.see(circle_mean(fx.form, x, -m), at);
            }
    Outcome c = bound(circle, kCircleRelTol);
    c.detail = "relative circle mean " + c.detail;
    return merge({bound(w, kVanishingTol), c});
}

Outcome c2_functional() {
    Worst w;
    for (const auto& fx : fixtures()) {
        CuspForm g = fx.form.fricke_image();
        double k = fx.form.weight().value();
        for (cplx s : functional_grid(fx.form)) {
            cplx lhs = lambda_completed(fx.form, s, 1e-12).value;
            cplx rhs = lambda_mellin(g, k - s, 1e-12).value;
            w.see(std::abs(lhs - rhs), std::string(fx.name) + " s=" + cs(s));
        }
    }
    return bound(w, kFunctionalTol);
}

Worst exponents(const std::vector<double>& grid) {
    Worst w{true};
    for (const auto& fx : fixtures())
        for (const Rational& x : asymptotic_points()) {
            AgreementReport r = expansion_agreement_check(fx.form, x, grid, kExpansionOrder, 1e-14);
            w.see(r.exponent_upper, std::string(fx.name) + " f~ at " + x.str());
            w.see(r.exponent_lower, std::string(fx.name) + " f* at " + x.str());
        }
    return w;
}

Outcome c3_asymptotic() {
    Outcome o = bound(exponents({0.2, 0.1, 0.05, 0.025}), kExponentMin);
    // informational: the same fit closer to the cusp
    Worst fine = exponents({4e-3, 2e-3, 1e-3, 5e-4});
    char buf[160];
    std::snprintf(buf, sizeof buf, " [t in {4e-3..5e-4}: worst %.3g at %s]", fine.value, fine.where.c_str());
    o.detail += buf;
    return o;
}

Outcome c4_theorem() {
    Worst w;
    for (const auto& fx : fixtures())
        for (const auto& [g, x] : theorem_pairs(fx.form)) {
            ModularityResidual r = modularity_residual(fx.form, g, x, 1e-12);
            w.see(std::abs(r.residual), std::string(fx.name) + " g=(" + g.str() + ") x=" + x.str());
        }
    return bound(w, kTheoremTol);
}

Outcome c5_fstar() {
    Worst w;
    for (const auto& fx : fixtures())
        for (const Rational& x : {Rational(0), Rational(1, 3), Rational(2, 5)})
            for (double v : {0.01, 0.03, 0.3}) {
                Point tau{x, cplx(0.0, -v)};
                cplx a = f_star_series(fx.form, tau, 1e-14).value;
                cplx b = f_star_integral(fx.form, tau, 1e-12).value;
                w.see(std::abs(a - b), std::string(fx.name) + " " + x.str() + "-" + std::to_string(v) + "i");
            }
    return bound(w, kFstarTol);
}

Outcome c6_specfun() {
    const Weight k12{1}, k32{3}, k52{5};
    Worst mellin, one, zero, pfaff;
    struct P {
        cplx s;
        Weight k;
    };
    for (P p : {P{1.0, k32}, P{2.0, k32}, P{0.5, k52}, P{cplx(1, 2), k32}, P{cplx(2.5, 10), k52}, P{cplx(1.2, 0.3), k12}})
        mellin.see(std::abs(mellin_exp_incgamma(p.s, p.k) - mellin_exp_incgamma_quad(p.s, p.k, 1e-12).value),
                   "s=" + cs(p.s) + " k=" + p.k.str());
    for (Weight k : {k12, k32, k52})
        for (int n = 0; n <= 5; ++n) {
            double b = 2.0 - k.value() + n;
            one.see(std::abs(reg_beta(0.5, -double(n), b) - 1.0), "n=" + std::to_string(n) + " k=" + k.str());
            zero.see(std::abs(reg_beta(0.5, b, -double(n))), "n=" + std::to_string(n) + " k=" + k.str());
        }
    for (Weight k : {k12, k32, k52})
        for (cplx s : {cplx(0.75), cplx(2.0), cplx(1.0, 1.0)})
            pfaff.see(std::abs(mellin_exp_incgamma_at_minus_one(s, k) - mellin_exp_incgamma_pfaff(s, k)),
                      "s=" + cs(s) + " k=" + k.str());
    Outcome a = bound(mellin, kMellinTol), b = bound(one, kBetaTol), c = bound(zero, kBetaTol), d = bound(pfaff, kPfaffTol);
    a.detail = "Mellin " + a.detail;
    b.detail = "I=1 " + b.detail;
    c.detail = "I=0 " + c.detail;
    d.detail = "Pfaff " + d.detail;
    return merge({a, b, c, d});
}

Outcome c7_qroute() {
    Worst w;
    for (const auto& fx : fixtures())
        for (const Rational& x : vanishing_twists()) {
            cplx q = q_value(fx.form, x, 1e-12).value;
            cplx r = radial_limit(fx.form, x, true, 2e-5, 7, 1e-15).value;
            w.see(std::abs(q - r), std::string(fx.name) + " Q(" + x.str() + ")");
        }
    return bound(w, kQRouteTol);
}

Outcome c8_strange() {
    Outcome exact;
    cplx f1 = strange_function(Rational(0)).value, fm1 = strange_function(Rational(1, 2)).value;
    exact.passed = f1 == cplx(1.0) && fm1 == cplx(3.0);
    exact.detail = std::string("F(1) = 1 ") + (f1 == cplx(1.0) ? "exact" : "NOT exact") + ", F(-1) = 3 " +
                   (fm1 == cplx(3.0) ? "exact" : "NOT exact");
    Worst w;
    for (long long b = 1; b <= 12; ++b)
        for (long long a = 0; a < b; ++a) {
            if (gcd_ll(a, b) != 1) continue;
            // (zeta; zeta)_n as a running product in long double; it vanishes from n = b on
            std::complex<long double> sum = 0.0L, p = 1.0L;
            for (long long n = 0; n <= b; ++n) {
                if (n > 0) {
                    long double th = 2.0L * std::numbers::pi_v<long double> * (long double)(a * n % b) / (long double)b;
                    p *= std::complex<long double>(1.0L - std::cos(th), -std::sin(th));
                }
                sum += p;
            }
            cplx oracle(double(sum.real()), double(sum.imag()));
            w.see(std::abs(strange_function(Rational(a, b)).value - oracle), "e(" + std::to_string(a) + "/" + std::to_string(b) + ")");
        }
    return merge({exact, bound(w, kStrangeTol)});
}

Outcome c9_modularity() {
    Worst w;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.02, 0.2);
    for (const auto& fx : fixtures())
        for (const GroupElement& g : random_gamma0(fx.form.level(), 10, 20240611)) {
            for (int i = 0; i < 3; ++i) {
                cplx tau(ux(rng), uy(rng));
                Automorphy a = automorphy(g, tau, fx.form.weight(), fx.form.level());
                cplx j = double(g.c) * tau + double(g.d);
                Point image{Rational(g.a, g.c), -1.0 / (double(g.c) * j)};
                cplx lhs = fx.form.evaluate(image, 1e-15).value * a.factor.value;
                cplx rhs = double(fx.form.character(g.d)) * fx.form.series(Point{Rational(0), tau}, 1e-15).value;
                w.see(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), std::string(fx.name) + " g=(" + g.str() + ")");
            }
        }
    return bound(w, kModularityTol);
}

struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "L-values vanish at non-positive integers", kVanishingBudget, c1_vanishing},
        {2, "functional equation under W_N", kFunctionalBudget, c2_functional},
        {3, "asymptotic expansion decay exponents, M = 4", kAsymptoticBudget, c3_asymptotic},
        {4, "quantum modularity residual", kTheoremBudget, c4_theorem},
        {5, "f* series vs period integral", kFstarBudget, c5_fstar},
        {6, "special-function identities", kSpecfunBudget, c6_specfun},
        {7, "Q_f vs radial limit of f~", kQRouteBudget, c7_qroute},
        {8, "strange function at roots of unity", kStrangeBudget, c8_strange},
        {9, "modularity of the fixtures", kModularityBudget, c9_modularity},
    };
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        long v = std::strtol(argv[i], &end, 10);
        if (*end || v < 1 || v > 9) {
            std::fprintf(stderr, "usage: acceptance [1-9 ...]\n");
            return 2;
        }
        pick.push_back(int(v));
    }
    if (pick.empty())
        for (const auto& c : all) pick.push_back(c.id);

    bool ok = true;
    for (int id : pick) {
        const Criterion& c = all[size_t(id - 1)];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.budget;
        bool pass = o.passed && in_time;
        ok = ok && pass;
        std::printf("criterion %d %s: %s (%s; %.2fs of %.0fs)\n", c.id, c.title, pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs, c.budget);
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
