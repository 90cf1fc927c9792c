#include "qmf/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "qmf/eichler.hpp"
#include "qmf/lfunc.hpp"
#include "qmf/quantum.hpp"

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string cstr(cplx s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g%+gi", s.real(), s.imag());
    return buf;
}

struct Collector {
    SuiteReport& rep;
    std::string suite;

    void le(const std::string& name, double v, double thr) { add(name, v, thr, false); }
    void ge(const std::string& name, double v, double thr) { add(name, v, thr, true); }
    void add(const std::string& name, double v, double thr, bool at_least) {
        SuiteCheck c{suite, name, v, thr, at_least, at_least ? (v >= thr) : (v <= thr)};
        if (!c.passed) rep.passed = false;
        rep.checks.push_back(c);
    }
};

void suite_vanishing(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    for (const Rational& x : vanishing_twists()) {
        VanishingReport r = l_vanishing_check(f, x, 5, std::min(opt.tol, 1e-7));
        for (size_t m = 0; m < r.abs_values.size(); ++m) {
            double v = std::isfinite(r.integral_sizes[m]) ? r.abs_values[m] : INFINITY;
            out.le("|L(" + x.str() + "; -" + std::to_string(m) + ")|", v, 1e-7);
        }
    }
}

void suite_functional(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    auto grid = functional_grid(f);
    FunctionalEquationReport r = functional_equation_residual(f, grid, 1e-8, opt.tol);
    for (size_t i = 0; i < r.s.size(); ++i) out.le("Lambda residual at s=" + cstr(r.s[i]), r.residual[i], 1e-8);
}

void suite_asymptotic(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    std::vector<double> grid = opt.t_grid.value_or(std::vector<double>{0.2, 0.1, 0.05, 0.025});
    const int M = 4;
    for (const Rational& x : asymptotic_points()) {
        AgreementReport r = expansion_agreement_check(f, x, grid, M, std::min(opt.tol, 1e-14));
        out.ge("upper exponent at " + x.str(), r.exponent_upper, M - 0.25);
        out.ge("lower exponent at " + x.str(), r.exponent_lower, M - 0.25);
    }
}

void suite_theorem(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    for (const auto& [g, x] : theorem_pairs(f)) {
        ModularityResidual r = modularity_residual(f, g, x, opt.tol);
        out.le("residual g=(" + g.str() + ") x=" + x.str(), std::abs(r.residual), 1e-6);
    }
}

void suite_fstar(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    for (const Rational& x : {Rational(0), Rational(1, 3), Rational(2, 5)})
        for (double v : {0.05 / (2 * kPi), 0.03, 0.3}) {
            Point tau{x, cplx(0.0, -v)};
            cplx a = f_star_series(f, tau, std::min(opt.tol, 1e-14)).value;
            cplx b = f_star_integral(f, tau, opt.tol).value;
            char buf[96];
            std::snprintf(buf, sizeof buf, "series - integral at %s - %.6gi", x.str().c_str(), v);
            out.le(buf, std::abs(a - b), 1e-8);
        }
}

void suite_specfun(Collector& out) {
    const Weight k12{1}, k32{3}, k52{5};
    struct P {
        cplx s;
        Weight k;
    };
    for (P p : {P{1.0, k32}, P{2.0, k32}, P{0.5, k52}, P{cplx(1, 2), k32}, P{cplx(2.5, 10), k52}, P{cplx(1.2, 0.3), k12}}) {
        auto q = mellin_exp_incgamma_quad(p.s, p.k, 1e-12);
        out.le("Mellin closed form vs quadrature s=" + cstr(p.s) + " k=" + p.k.str(),
               std::abs(mellin_exp_incgamma(p.s, p.k) - q.value), 1e-9);
    }
    out.le("Mellin closed form vs z=-1 route s=2 k=3/2",
           std::abs(mellin_exp_incgamma(2.0, k32) - mellin_exp_incgamma_at_minus_one(2.0, k32)), 1e-10);
    for (Weight k : {k12, k32, k52})
        for (int n = 0; n <= 5; ++n) {
            double b = 2.0 - k.value() + n;
            out.le("I(1/2; -" + std::to_string(n) + ", 2-k+n) - 1, k=" + k.str(),
                   std::abs(reg_beta(0.5, -double(n), b) - 1.0), 1e-10);
            out.le("I(1/2; 2-k+n, -" + std::to_string(n) + "), k=" + k.str(), std::abs(reg_beta(0.5, b, -double(n))), 1e-10);
        }
    out.le("Pfaff route vs z=-1 route s=1/2 k=5/2",
           std::abs(mellin_exp_incgamma_at_minus_one(0.5, k52) - mellin_exp_incgamma_pfaff(0.5, k52)), 1e-10);
}

void suite_qroute(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    for (const Rational& x : vanishing_twists()) {
        cplx q = q_value(f, x, opt.tol).value;
        cplx r = radial_limit(f, x, true, 2e-5, 7, 1e-15).value;
        out.le("Q(" + x.str() + ") vs radial limit", std::abs(q - r), 1e-5);
    }
}

void suite_strange(Collector& out) {
    out.le("|F(1) - 1|", std::abs(strange_function(Rational(0)).value - 1.0), 0.0);
    out.le("|F(-1) - 3|", std::abs(strange_function(Rational(1, 2)).value - 3.0), 0.0);
    double worst = 0.0;
    for (long long b = 1; b <= 12; ++b)
        for (long long a = 0; a < b; ++a) {
            if (gcd_ll(a, b) != 1) continue;
            // direct product oracle over the first 2b terms; terms with n >= b vanish
            cplx sum = 0.0, p = 1.0;
            for (long long n = 0; n < 2 * b; ++n) {
                if (n > 0) p *= 1.0 - std::polar(1.0, 2.0 * kPi * double(a * n % b) / double(b));
                sum += p;
            }
            worst = std::max(worst, std::abs(strange_function(Rational(a, b)).value - sum));
        }
    out.le("max |F(e(a/b)) - product oracle|, b <= 12", worst, 1e-12);
}

void suite_modularity(const CuspForm& f, const VerifyOptions& opt, Collector& out) {
    if (f.is_zero()) {
        out.le("zero form", 0.0, 1e-9);
        return;
    }
    std::mt19937_64 rng(opt.seed ^ static_cast<unsigned long long>(f.level()));
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.02, 0.2);
    for (const GroupElement& g : random_gamma0(f.level(), 10, opt.seed)) {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            cplx tau(ux(rng), uy(rng));
            Automorphy a = automorphy(g, tau, f.weight(), f.level());
            // g tau = a/c - 1/(c (c tau + d)), kept exact in its cusp part
            cplx j = double(g.c) * tau + double(g.d);
            Point image{Rational(g.a, g.c), -1.0 / (double(g.c) * j)};
            cplx lhs = f.evaluate(image, 1e-15).value * a.factor.value;
            cplx rhs = double(f.character(g.d)) * f.series(Point{Rational(0), tau}, 1e-15).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
        out.le("slash residual g=(" + g.str() + ")", worst, 1e-9);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"vanishing", "functional", "asymptotic", "theorem", "fstar",
                                                   "specfun",   "qroute",     "strange",    "modularity"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<Rational> vanishing_twists() {
    return {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(1, 7)};
}

std::vector<cplx> functional_grid(const CuspForm& f) {
    const double k = f.weight().value();
    return {k / 2, cplx(k / 2, 1.0), 0.25, cplx(0.25, 2.0), 1.0, cplx(0.75, 1.0)};
}

std::vector<Rational> asymptotic_points() { return {Rational(0), Rational(1, 2), Rational(1, 3)}; }

std::vector<std::pair<GroupElement, Rational>> theorem_pairs(const CuspForm& f) {
    const long long N = f.level();
    return {
        {GroupElement{1, 0, N, 1}, Rational(1)},
        {GroupElement{1, -1, N, 1 - N}, Rational(1, 3)},
        {GroupElement{-1, 0, -N, -1}, Rational(2, 5)},
        {GroupElement{1, 1, 2 * N, 2 * N + 1}, Rational(-1, 2)},
    };
}

std::vector<GroupElement> random_gamma0(long long N, int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> uj(-3, 3), ud(-50, 50);
    std::vector<GroupElement> out;
    while (static_cast<int>(out.size()) < count) {
        long long j = uj(rng), d = ud(rng);
        if (j == 0) continue;
        long long c = N * j;
        if (gcd_ll(c, d) != 1) continue;
        long long a = 0, b = 0;
        // a d - b c = 1
        ext_gcd(d, -c, a, b);
        long long shift = ud(rng) / 10;
        a += shift * c;
        b += shift * d;
        GroupElement g{a, b, c, d};
        if (g.valid()) out.push_back(g);
    }
    return out;
}

SuiteReport run_suite(const CuspForm& f, const std::string& name, const VerifyOptions& opt) {
    if (!is_suite_name(name)) fail(Status::invalid_argument, "unknown suite '" + name + "'");
    SuiteReport rep;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> todo = name == "all" ? suite_names() : std::vector<std::string>{name};
    for (const auto& s : todo) {
        Collector c{rep, s};
        if (f.is_zero() && s != "specfun" && s != "strange") {
            c.le("zero form", 0.0, 0.0);
            continue;
        }
        if (s == "vanishing") suite_vanishing(f, opt, c);
        else if (s == "functional") suite_functional(f, opt, c);
        else if (s == "asymptotic") suite_asymptotic(f, opt, c);
        else if (s == "theorem") suite_theorem(f, opt, c);
        else if (s == "fstar") suite_fstar(f, opt, c);
        else if (s == "specfun") suite_specfun(c);
        else if (s == "qroute") suite_qroute(f, opt, c);
        else if (s == "strange") suite_strange(c);
        else if (s == "modularity") suite_modularity(f, opt, c);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qmf
