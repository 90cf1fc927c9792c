#pragma once

/**
 * Named verification suites. Each suite runs a fixed set of numeric checks with pinned
 * thresholds and reports one row per check.
 *
 *   vanishing   L(e(d/c); -m) = 0,                    d/c in {0, 1/2, 1/3, 2/5, 1/7}, m = 0..5
 *   functional  Lambda_f(s) = Lambda_{f|W_N}(k - s),  6 points
 *   asymptotic  residual decay exponents of f~ and f* against the L-value expansion, M = 4
 *   theorem     Q(x) - chi(d) chi_{-4}(d) mu_{2-k}(g, x) Q(gx) - r_g(x),  4 pairs
 *   fstar       incomplete-gamma series against the period integral, 3 x 3 grid
 *   specfun     Mellin transform routes and regularized beta identities
 *   qroute      Q(d/c) against the extrapolated radial limit of f~, 5 rationals
 *   strange     Kontsevich's F at roots of unity of order <= 12
 *   modularity  f|_k g = chi(d) f for 10 pseudo-random g in Gamma_0(N)
 */

#include <optional>
#include <string>
#include <vector>

#include "qmf/forms.hpp"

namespace qmf {

struct SuiteCheck {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool at_least = false;  // pass when value >= threshold instead of <=
    bool passed = false;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool passed = true;
    double seconds = 0.0;
};

struct VerifyOptions {
    double tol = 1e-12;
    std::optional<std::vector<double>> t_grid;  // asymptotic suite; default {0.2, 0.1, 0.05, 0.025}
    unsigned long long seed = 20240611;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite_name(const std::string& name);    // includes "all"

// Status::invalid_argument for an unknown name.
SuiteReport run_suite(const CuspForm& f, const std::string& name, const VerifyOptions& opt = {});

// Points used by the suites, exposed for the acceptance harness.
std::vector<Rational> vanishing_twists();
std::vector<cplx> functional_grid(const CuspForm& f);
std::vector<Rational> asymptotic_points();
std::vector<std::pair<GroupElement, Rational>> theorem_pairs(const CuspForm& f);
std::vector<GroupElement> random_gamma0(long long N, int count, unsigned long long seed);

}  // namespace qmf
