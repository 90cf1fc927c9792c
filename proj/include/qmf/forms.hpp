#pragma once

/**
 * Half-integral weight cusp forms: eta quotients, unary theta series and raw
 * coefficient lists. Evaluation anywhere in the upper half-plane uses the q-series
 * when Im(tau) >= 0.5 and otherwise transports eta values from the fundamental
 * domain with the exact eta multiplier.
 *
 * Points are carried as base + offset with an exact rational base, so that values
 * close to a cusp d/c keep full relative accuracy.
 */

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qmf/arith.hpp"
#include "qmf/specfun.hpp"

namespace qmf {

struct Point {
    Rational base;
    cplx offset;

    cplx value() const { return base.value() + offset; }
    double imag() const { return offset.imag(); }
    // e(n * base) * exp(2 pi i n offset)
    cplx q_power(long long n) const;
};

struct EtaFactor {
    long long m = 1;  // eta(m tau)
    int r = 1;        // exponent
};

// a(j^2) = values[j mod modulus] * j^power for j >= 1, zero off the squares.
struct ThetaRule {
    int modulus = 1;
    std::vector<long long> values;
    int power = 0;

    long long psi(long long j) const { return values[static_cast<size_t>(j % modulus)]; }
};

struct CuspFormSpec {
    enum class Kind { eta_quotient, unary_theta, raw };

    Kind kind = Kind::raw;
    std::vector<EtaFactor> factors;
    ThetaRule theta;
    std::vector<cplx> raw;  // a(1), a(2), ...
    Weight weight;
    long long level = 4;
    long long character = 1;  // Nebentypus d -> kronecker(character, d); 0 = infer (eta quotients)
    double scale = 1.0;       // constant factor (eta quotients only)
    bool require_cuspidal = true;

    static CuspFormSpec eta_quotient(std::vector<EtaFactor> f, Weight k, long long N, long long chi = 0);
    static CuspFormSpec unary_theta(ThetaRule t, Weight k, long long N, long long chi = 0);
    static CuspFormSpec raw_coefficients(std::vector<cplx> a, Weight k, long long N);
};

// gamma * tau = tau_reduced lies in the standard fundamental domain, with
//   eta(gamma tau) = exp(pi i * eta_phase) * (-i j)^{1/2} * eta(tau),  j = c tau + d   (c > 0)
//   eta(tau + b)   = exp(pi i * eta_phase) * eta(tau)                                   (c = 0)
struct ReductionResult {
    GroupElement gamma;
    cplx tau_reduced;
    cplx j;
    Rational eta_phase;
};

ReductionResult reduce(const Point& tau);
inline ReductionResult reduce(cplx tau) { return reduce(Point{Rational(0), tau}); }
cplx log_eta(const Point& tau);

// Bound model for a weight sequence g(n): |g(n)| <= K n^p exp(-2 pi y n) for n >= n_from.
struct SeriesBound {
    double K = 1.0;
    double p = 0.0;
    double y = 1.0;
    long long n_from = 1;
};

class CuspForm {
public:
    explicit CuspForm(CuspFormSpec spec);

    const CuspFormSpec& spec() const { return spec_; }
    Weight weight() const { return spec_.weight; }
    long long level() const { return spec_.level; }
    bool is_zero() const { return zero_; }
    long long character_discriminant() const { return character_; }
    int character(long long d) const { return kronecker(character_, d); }
    bool real_coefficients() const;
    // A transformation law is available (eta quotient, or theta series matched to one).
    bool near_real_supported() const { return zero_ || !eta_.empty(); }
    const std::optional<ThetaRule>& theta() const { return theta_; }
    const std::vector<EtaFactor>& eta_factors() const { return eta_; }

    cplx coefficient(long long n) const;
    std::vector<cplx> coefficients(long long M) const;
    // Exact integer coefficients a(1..M); Status::unsupported for raw forms or non-unit scale.
    std::vector<long long> integer_coefficients(long long M) const;
    // |a(n)| <= C n^alpha
    double bound_constant() const { return bound_c_; }
    double bound_exponent() const { return bound_alpha_; }

    // sum_n a(n) w(n), truncated by the tail bound to total error tol.
    ComplexValue sum_series(const std::function<cplx(long long)>& w, const SeriesBound& b, double tol) const;
    // Direct q-series sum_n a(n) n^power q^n.
    ComplexValue series(const Point& tau, double tol, double power = 0.0) const;

    ComplexValue evaluate(const Point& tau, double tol) const;
    ComplexValue evaluate(cplx tau, double tol) const { return evaluate(Point{Rational(0), tau}, tol); }
    // log f(tau) through the eta transformation law.
    cplx log_value(const Point& tau) const;

    // (f|_k W_N)(tau) = (-i sqrt(N) tau)^{-k} f(-1/(N tau))
    ComplexValue fricke(cplx tau, double tol) const;
    // Closed-form image under W_N (again an eta quotient).
    CuspForm fricke_image() const;

private:
    CuspFormSpec spec_;
    bool zero_ = false;
    long long character_ = 1;
    std::vector<EtaFactor> eta_;  // transformation-law representation, if any
    double eta_scale_ = 1.0;
    long long eta_offset_ = 0;
    std::optional<ThetaRule> theta_;
    double bound_c_ = 0.0;
    double bound_alpha_ = 0.0;

    struct Cache {
        std::mutex mu;
        std::shared_ptr<const std::vector<long long>> coeffs;  // a(1..size)
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
    std::shared_ptr<const std::vector<long long>> coefficients_upto(long long M) const;
};

// Expansion of prod eta(m_i tau)^{r_i} as exact integers a(1..M).
std::vector<long long> eta_quotient_coefficients(const std::vector<EtaFactor>& f, long long M);

// Discriminant D of the quadratic character d -> (D/d) of an eta quotient (or matched theta series).
long long infer_character(const CuspForm& f);

// Order of vanishing condition at every cusp of Gamma_0(N) (Ligozat).
bool eta_quotient_is_cuspidal(const std::vector<EtaFactor>& f, long long N);

inline constexpr long long kMaxSeriesTerms = 400000;

}  // namespace qmf
