#include "qmf/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qmf {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// Generalized pentagonal numbers g with sign (-1)^k, g <= limit, excluding g = 0.
std::vector<std::pair<long long, int>> pentagonal(long long limit) {
    std::vector<std::pair<long long, int>> out;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > limit) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        out.emplace_back(g1, sign);
        if (g2 <= limit) out.emplace_back(g2, sign);
    }
    return out;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(Status::budget, "eta quotient coefficient overflow");
    return r;
}

bool snap_to_one(double& s) {
    if (std::abs(s - 1.0) < 1e-13) {
        s = 1.0;
        return true;
    }
    return false;
}

// log eta at a point of the fundamental domain (Im w > 0.85).
cplx log_eta_reduced(cplx w) {
    cplx q = std::exp(2.0 * kPi * kI * w);
    cplx sum = 1.0;
    if (std::abs(q) > 0.0) {
        for (long long k = 1; k <= 8; ++k) {
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            cplx t1 = std::pow(q, double(k * (3 * k - 1) / 2));
            cplx t2 = std::pow(q, double(k * (3 * k + 1) / 2));
            sum += sign * (t1 + t2);
            if (std::abs(t1) < 1e-18) break;
        }
    }
    return kPi * kI * w / 12.0 + std::log(sum);
}

double theta_value_bound(const ThetaRule& t) {
    double c = 0.0;
    for (long long v : t.values) c = std::max(c, std::abs(double(v)));
    return c;
}

std::optional<ThetaRule> detect_theta(const std::vector<long long>& a, int twice_k) {
    // a holds a(1..J^2)
    const long long J = static_cast<long long>(std::sqrt(double(a.size())));
    if (J < 40) return std::nullopt;
    for (size_t n = 1; n <= a.size(); ++n) {
        long long r = static_cast<long long>(std::llround(std::sqrt(double(n))));
        if (r * r != static_cast<long long>(n) && a[n - 1] != 0) return std::nullopt;
    }
    const int power = (twice_k - 1) / 2;
    if (power > 1) return std::nullopt;
    std::vector<long long> b(J + 1, 0);
    for (long long j = 1; j <= J; ++j) {
        long long v = a[j * j - 1];
        long long div = power == 1 ? j : 1;
        if (v % div != 0) return std::nullopt;
        b[j] = v / div;
    }
    for (int P = 1; P <= 24; ++P) {
        bool ok = true;
        for (long long j = 1; j + P <= J && ok; ++j) ok = b[j] == b[j + P];
        if (!ok) continue;
        ThetaRule t;
        t.modulus = P;
        t.power = power;
        t.values.assign(P, 0);
        for (long long j = 1; j <= P; ++j) t.values[j % P] = b[j];
        return t;
    }
    return std::nullopt;
}

void validate_eta(const std::vector<EtaFactor>& f, Weight k, long long N, bool require_cusp) {
    if (f.empty()) fail(Status::invalid_argument, "eta quotient needs at least one factor");
    long long sum_r = 0, sum_mr = 0, sum_nr = 0;
    for (const auto& e : f) {
        if (e.m < 1) fail(Status::invalid_argument, "eta factor multiplier must be positive");
        if (N % e.m != 0)
            fail(Status::invalid_argument, "eta factor multiplier " + std::to_string(e.m) + " does not divide the level");
        sum_r += e.r;
        sum_mr += e.m * e.r;
        sum_nr += (N / e.m) * e.r;
    }
    if (sum_r != k.twice) fail(Status::invalid_argument, "weight must equal half the sum of eta exponents");
    if (sum_mr % 24 != 0) fail(Status::invalid_argument, "sum of m*r must be divisible by 24");
    if (sum_nr % 24 != 0) fail(Status::invalid_argument, "sum of (N/m)*r must be divisible by 24");
    if (require_cusp && (sum_mr / 24 < 1 || !eta_quotient_is_cuspidal(f, N)))
        fail(Status::invalid_argument, "eta quotient is not cuspidal at level " + std::to_string(N));
}

const std::vector<std::vector<EtaFactor>>& known_theta_identities() {
    static const std::vector<std::vector<EtaFactor>> ids = {
        {{24, 1}},
        {{8, 3}},
    };
    return ids;
}

}  // namespace

// Quadratic character chi with f|_k g = chi(d) f on Gamma_0(N), found by testing the
// transformation law for a spread of d against candidate discriminants.
long long infer_character(const CuspForm& f) {
    const long long N = f.level();
    std::vector<long long> primes;
    {
        long long m = 6 * N;
        for (long long p = 3; p * p <= m; p += 2)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        while (m % 2 == 0) m /= 2;
        if (m > 1) primes.push_back(m);
    }
    std::vector<std::pair<long long, int>> signs;
    const cplx tau(0.137, 0.31);
    for (long long d = 1; signs.size() < 16 && d < 2000; d += 2) {
        for (long long dd : {d, -d}) {
            if (gcd_ll(dd, N) != 1) continue;
            long long a = 0, b = 0;
            ext_gcd(dd, -N, a, b);
            GroupElement g{a, b, N, dd};
            Automorphy au = automorphy(g, tau, f.weight(), N);
            cplx j = double(N) * tau + double(dd);
            Point image{Rational(a, N), -1.0 / (double(N) * j)};
            cplx ratio = f.evaluate(image, 1e-15).value * au.factor.value / f.evaluate(tau, 1e-15).value;
            int sg = std::abs(ratio - 1.0) < 1e-6 ? 1 : (std::abs(ratio + 1.0) < 1e-6 ? -1 : 0);
            if (sg == 0) fail(Status::invalid_argument, "eta quotient does not transform with a quadratic character on Gamma_0(N)");
            signs.emplace_back(dd, sg);
        }
    }
    const size_t np = primes.size();
    for (size_t mask = 0; mask < (size_t(1) << (np + 2)); ++mask) {
        long long D = (mask & 1) ? -1 : 1;
        if (mask & 2) D *= 2;
        for (size_t i = 0; i < np; ++i)
            if (mask & (size_t(4) << i)) D *= primes[i];
        bool ok = true;
        for (const auto& [d, sg] : signs) ok = ok && kronecker(D, d) == sg;
        if (ok) return D;
    }
    fail(Status::invalid_argument, "eta quotient character is not a quadratic character of conductor dividing 24N");
}

cplx Point::q_power(long long n) const {
    const long long Q = base.den();
    __int128 num = static_cast<__int128>(n % Q) * mod_floor(base.num(), Q) % Q;
    cplx ph = expi_2pi(Rational::from_reduced(0, 1) + Rational(static_cast<long long>(num), Q));
    return ph * std::exp(2.0 * kPi * kI * double(n) * offset);
}

CuspFormSpec CuspFormSpec::eta_quotient(std::vector<EtaFactor> f, Weight k, long long N, long long chi) {
    CuspFormSpec s;
    s.kind = Kind::eta_quotient;
    s.factors = std::move(f);
    s.weight = k;
    s.level = N;
    s.character = chi;
    return s;
}

CuspFormSpec CuspFormSpec::unary_theta(ThetaRule t, Weight k, long long N, long long chi) {
    CuspFormSpec s;
    s.kind = Kind::unary_theta;
    s.theta = std::move(t);
    s.weight = k;
    s.level = N;
    s.character = chi;
    return s;
}

CuspFormSpec CuspFormSpec::raw_coefficients(std::vector<cplx> a, Weight k, long long N) {
    CuspFormSpec s;
    s.kind = Kind::raw;
    s.raw = std::move(a);
    s.weight = k;
    s.level = N;
    return s;
}

std::vector<long long> eta_quotient_coefficients(const std::vector<EtaFactor>& f, long long M) {
    long long sum_mr = 0;
    for (const auto& e : f) sum_mr += e.m * e.r;
    if (sum_mr % 24 != 0) fail(Status::invalid_argument, "sum of m*r must be divisible by 24");
    const long long o = sum_mr / 24;
    std::vector<long long> out(std::max<long long>(M, 0), 0);
    const long long L = M - o;
    if (L < 0) return out;
    if (o < 0) fail(Status::unsupported, "eta quotient with a pole at infinity");
    std::vector<long long> A(L + 1, 0);
    A[0] = 1;
    for (const auto& e : f) {
        auto pent = pentagonal(L / e.m);
        for (int rep = 0; rep < std::abs(e.r); ++rep) {
            if (e.r > 0) {
                for (long long n = L; n >= 0; --n) {
                    long long acc = A[n];
                    for (const auto& [g, sg] : pent) {
                        long long idx = n - e.m * g;
                        if (idx < 0) break;
                        acc = checked_add(acc, sg > 0 ? A[idx] : -A[idx]);
                    }
                    A[n] = acc;
                }
            } else {
                for (long long n = 0; n <= L; ++n) {
                    long long acc = A[n];
                    for (const auto& [g, sg] : pent) {
                        long long idx = n - e.m * g;
                        if (idx < 0) break;
                        acc = checked_add(acc, sg > 0 ? -A[idx] : A[idx]);
                    }
                    A[n] = acc;
                }
            }
        }
    }
    for (long long n = std::max<long long>(o, 1); n <= M; ++n) out[n - 1] = A[n - o];
    return out;
}

bool eta_quotient_is_cuspidal(const std::vector<EtaFactor>& f, long long N) {
    long long L = 1;
    for (const auto& e : f) L = L / gcd_ll(L, e.m) * e.m;
    for (long long c = 1; c <= N; ++c) {
        if (N % c != 0) continue;
        long long s = 0;
        for (const auto& e : f) {
            long long g = gcd_ll(c, e.m);
            s += g * g * e.r * (L / e.m);
        }
        if (s <= 0) return false;
    }
    return true;
}

CuspForm::CuspForm(CuspFormSpec s) : spec_(std::move(s)) {
    const long long N = spec_.level;
    if (N < 4 || N % 4 != 0) fail(Status::invalid_argument, "level must be a positive multiple of 4");
    if (!spec_.weight.half_integral() || spec_.weight.twice < 1)
        fail(Status::invalid_argument, "weight must lie in 1/2 + N_0");
    const double k = spec_.weight.value();

    switch (spec_.kind) {
    case CuspFormSpec::Kind::eta_quotient: {
        validate_eta(spec_.factors, spec_.weight, N, spec_.require_cuspidal);
        if (!(spec_.scale != 0.0) || !std::isfinite(spec_.scale))
            fail(Status::invalid_argument, "eta quotient scale must be finite and nonzero");
        eta_ = spec_.factors;
        eta_scale_ = spec_.scale;
        for (const auto& e : eta_) eta_offset_ += e.m * e.r;
        eta_offset_ /= 24;
        bound_alpha_ = k / 2.0 + 1.0;
        auto a = eta_quotient_coefficients(eta_, 2601);
        if (eta_scale_ == 1.0) theta_ = detect_theta(a, spec_.weight.twice);
        if (theta_) {
            bound_c_ = theta_value_bound(*theta_);
            bound_alpha_ = theta_->power / 2.0;
        } else {
            double c = 0.0;
            for (size_t n = 1; n <= 500; ++n) c = std::max(c, std::abs(double(a[n - 1])) / std::pow(double(n), bound_alpha_));
            bound_c_ = 10.0 * c * std::abs(eta_scale_);
        }
        auto snap = std::make_shared<std::vector<long long>>(std::move(a));
        cache_->coeffs = snap;
        break;
    }
    case CuspFormSpec::Kind::unary_theta: {
        const ThetaRule& t = spec_.theta;
        if (t.modulus < 1 || static_cast<int>(t.values.size()) != t.modulus)
            fail(Status::invalid_argument, "theta values must list one value per residue class");
        if (t.power != 0 && t.power != 1) fail(Status::invalid_argument, "theta power must be 0 or 1");
        if (spec_.weight.twice != 2 * t.power + 1)
            fail(Status::invalid_argument, "theta series of power nu has weight nu + 1/2");
        theta_ = t;
        bound_c_ = theta_value_bound(t);
        bound_alpha_ = t.power / 2.0;
        zero_ = bound_c_ == 0.0;
        if (!zero_) {
            std::vector<long long> a(2601, 0);
            for (long long j = 1; j * j <= 2601; ++j) a[j * j - 1] = t.psi(j) * (t.power ? j : 1);
            for (const auto& cand : known_theta_identities()) {
                bool fits = true;
                for (const auto& e : cand) fits = fits && N % e.m == 0;
                long long sum_r = 0;
                for (const auto& e : cand) sum_r += e.r;
                if (!fits || sum_r != spec_.weight.twice) continue;
                if (eta_quotient_coefficients(cand, 2601) == a) {
                    eta_ = cand;
                    eta_offset_ = 1;
                    break;
                }
            }
        }
        break;
    }
    case CuspFormSpec::Kind::raw: {
        zero_ = std::all_of(spec_.raw.begin(), spec_.raw.end(), [](cplx v) { return v == cplx(0.0); });
        bound_alpha_ = k / 2.0 + 1.0;
        double c = 0.0;
        for (size_t n = 1; n <= spec_.raw.size(); ++n)
            c = std::max(c, std::abs(spec_.raw[n - 1]) / std::pow(double(n), bound_alpha_));
        bound_c_ = c;
        break;
    }
    }
    character_ = spec_.character;
    if (character_ == 0) {
        if (spec_.kind == CuspFormSpec::Kind::raw || zero_ || eta_.empty()) {
            character_ = 1;
        } else {
            character_ = infer_character(*this);
        }
    }
}

bool CuspForm::real_coefficients() const {
    if (spec_.kind != CuspFormSpec::Kind::raw) return true;
    return std::all_of(spec_.raw.begin(), spec_.raw.end(), [](cplx v) { return v.imag() == 0.0; });
}

std::shared_ptr<const std::vector<long long>> CuspForm::coefficients_upto(long long M) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->coeffs && static_cast<long long>(cache_->coeffs->size()) >= M) return cache_->coeffs;
    if (M > kMaxSeriesTerms)
        fail(Status::budget, "series needs more than " + std::to_string(kMaxSeriesTerms) + " coefficients");
    long long have = cache_->coeffs ? static_cast<long long>(cache_->coeffs->size()) : 0;
    long long want = std::min(kMaxSeriesTerms, std::max(M, 2 * have));
    cache_->coeffs = std::make_shared<std::vector<long long>>(eta_quotient_coefficients(eta_, want));
    return cache_->coeffs;
}

cplx CuspForm::coefficient(long long n) const {
    if (n < 1 || zero_) return 0.0;
    if (theta_) {
        long long j = static_cast<long long>(std::llround(std::sqrt(double(n))));
        if (j * j != n) return 0.0;
        return double(theta_->psi(j)) * (theta_->power ? double(j) : 1.0) * eta_scale_;
    }
    if (spec_.kind == CuspFormSpec::Kind::raw)
        return n <= static_cast<long long>(spec_.raw.size()) ? spec_.raw[n - 1] : cplx(0.0);
    auto c = coefficients_upto(n);
    return double((*c)[n - 1]) * eta_scale_;
}

std::vector<cplx> CuspForm::coefficients(long long M) const {
    std::vector<cplx> out(std::max<long long>(M, 0));
    if (spec_.kind == CuspFormSpec::Kind::eta_quotient && !theta_ && M > 0) {
        auto c = coefficients_upto(M);
        for (long long n = 1; n <= M; ++n) out[n - 1] = double((*c)[n - 1]) * eta_scale_;
        return out;
    }
    for (long long n = 1; n <= M; ++n) out[n - 1] = coefficient(n);
    return out;
}

std::vector<long long> CuspForm::integer_coefficients(long long M) const {
    if (spec_.kind == CuspFormSpec::Kind::raw) {
        std::vector<long long> out(std::max<long long>(M, 0), 0);
        for (long long n = 1; n <= M; ++n) {
            cplx v = coefficient(n);
            if (v.imag() != 0.0 || v.real() != std::round(v.real()))
                fail(Status::unsupported, "raw coefficients are not integers");
            out[n - 1] = static_cast<long long>(v.real());
        }
        return out;
    }
    if (eta_scale_ != 1.0) fail(Status::unsupported, "scaled eta quotient has non-integer coefficients");
    if (spec_.kind == CuspFormSpec::Kind::eta_quotient) {
        auto c = coefficients_upto(M);
        return std::vector<long long>(c->begin(), c->begin() + M);
    }
    std::vector<long long> out(std::max<long long>(M, 0), 0);
    for (long long j = 1; j * j <= M; ++j) out[j * j - 1] = theta_->psi(j) * (theta_->power ? j : 1);
    return out;
}

namespace {

// Upper bound for sum_{j > J} s(j)^q exp(-2 pi y s(j)), s(j) = j or j^2; negative if not yet usable.
double tail_bound(long long J, bool squares, double q, double y) {
    auto s = [&](long long j) { return squares ? double(j) * double(j) : double(j); };
    const double s1 = s(J + 1), s2 = s(J + 2);
    double ratio = std::exp(-2.0 * kPi * y * (s2 - s1));
    if (q > 0) ratio *= std::pow(s2 / s1, q);
    if (ratio >= 1.0) return -1.0;
    double first = std::pow(s1, q) * std::exp(-2.0 * kPi * y * s1);
    return first / (1.0 - ratio);
}

}  // namespace

ComplexValue CuspForm::sum_series(const std::function<cplx(long long)>& w, const SeriesBound& b, double tol) const {
    if (zero_) return {0.0, 0.0};
    if (!(b.y > 0)) fail(Status::domain, "series needs exponential decay (y > 0)");
    cplx sum = 0.0;
    double abs_sum = 0.0;
    if (spec_.kind == CuspFormSpec::Kind::raw && !theta_) {
        for (size_t n = 1; n <= spec_.raw.size(); ++n) {
            if (spec_.raw[n - 1] == cplx(0.0)) continue;
            cplx t = spec_.raw[n - 1] * w(static_cast<long long>(n));
            sum += t;
            abs_sum += std::abs(t);
        }
        return {sum, 1e-16 * abs_sum * 4.0};
    }
    const double C = bound_c_ * b.K;
    if (theta_) {
        const double q = theta_->power / 2.0 + b.p;
        const double scale = eta_scale_;
        for (long long j = 1;; ++j) {
            long long n = j * j;
            long long psi = theta_->psi(j);
            if (psi != 0) {
                cplx t = double(psi) * (theta_->power ? double(j) : 1.0) * scale * w(n);
                sum += t;
                abs_sum += std::abs(t);
            }
            if (n >= b.n_from) {
                double tb = tail_bound(j, true, q, b.y);
                if (tb >= 0 && C * tb <= tol * 0.5) return {sum, C * tb + 4e-16 * abs_sum};
            }
            if (j > 20000000) fail(Status::budget, "theta series needs too many terms");
        }
    }
    const double q = bound_alpha_ + b.p;
    std::shared_ptr<const std::vector<long long>> coeffs = coefficients_upto(1024);
    for (long long n = 1;; ++n) {
        if (n > static_cast<long long>(coeffs->size())) coeffs = coefficients_upto(2 * n);
        long long a = (*coeffs)[n - 1];
        if (a != 0) {
            cplx t = double(a) * eta_scale_ * w(n);
            sum += t;
            abs_sum += std::abs(t);
        }
        if (n >= b.n_from && (n % 8 == 0 || n < 64)) {
            double tb = tail_bound(n, false, q, b.y);
            if (tb >= 0 && C * tb <= tol * 0.5) return {sum, C * tb + 4e-16 * abs_sum};
        }
    }
}

ComplexValue CuspForm::series(const Point& tau, double tol, double power) const {
    if (!(tau.imag() > 0)) fail(Status::domain, "q-series needs Im(tau) > 0");
    auto w = [&](long long n) { return (power == 0.0 ? 1.0 : std::pow(double(n), power)) * tau.q_power(n); };
    return sum_series(w, SeriesBound{1.0, power, tau.imag(), 1}, tol);
}

cplx CuspForm::log_value(const Point& tau) const {
    if (zero_) fail(Status::domain, "log of the zero form");
    if (eta_.empty()) fail(Status::unsupported, "transformation law unavailable for this form");
    cplx acc = std::log(cplx(eta_scale_));
    for (const auto& e : eta_) {
        Point p{Rational(e.m) * tau.base, double(e.m) * tau.offset};
        acc += double(e.r) * log_eta(p);
    }
    return acc;
}

ComplexValue CuspForm::evaluate(const Point& tau, double tol) const {
    if (!(tau.imag() > 0)) fail(Status::domain, "evaluation needs Im(tau) > 0");
    if (zero_) return {0.0, 0.0};
    if (tau.imag() >= 0.5) return series(tau, tol);
    if (eta_.empty()) fail(Status::unsupported, "transformation law unavailable: raw forms can only be evaluated for Im(tau) >= 0.5");
    cplx lg = log_value(tau);
    cplx v = std::exp(lg);
    double err = std::abs(v) * (1e-15 + 4e-16 * std::abs(lg));
    return {v, err};
}

ComplexValue CuspForm::fricke(cplx tau, double tol) const {
    if (!(tau.imag() > 0)) fail(Status::domain, "Fricke action needs Im(tau) > 0");
    if (zero_) return {0.0, 0.0};
    const double N = double(spec_.level);
    cplx factor = ppow(-kI * std::sqrt(N) * tau, -spec_.weight.value());
    ComplexValue f = evaluate(-1.0 / (N * tau), tol / std::max(1.0, std::abs(factor)));
    return {factor * f.value, std::abs(factor) * f.err};
}

CuspForm CuspForm::fricke_image() const {
    if (zero_) return *this;
    if (eta_.empty()) fail(Status::unsupported, "no closed-form Fricke image for this form");
    const long long N = spec_.level;
    const double k = spec_.weight.value();
    std::vector<EtaFactor> img;
    double log_scale = -0.5 * k * std::log(double(N));
    for (const auto& e : eta_) {
        img.push_back({N / e.m, e.r});
        log_scale += 0.5 * e.r * std::log(double(N / e.m));
    }
    double scale = eta_scale_ * std::exp(log_scale);
    snap_to_one(scale);
    CuspFormSpec s = CuspFormSpec::eta_quotient(img, spec_.weight, N, 0);
    s.scale = scale;
    s.require_cuspidal = spec_.require_cuspidal;
    return CuspForm(std::move(s));
}

ReductionResult reduce(const Point& tau) {
    if (!(tau.imag() > 0)) fail(Status::domain, "reduction needs Im(tau) > 0");
    const long long P = tau.base.num(), Q = tau.base.den();
    const cplx z = tau.offset;

    // lower rows (c, d) from the convergents of P/Q, plus (0, 1)
    long long bestc = 0, bestd = 1;
    double best = std::norm(cplx(1.0, 0.0));
    {
        long long h2 = 0, h1 = 1, k2 = 1, k1 = 0;
        long long p = P, q = Q;
        while (q != 0) {
            long long a = p / q;
            if ((p % q != 0) && ((p < 0) != (q < 0))) --a;
            long long h = a * h1 + h2, k = a * k1 + k2;
            h2 = h1;
            h1 = h;
            k2 = k1;
            k1 = k;
            long long r = p - a * q;
            p = q;
            q = r;
            long long c = k, d = -h;
            if (c == 0) continue;
            __int128 C = static_cast<__int128>(c) * P + static_cast<__int128>(d) * Q;
            double m = std::norm(double(C) / double(Q) + double(c) * z);
            if (m < best) {
                best = m;
                bestc = c;
                bestd = d;
            }
        }
    }
    long long x = 0, y = 0;
    ext_gcd(bestd, -bestc, x, y);
    GroupElement g1{x, y, bestc, bestd};

    auto image = [&](const GroupElement& g) {
        __int128 A = static_cast<__int128>(g.a) * P + static_cast<__int128>(g.b) * Q;
        __int128 C = static_cast<__int128>(g.c) * P + static_cast<__int128>(g.d) * Q;
        cplx num = double(A) + double(g.a) * double(Q) * z;
        cplx den = double(C) + double(g.c) * double(Q) * z;
        return std::pair<cplx, cplx>(num / den, den / double(Q));
    };

    cplx w = image(g1).first;
    GroupElement M;
    for (int it = 0; it < 2000; ++it) {
        double n = std::round(w.real());
        if (n != 0.0) {
            w -= n;
            M = GroupElement{1, -static_cast<long long>(n), 0, 1} * M;
        }
        if (std::norm(w) < 1.0 - 1e-13) {
            w = -1.0 / w;
            M = GroupElement{0, -1, 1, 0} * M;
        } else {
            break;
        }
    }
    GroupElement g = M * g1;
    if (g.c < 0 || (g.c == 0 && g.d < 0)) g = GroupElement{-g.a, -g.b, -g.c, -g.d};
    auto [tr, j] = image(g);
    Rational phase = g.c == 0 ? Rational(g.b, 12) : Rational(g.a + g.d, 12 * g.c) - dedekind_sum(g.d, g.c);
    return {g, tr, j, phase};
}

cplx log_eta(const Point& tau) {
    ReductionResult r = reduce(tau);
    Rational ph = r.eta_phase;
    // reduce the phase mod 2
    Rational two(2);
    long long k = (ph / two).floor();
    ph = ph - Rational(2 * k);
    cplx lg = log_eta_reduced(r.tau_reduced) - kPi * kI * ph.value();
    if (r.gamma.c != 0) lg -= 0.5 * plog(-kI * r.j);
    return lg;
}

}  // namespace qmf
