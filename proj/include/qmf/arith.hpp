#pragma once

/**
 * Exact integer and rational primitives: reduced rationals, Kronecker symbol,
 * the theta multiplier pieces (eps_d, (c/d)), SL2(Z) elements, Dedekind sums.
 */

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "qmf/error.hpp"

namespace qmf {

using cplx = std::complex<double>;

// Rational d/c in lowest terms, c >= 1. Arithmetic is overflow-checked.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(long long n, long long d);

    // Caller guarantees gcd(n, d) = 1 and d >= 1.
    static Rational from_reduced(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    // Accepts "p/q", "p" (surrounding blanks allowed). Throws Status::parse.
    static Rational parse(std::string_view text);
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const Rational& x, const Rational& y);

    // x - floor(x), in [0, 1)
    Rational frac() const;
    long long floor() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Half-integral or integral weight, stored as 2k.
struct Weight {
    int twice = 1;

    static Weight parse(std::string_view text);
    double value() const { return twice / 2.0; }
    bool half_integral() const { return twice % 2 != 0; }
    Weight dual() const { return Weight{4 - twice}; }  // 2 - k
    std::string str() const;
    friend bool operator==(Weight x, Weight y) { return x.twice == y.twice; }
};

struct GroupElement {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    bool valid() const;
    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const { return {d, -b, -c, a}; }
    cplx apply(cplx tau) const { return (double(a) * tau + double(b)) / (double(c) * tau + double(d)); }
    // Image of a rational; throws Status::domain if it is the cusp at infinity.
    Rational apply(const Rational& x) const;
    // "a,b,c,d"; throws Status::parse, or invalid_argument when det != 1.
    static GroupElement parse(std::string_view text);
    std::string str() const;
};

long long gcd_ll(long long a, long long b);
// Returns g = gcd(a,b) and sets x, y with a*x + b*y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y);
long long mod_floor(long long a, long long m);

// Kronecker symbol (a/n); (a/-1) = sign(a), (a/0) = [|a| = 1], (a/2) by the usual mod-8 rule.
int kronecker(long long a, long long n);
inline int chi_m4(long long d) { return kronecker(-4, d); }

// eps_d = 1 for d = 1 mod 4, i for d = 3 mod 4. Throws for even d.
cplx eps(long long d);
// i^m
cplx i_pow(long long m);

bool in_gamma0(const GroupElement& g, long long N);
bool in_gamma1(const GroupElement& g, long long N);

// sin(pi x), cos(pi x) with exact values at integers and half-integers.
double sin_pi(double x);
double cos_pi(double x);
// exp(2 pi i r) from the exact reduced fraction of r.
cplx expi_2pi(const Rational& r);

// z^e with arg z in (-pi, pi]; a signed-zero imaginary part is treated as +0.
cplx ppow(cplx z, double e);
cplx plog(cplx z);

struct AutomorphyFactor {
    cplx value;
    Weight weight;
};

struct Automorphy {
    AutomorphyFactor factor;
    cplx image;
};

// Multiplier of f|_k g at tau: eps_d^{2k} (c/d) (c tau + d)^{-k} for half-integral k,
// (c tau + d)^{-k} otherwise. Principal branch. Requires g in Gamma_0(4) for half-integral k.
Automorphy automorphy(const GroupElement& g, cplx tau, Weight k, long long N);

// Same multiplier at a real point x != -d/c, with (c x + d) taken as the limit from the
// lower half-plane, i.e. at x - i0. This is the branch on which the boundary transformation
// law of the non-holomorphic Eichler integral continues.
cplx boundary_multiplier(const GroupElement& g, const Rational& x, Weight k);

// s(h, q) = sum_{r=1}^{q-1} ((r/q))((hr/q)), exact.
Rational dedekind_sum(long long h, long long q);

}  // namespace qmf
