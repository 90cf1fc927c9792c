#include "qmf/arith.hpp"

#include <cmath>
#include <cctype>
#include <cerrno>
#include <climits>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace qmf {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > static_cast<i128>(INT64_MAX) || v < -static_cast<i128>(INT64_MAX))
        fail(Status::budget, "rational arithmetic overflow");
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 n, i128 d) {
    if (d == 0) fail(Status::domain, "division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational::from_reduced(narrow(n), narrow(d));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty()) fail(Status::parse, std::string("empty ") + what);
    std::string buf(s);
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(buf.c_str(), &end, 10);
    if (errno != 0 || end != buf.c_str() + buf.size())
        fail(Status::parse, std::string("malformed ") + what + " '" + buf + "'");
    return v;
}

}  // namespace

long long gcd_ll(long long a, long long b) { return static_cast<long long>(gcd128(a, b)); }

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational operator+(const Rational& x, const Rational& y) {
    return make(static_cast<i128>(x.num_) * y.den_ + static_cast<i128>(y.num_) * x.den_,
                static_cast<i128>(x.den_) * y.den_);
}
Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
Rational operator*(const Rational& x, const Rational& y) {
    return make(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}
Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) fail(Status::domain, "division by zero rational");
    return make(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}
bool operator<(const Rational& x, const Rational& y) {
    return static_cast<i128>(x.num_) * y.den_ < static_cast<i128>(y.num_) * x.den_;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const { return Rational(num_ - floor() * den_, den_); }

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"));
    long long n = parse_int(text.substr(0, slash), "numerator");
    long long d = parse_int(text.substr(slash + 1), "denominator");
    if (d == 0) fail(Status::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Weight Weight::parse(std::string_view text) {
    Rational r = Rational::parse(text);
    if (r.den() > 2 || r.num() <= 0) fail(Status::parse, "weight must be a positive (half-)integer");
    return Weight{static_cast<int>(r.den() == 1 ? 2 * r.num() : r.num())};
}

std::string Weight::str() const { return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2"; }

bool GroupElement::valid() const {
    return static_cast<i128>(a) * d - static_cast<i128>(b) * c == 1;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {narrow(static_cast<i128>(a) * o.a + static_cast<i128>(b) * o.c),
            narrow(static_cast<i128>(a) * o.b + static_cast<i128>(b) * o.d),
            narrow(static_cast<i128>(c) * o.a + static_cast<i128>(d) * o.c),
            narrow(static_cast<i128>(c) * o.b + static_cast<i128>(d) * o.d)};
}

Rational GroupElement::apply(const Rational& x) const {
    i128 den = static_cast<i128>(c) * x.num() + static_cast<i128>(d) * x.den();
    if (den == 0) fail(Status::domain, "rational maps to the cusp at infinity");
    return make(static_cast<i128>(a) * x.num() + static_cast<i128>(b) * x.den(), den);
}

GroupElement GroupElement::parse(std::string_view text) {
    long long v[4];
    std::string_view rest = text;
    for (int i = 0; i < 4; ++i) {
        auto comma = rest.find(',');
        if ((comma == std::string_view::npos) != (i == 3))
            fail(Status::parse, "group element must be 'a,b,c,d'");
        v[i] = parse_int(rest.substr(0, comma), "matrix entry");
        if (i < 3) rest = rest.substr(comma + 1);
    }
    GroupElement g{v[0], v[1], v[2], v[3]};
    if (!g.valid()) fail(Status::invalid_argument, "matrix " + g.str() + " does not have determinant 1");
    return g;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << a << "," << b << "," << c << "," << d;
    return os.str();
}

int kronecker(long long a, long long n) {
    static const int tab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) {
        ++v;
        n /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd and positive from here on
    while (true) {
        if (a == 0) return n > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab[n & 7];
        if (a & n & 2) k = -k;
        long long r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

cplx eps(long long d) {
    if (d % 2 == 0) fail(Status::invalid_argument, "eps_d needs odd d");
    return mod_floor(d, 4) == 1 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
}

cplx i_pow(long long m) {
    switch (mod_floor(m, 4)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

bool in_gamma0(const GroupElement& g, long long N) { return N > 0 && g.c % N == 0; }

bool in_gamma1(const GroupElement& g, long long N) {
    return in_gamma0(g, N) && mod_floor(g.a, N) == 1 % N && mod_floor(g.d, N) == 1 % N;
}

double sin_pi(double x) {
    double r = std::fmod(x, 2.0);  // (-2, 2)
    if (r < 0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    if (r <= 0.5) return std::sin(std::numbers::pi * r);
    if (r <= 1.5) return std::sin(std::numbers::pi * (1.0 - r));
    return std::sin(std::numbers::pi * (r - 2.0));
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

cplx expi_2pi(const Rational& r) {
    Rational f = r.frac();
    double t = 2.0 * f.num() / static_cast<double>(f.den());
    return {cos_pi(t), sin_pi(t)};
}

cplx plog(cplx z) {
    if (z.imag() == 0.0) {
        if (z.real() < 0) return {std::log(-z.real()), std::numbers::pi};
        return {std::log(z.real()), 0.0};
    }
    return std::log(z);
}

cplx ppow(cplx z, double e) {
    if (z == cplx(0.0, 0.0)) {
        if (e > 0) return {0.0, 0.0};
        fail(Status::pole, "zero raised to a non-positive power");
    }
    return std::exp(e * plog(z));
}

Automorphy automorphy(const GroupElement& g, cplx tau, Weight k, long long N) {
    (void)N;
    if (!g.valid()) fail(Status::invalid_argument, "matrix does not have determinant 1");
    if (tau.imag() == 0.0) fail(Status::domain, "automorphy needs a non-real point");
    cplx j = double(g.c) * tau + double(g.d);
    cplx factor = ppow(j, -k.value());
    if (k.half_integral()) {
        if (g.c % 4 != 0) fail(Status::invalid_argument, "half-integral weight needs g in Gamma_0(4)");
        factor *= i_pow(mod_floor(g.d, 4) == 1 ? 0 : k.twice) * double(kronecker(g.c, g.d));
    }
    return {{factor, k}, g.apply(tau)};
}

cplx boundary_multiplier(const GroupElement& g, const Rational& x, Weight k) {
    if (!g.valid()) fail(Status::invalid_argument, "matrix does not have determinant 1");
    Rational j = Rational(g.c) * x + Rational(g.d);
    if (j.num() == 0) fail(Status::domain, "point is the pole -d/c of the multiplier");
    double kv = k.value();
    double mag = std::pow(std::abs(j.value()), -kv);
    cplx factor;
    if (j.num() > 0) {
        factor = mag;
    } else {
        // arg(cx + d - i0 c): -pi for c > 0, +pi for c < 0 (and the principal +pi for c = 0)
        double arg = g.c > 0 ? -1.0 : 1.0;
        factor = mag * cplx(cos_pi(-kv * arg), sin_pi(-kv * arg));
    }
    if (k.half_integral()) {
        if (g.c % 4 != 0) fail(Status::invalid_argument, "half-integral weight needs g in Gamma_0(4)");
        factor *= i_pow(mod_floor(g.d, 4) == 1 ? 0 : k.twice) * double(kronecker(g.c, g.d));
    }
    return factor;
}

Rational dedekind_sum(long long h, long long q) {
    if (q <= 0) fail(Status::invalid_argument, "dedekind_sum needs q > 0");
    if (gcd_ll(h, q) != 1) fail(Status::invalid_argument, "dedekind_sum needs gcd(h, q) = 1");
    // s(h,q) + s(q,h) = -1/4 + (h/q + q/h + 1/(hq))/12
    Rational acc(0);
    int sign = 1;
    h = mod_floor(h, q);
    while (q > 1) {
        // here 0 < h < q
        Rational corr = Rational(-1, 4) +
                        Rational(narrow(static_cast<i128>(h) * h + static_cast<i128>(q) * q + 1),
                                 narrow(static_cast<i128>(12) * h * q));
        acc = acc + Rational(sign) * corr;
        sign = -sign;
        long long nh = q % h;
        q = h;
        h = nh;
    }
    return acc;
}

}  // namespace qmf
