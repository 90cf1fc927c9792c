#include "main_doctest.hpp"

#include <cmath>
#include <numbers>

#include "qmf/forms.hpp"

using namespace qmf;

namespace {

CuspForm eta24() { return CuspForm(CuspFormSpec::eta_quotient({{24, 1}}, Weight{1}, 576, 12)); }
CuspForm eta8cubed() { return CuspForm(CuspFormSpec::eta_quotient({{8, 3}}, Weight{3}, 64)); }

}  // namespace

TEST_CASE("eta quotient coefficients") {
    auto f = eta24();
    auto a = f.integer_coefficients(100);
    CHECK(a[0] == 1);
    CHECK(a[3] == 0);
    CHECK(a[24] == -1);
    CHECK(a[48] == -1);
    auto g = eta8cubed();
    auto b = g.integer_coefficients(100);
    CHECK(b[0] == 1);
    CHECK(b[8] == -3);
    CHECK(b[24] == 5);
    CHECK(b[48] == -7);
    REQUIRE(f.theta());
    REQUIRE(g.theta());
    CHECK(g.theta()->power == 1);
    // plain pentagonal expansion
    auto p = eta_quotient_coefficients({{24, 1}}, 200);
    CHECK(p[0] == 1);
    CHECK(p[168] == 1);
}

TEST_CASE("eta quotient validation") {
    CHECK_THROWS_AS(CuspForm(CuspFormSpec::eta_quotient({{24, 1}}, Weight{3}, 576)), Error);
    CHECK_THROWS_AS(CuspForm(CuspFormSpec::eta_quotient({{5, 1}}, Weight{1}, 576)), Error);
    CHECK_THROWS_AS(CuspForm(CuspFormSpec::eta_quotient({{24, 1}}, Weight{1}, 570)), Error);
    CHECK_THROWS_AS(CuspForm(CuspFormSpec::eta_quotient({{1, 1}}, Weight{1}, 4)), Error);
    CHECK(eta_quotient_is_cuspidal({{24, 1}}, 576));
    CHECK(eta_quotient_is_cuspidal({{8, 3}}, 64));
    CHECK_FALSE(eta_quotient_is_cuspidal({{4, 8}, {2, -4}}, 8));
}

TEST_CASE("character inference") {
    CuspForm f(CuspFormSpec::eta_quotient({{24, 1}}, Weight{1}, 576));
    for (long long d = -99; d <= 99; d += 2) CHECK(f.character(d) == kronecker(12, d));
    CuspForm g(CuspFormSpec::eta_quotient({{8, 3}}, Weight{3}, 64));
    CHECK(g.character_discriminant() == 1);
}

TEST_CASE("theta spec matches an eta identity") {
    ThetaRule t{12, {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1}, 0};
    CuspForm f(CuspFormSpec::unary_theta(t, Weight{1}, 576, 12));
    CHECK(f.near_real_supported());
    CHECK(f.eta_factors().size() == 1);
    ThetaRule u{4, {0, 1, 0, -1}, 1};
    CuspForm g(CuspFormSpec::unary_theta(u, Weight{3}, 64));
    CHECK(g.eta_factors().size() == 1);
    CHECK(g.eta_factors()[0].r == 3);
}

TEST_CASE("reduction lands in the fundamental domain") {
    for (cplx tau : {cplx(0.3, 0.01), cplx(-7.2, 0.002), cplx(0.5, 1e-5), cplx(0.1234, 0.8)}) {
        auto r = reduce(tau);
        CHECK(std::abs(r.tau_reduced.real()) <= 0.5 + 1e-12);
        CHECK(std::abs(r.tau_reduced) >= 1.0 - 1e-12);
        CHECK(std::abs(r.gamma.apply(tau) - r.tau_reduced) < 1e-9 * std::abs(r.tau_reduced));
        CHECK(r.gamma.det() == 1);
    }
    auto r = reduce(Point{Rational(1, 3), cplx(0, 1e-6)});
    CHECK(r.gamma.c == 3);
    CHECK(r.tau_reduced.imag() > 1e5);
}

TEST_CASE("log eta agrees with the product") {
    for (cplx tau : {cplx(0.3, 0.6), cplx(-0.45, 0.9), cplx(0.2, 1.3)}) {
        cplx q = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau);
        cplx prod = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau / 24.0);
        for (int n = 1; n < 200; ++n) prod *= 1.0 - std::pow(q, n);
        CHECK(std::abs(std::exp(log_eta(Point{Rational(0), tau})) - prod) < 1e-13 * std::abs(prod));
    }
}

TEST_CASE("series and reduction routes agree") {
    for (auto f : {eta24(), eta8cubed()}) {
        for (double y : {0.02, 0.05, 0.1}) {
            Point tau{Rational(1, 3), cplx(0.0137, y)};
            auto s = f.series(tau, 1e-14);
            auto e = f.evaluate(tau, 1e-14);
            CHECK(std::abs(s.value - e.value) < 1e-11 * std::max(1.0, std::abs(s.value)));
        }
    }
    // near a cusp both routes see the same small value
    auto f = eta8cubed();
    Point tau{Rational(1, 3), cplx(0, 1e-4)};
    auto v = f.evaluate(tau, 1e-14);
    CHECK(std::isfinite(v.value.real()));
}

TEST_CASE("transformation law on Gamma_0(N)") {
    struct Case {
        CuspForm f;
        std::vector<GroupElement> g;
    };
    std::vector<Case> cases = {
        {eta24(), {GroupElement{1, 0, 576, 1}, GroupElement{461, 4, 576, 5}, GroupElement{1, -1, 576, -575}}},
        {eta8cubed(), {GroupElement{1, 0, 64, 1}, GroupElement{1, -1, 64, -63}, GroupElement{5, 2, 192, 77}}},
    };
    for (const auto& c : cases) {
        for (const auto& g : c.g) {
            REQUIRE(g.valid());
            for (cplx tau : {cplx(0.013, 0.004), cplx(-0.0017, 0.0021), cplx(0.3, 0.6)}) {
                auto aut = automorphy(g, tau, c.f.weight(), c.f.level());
                cplx lhs = c.f.evaluate(aut.image, 1e-14).value * aut.factor.value;
                cplx rhs = double(c.f.character(g.d)) * c.f.evaluate(tau, 1e-14).value;
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
            }
        }
    }
}

TEST_CASE("fricke image") {
    for (auto f : {eta24(), eta8cubed()}) {
        CuspForm w = f.fricke_image();
        for (cplx tau : {cplx(0.1, 0.05), cplx(0.0, 0.8), cplx(-0.2, 0.3)}) {
            auto a = f.fricke(tau, 1e-14);
            auto b = w.evaluate(tau, 1e-14);
            CHECK(std::abs(a.value - b.value) < 1e-10 * std::max(1.0, std::abs(b.value)));
        }
    }
}

TEST_CASE("raw forms") {
    CuspForm f(CuspFormSpec::raw_coefficients({1.0, 0.0, 0.0, 2.0}, Weight{1}, 4));
    CHECK(!f.near_real_supported());
    CHECK_THROWS_AS(f.evaluate(cplx(0.1, 0.1), 1e-12), Error);
    cplx tau(0.1, 0.7);
    cplx q = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau);
    CHECK(std::abs(f.evaluate(tau, 1e-14).value - (q + 2.0 * std::pow(q, 4))) < 1e-15);
    CuspForm z(CuspFormSpec::raw_coefficients({0.0}, Weight{3}, 4));
    CHECK(z.is_zero());
    CHECK(z.evaluate(cplx(0.1, 1e-8), 1e-12).value == cplx(0.0));
}
