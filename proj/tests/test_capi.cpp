#include "main_doctest.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qmf.h"

namespace {

const char* kEta24 = R"({ "kind": "eta_quotient", "factors": [[24, 1]], "weight": "1/2", "level": 576 })";
const char* kEta8 = R"({ "kind": "eta_quotient", "factors": [[8, 3]], "weight": "3/2", "level": 64 })";

struct Form {
    qmf_form* p = nullptr;
    explicit Form(const char* json) { REQUIRE(qmf_form_from_json(json, &p) == QMF_OK); }
    ~Form() { qmf_form_free(p); }
};

}  // namespace

TEST_CASE("form handles") {
    Form f(kEta24);
    int twice = 0;
    long long N = 0, D = 0;
    CHECK(qmf_form_weight_twice(f.p, &twice) == QMF_OK);
    CHECK(qmf_form_level(f.p, &N) == QMF_OK);
    CHECK(qmf_form_character(f.p, &D) == QMF_OK);
    CHECK(twice == 1);
    CHECK(N == 576);
    CHECK(D == 3);  // same character as (12/d) on odd d

    std::vector<long long> a(30);
    CHECK(qmf_integer_coefficients(f.p, 30, a.data()) == QMF_OK);
    CHECK(a[0] == 1);
    CHECK(a[24] == -1);
    CHECK(a[1] == 0);
}

TEST_CASE("errors map to status codes") {
    qmf_form* f = reinterpret_cast<qmf_form*>(1);
    CHECK(qmf_form_from_json("{ \"kind\": ", &f) == QMF_EPARSE);
    CHECK(f == nullptr);
    CHECK(std::string(qmf_last_error()).find("<input>") != std::string::npos);
    CHECK(qmf_form_from_json(R"({ "kind": "eta_quotient", "factors": [[24, 1]], "weight": "1/2", "level": 576, "colour": 1 })", &f) ==
          QMF_EPARSE);
    CHECK(qmf_form_from_file("/nonexistent/form.json", &f) != QMF_OK);

    Form g(kEta8);
    qmf_value v{};
    CHECK(qmf_q_value(g.p, 1, 0, 1e-10, &v) == QMF_EINVAL);
    CHECK(qmf_q_value(nullptr, 1, 3, 1e-10, &v) == QMF_EINVAL);
    CHECK(qmf_evaluate(g.p, 0, 1, 0.0, -1.0, 1e-10, &v) != QMF_OK);
    long long bad[4] = {1, 1, 1, 1};
    CHECK(qmf_cocycle(g.p, bad, 0.5, 1e-10, &v) == QMF_EINVAL);
    CHECK(std::string(qmf_status_string(QMF_EPOLE)) == "pole");

    long long d = 0, c = 0;
    CHECK(qmf_parse_rational("4/6", &d, &c) == QMF_OK);
    CHECK(d == 2);
    CHECK(c == 3);
    CHECK(qmf_parse_rational("1/0", &d, &c) == QMF_EPARSE);
    long long gm[4];
    CHECK(qmf_parse_gamma("1,0,64,1", gm) == QMF_OK);
    CHECK(qmf_parse_gamma("1,2,3,4", gm) == QMF_EINVAL);
}

TEST_CASE("values through the C interface") {
    Form f(kEta8);
    qmf_value v{};
    REQUIRE(qmf_q_value(f.p, 0, 1, 1e-12, &v) == QMF_OK);
    CHECK(std::fabs(v.re - 0.5) < 1e-10);
    CHECK(std::fabs(v.im) < 1e-12);

    // L(s) = sum (-1)^j (2j+1)^{1-2s}: at s = 3 an alternating series in odd fifth powers
    double beta5 = 0;
    for (int j = 0; j < 200000; ++j) beta5 += (j % 2 ? -1.0 : 1.0) / std::pow(2.0 * j + 1, 5);
    REQUIRE(qmf_l_value(f.p, 0, 1, 3.0, 0.0, 1e-12, &v) == QMF_OK);
    CHECK(std::fabs(v.re - beta5) < 1e-11);

    qmf_value s1{}, s2{};
    REQUIRE(qmf_f_star(f.p, 1, 3, 0.0, -0.05, 1e-12, 0, &s1) == QMF_OK);
    REQUIRE(qmf_f_star(f.p, 1, 3, 0.0, -0.05, 1e-12, 1, &s2) == QMF_OK);
    CHECK(std::hypot(s1.re - s2.re, s1.im - s2.im) < 1e-9);

    REQUIRE(qmf_strange(1, 2, &v) == QMF_OK);
    CHECK(v.re == 3.0);
    CHECK(v.im == 0.0);

    long long g[4] = {1, 0, 64, 1};
    qmf_value r{};
    REQUIRE(qmf_modularity_residual(f.p, g, 1, 1, 1e-12, &r) == QMF_OK);
    CHECK(std::hypot(r.re, r.im) < 1e-8);

    std::vector<double> x(5);
    std::vector<qmf_value> rs(5);
    double dd[3];
    REQUIRE(qmf_cocycle_scan(f.p, g, 0.0, 1.0, 5, 1e-12, x.data(), rs.data(), dd) == QMF_OK);
    CHECK(x[4] == 1.0);
    qmf_value one{};
    REQUIRE(qmf_cocycle(f.p, g, 1.0, 1e-12, &one) == QMF_OK);
    CHECK(std::hypot(one.re - rs[4].re, one.im - rs[4].im) < 1e-12);

    std::vector<qmf_value> beta(4);
    REQUIRE(qmf_asymptotic(f.p, 0, 1, 4, 1e-12, beta.data()) == QMF_OK);
    CHECK(std::fabs(beta[0].re - 0.5) < 1e-10);
    CHECK(qmf_asymptotic(f.p, 0, 1, 13, 1e-12, beta.data()) != QMF_OK);
}

TEST_CASE("verify reports") {
    Form f(kEta8);
    int exists = 0;
    CHECK(qmf_suite_exists("all", &exists) == QMF_OK);
    CHECK(exists == 1);
    CHECK(qmf_suite_exists("everything", &exists) == QMF_OK);
    CHECK(exists == 0);

    qmf_report* rep = nullptr;
    REQUIRE(qmf_verify(f.p, "vanishing", 1e-12, nullptr, 0, &rep) == QMF_OK);
    CHECK(qmf_report_size(rep) == 30);
    CHECK(qmf_report_passed(rep) == 1);
    const char *suite = nullptr, *name = nullptr;
    double value = 0, threshold = 0;
    int at_least = 1, passed = 0;
    CHECK(qmf_report_row(rep, 0, &suite, &name, &value, &threshold, &at_least, &passed) == QMF_OK);
    CHECK(std::string(suite) == "vanishing");
    CHECK(at_least == 0);
    CHECK(passed == 1);
    CHECK(qmf_report_row(rep, 30, &suite, &name, &value, &threshold, &at_least, &passed) == QMF_EINVAL);
    qmf_report_free(rep);

    CHECK(qmf_verify(f.p, "everything", 1e-12, nullptr, 0, &rep) == QMF_EINVAL);
    CHECK(rep == nullptr);
}
