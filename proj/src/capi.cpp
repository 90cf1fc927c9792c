#include "qmf.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qmf/eichler.hpp"
#include "qmf/formspec_io.hpp"
#include "qmf/lfunc.hpp"
#include "qmf/quantum.hpp"
#include "qmf/verify.hpp"

struct qmf_form {
    qmf::CuspForm form;
};

struct qmf_report {
    qmf::SuiteReport report;
};

namespace {

thread_local std::string g_last_error;

int set_error(qmf::Status code, const char* what) {
    g_last_error = what;
    return static_cast<int>(code);
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return QMF_OK;
    } catch (const qmf::Error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(qmf::Status::budget, "out of memory");
    } catch (const std::exception& e) {
        return set_error(qmf::Status::internal, e.what());
    } catch (...) {
        return set_error(qmf::Status::internal, "unknown exception");
    }
}

void need(const void* p, const char* what) {
    if (!p) qmf::fail(qmf::Status::invalid_argument, std::string("null ") + what);
}

qmf::Rational rational(long long d, long long c) {
    if (c == 0) qmf::fail(qmf::Status::invalid_argument, "zero denominator");
    return qmf::Rational(d, c);
}

qmf::GroupElement group(const long long* g) {
    need(g, "gamma");
    qmf::GroupElement e{g[0], g[1], g[2], g[3]};
    if (!e.valid()) qmf::fail(qmf::Status::invalid_argument, "gamma must have determinant 1");
    return e;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || tol > 1.0) qmf::fail(qmf::Status::invalid_argument, "tolerance must lie in (0, 1]");
}

void put(qmf_value* out, qmf::cplx v, double err) {
    out->re = v.real();
    out->im = v.imag();
    out->err = err;
}

qmf::Point point(long long d, long long c, double off_re, double off_im) {
    return qmf::Point{rational(d, c), qmf::cplx(off_re, off_im)};
}

}  // namespace

extern "C" {

const char* qmf_version(void) { return "0.1.0"; }

const char* qmf_status_string(int status) {
    if (status < 0 || status > QMF_EINTERNAL) return "unknown";
    return qmf::status_name(static_cast<qmf::Status>(status));
}

const char* qmf_last_error(void) { return g_last_error.c_str(); }

int qmf_parse_rational(const char* text, long long* d, long long* c) {
    return guarded([&] {
        need(text, "text");
        need(d, "d");
        need(c, "c");
        qmf::Rational r = qmf::Rational::parse(text);
        *d = r.num();
        *c = r.den();
    });
}

int qmf_parse_gamma(const char* text, long long gamma[4]) {
    return guarded([&] {
        need(text, "text");
        need(gamma, "gamma");
        qmf::GroupElement g = qmf::GroupElement::parse(text);
        gamma[0] = g.a;
        gamma[1] = g.b;
        gamma[2] = g.c;
        gamma[3] = g.d;
    });
}

int qmf_form_from_json(const char* json, qmf_form** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = nullptr;
        *out = new qmf_form{qmf::CuspForm(qmf::parse_form_spec(json))};
    });
}

int qmf_form_from_file(const char* path, qmf_form** out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = nullptr;
        *out = new qmf_form{qmf::CuspForm(qmf::load_form_spec(path))};
    });
}

void qmf_form_free(qmf_form* form) { delete form; }

int qmf_form_weight_twice(const qmf_form* form, int* twice_k) {
    return guarded([&] {
        need(form, "form");
        need(twice_k, "twice_k");
        *twice_k = form->form.weight().twice;
    });
}

int qmf_form_level(const qmf_form* form, long long* level) {
    return guarded([&] {
        need(form, "form");
        need(level, "level");
        *level = form->form.level();
    });
}

int qmf_form_character(const qmf_form* form, long long* discriminant) {
    return guarded([&] {
        need(form, "form");
        need(discriminant, "discriminant");
        *discriminant = form->form.character_discriminant();
    });
}

int qmf_form_is_zero(const qmf_form* form, int* is_zero) {
    return guarded([&] {
        need(form, "form");
        need(is_zero, "is_zero");
        *is_zero = form->form.is_zero() ? 1 : 0;
    });
}

int qmf_coefficients(const qmf_form* form, long long count, double* re, double* im) {
    return guarded([&] {
        need(form, "form");
        if (count < 0) qmf::fail(qmf::Status::invalid_argument, "negative count");
        if (count > 0) {
            need(re, "re");
            need(im, "im");
        }
        auto a = form->form.coefficients(count);
        for (long long n = 0; n < count; ++n) {
            re[n] = a[static_cast<size_t>(n)].real();
            im[n] = a[static_cast<size_t>(n)].imag();
        }
    });
}

int qmf_integer_coefficients(const qmf_form* form, long long count, long long* out) {
    return guarded([&] {
        need(form, "form");
        if (count < 0) qmf::fail(qmf::Status::invalid_argument, "negative count");
        if (count > 0) need(out, "out");
        auto a = form->form.integer_coefficients(count);
        std::memcpy(out, a.data(), sizeof(long long) * static_cast<size_t>(count));
    });
}

int qmf_evaluate(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol,
                 qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = form->form.evaluate(point(d, c, off_re, off_im), tol);
        put(out, v.value, v.err);
    });
}

int qmf_tilde_f(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol,
                qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::tilde_f(form->form, point(d, c, off_re, off_im), tol);
        put(out, v.value, v.err);
    });
}

int qmf_f_star(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol, int method,
               qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        if (method != 0 && method != 1) qmf::fail(qmf::Status::invalid_argument, "method must be 0 or 1");
        auto p = point(d, c, off_re, off_im);
        auto v = method == 0 ? qmf::f_star_series(form->form, p, tol) : qmf::f_star_integral(form->form, p, tol);
        put(out, v.value, v.err);
    });
}

int qmf_l_value(const qmf_form* form, long long d, long long c, double s_re, double s_im, double tol,
                qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::l_twisted(form->form, rational(d, c), qmf::cplx(s_re, s_im), tol);
        put(out, v.value, v.err);
    });
}

int qmf_lambda(const qmf_form* form, double s_re, double s_im, double tol, qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::lambda_completed(form->form, qmf::cplx(s_re, s_im), tol);
        put(out, v.value, v.err);
    });
}

int qmf_q_value(const qmf_form* form, long long d, long long c, double tol, qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::q_value(form->form, rational(d, c), tol);
        put(out, v.value, v.err);
    });
}

int qmf_cocycle(const qmf_form* form, const long long gamma[4], double x, double tol, qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::cocycle_integral(form->form, group(gamma), qmf::cplx(x, 0.0), tol);
        put(out, v.value, v.err);
    });
}

int qmf_cocycle_scan(const qmf_form* form, const long long gamma[4], double lo, double hi, int n, double tol,
                     double* x, qmf_value* r, double divided[3]) {
    return guarded([&] {
        need(form, "form");
        check_tol(tol);
        if (n > 0) {
            need(x, "x");
            need(r, "r");
        }
        auto rep = qmf::cocycle_scan(form->form, group(gamma), lo, hi, n, tol);
        for (size_t i = 0; i < rep.x.size(); ++i) {
            x[i] = rep.x[i];
            put(&r[i], rep.r[i], rep.err[i]);
        }
        if (divided)
            for (int i = 0; i < 3; ++i) divided[i] = rep.max_divided_difference[static_cast<size_t>(i)];
    });
}

int qmf_modularity_residual(const qmf_form* form, const long long gamma[4], long long d, long long c, double tol,
                            qmf_value* out) {
    return guarded([&] {
        need(form, "form");
        need(out, "out");
        check_tol(tol);
        auto v = qmf::modularity_residual(form->form, group(gamma), rational(d, c), tol);
        put(out, v.residual, v.err);
    });
}

int qmf_asymptotic(const qmf_form* form, long long d, long long c, int M, double tol, qmf_value* beta) {
    return guarded([&] {
        need(form, "form");
        check_tol(tol);
        if (M > 0) need(beta, "beta");
        auto e = qmf::asymptotic_coeffs(form->form, rational(d, c), M, tol);
        for (size_t n = 0; n < e.upper.size(); ++n) put(&beta[n], e.upper[n], e.err[n]);
    });
}

int qmf_strange(long long a, long long b, qmf_value* out) {
    return guarded([&] {
        need(out, "out");
        auto v = qmf::strange_function(rational(a, b));
        put(out, v.value, v.err);
    });
}

int qmf_suite_exists(const char* name, int* exists) {
    return guarded([&] {
        need(name, "name");
        need(exists, "exists");
        *exists = qmf::is_suite_name(name) ? 1 : 0;
    });
}

int qmf_verify(const qmf_form* form, const char* suite, double tol, const double* t_grid, size_t t_count,
               qmf_report** out) {
    return guarded([&] {
        need(form, "form");
        need(suite, "suite");
        need(out, "out");
        *out = nullptr;
        check_tol(tol);
        qmf::VerifyOptions opt;
        opt.tol = tol;
        if (t_grid) opt.t_grid = std::vector<double>(t_grid, t_grid + t_count);
        *out = new qmf_report{qmf::run_suite(form->form, suite, opt)};
    });
}

void qmf_report_free(qmf_report* report) { delete report; }

size_t qmf_report_size(const qmf_report* report) { return report ? report->report.checks.size() : 0; }

int qmf_report_passed(const qmf_report* report) { return report && report->report.passed ? 1 : 0; }

int qmf_report_row(const qmf_report* report, size_t i, const char** suite, const char** name, double* value,
                   double* threshold, int* at_least, int* passed) {
    return guarded([&] {
        need(report, "report");
        if (i >= report->report.checks.size()) qmf::fail(qmf::Status::invalid_argument, "row index out of range");
        const auto& c = report->report.checks[i];
        if (suite) *suite = c.suite.c_str();
        if (name) *name = c.name.c_str();
        if (value) *value = c.value;
        if (threshold) *threshold = c.threshold;
        if (at_least) *at_least = c.at_least ? 1 : 0;
        if (passed) *passed = c.passed ? 1 : 0;
    });
}

}  // extern "C"
