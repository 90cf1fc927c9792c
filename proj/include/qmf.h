#ifndef QMF_H
#define QMF_H

/*
 * C interface to the qmf library: half-integral weight cusp forms, their Eichler
 * integrals, twisted L-values and the quantum modular form Q_f on the rationals.
 *
 * Every function returns a qmf_status. On failure the message is available from
 * qmf_last_error() (per thread, valid until the next failing call on that thread).
 * Rationals are passed as (d, c) with c != 0; they are reduced internally.
 */

#include <stddef.h>

#if defined(_WIN32)
#define QMF_API __declspec(dllexport)
#else
#define QMF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QMF_OK = 0,
    QMF_EINVAL = 1,
    QMF_EDOMAIN = 2,
    QMF_EPOLE = 3,
    QMF_EUNSUPPORTED = 4,
    QMF_ECONVERGENCE = 5,
    QMF_EPARSE = 6,
    QMF_EBUDGET = 7,
    QMF_EINTERNAL = 8
} qmf_status;

typedef struct qmf_form qmf_form;
typedef struct qmf_report qmf_report;

typedef struct {
    double re;
    double im;
    double err; /* absolute error estimate */
} qmf_value;

QMF_API const char* qmf_version(void);
QMF_API const char* qmf_status_string(int status);
QMF_API const char* qmf_last_error(void);

/* parsing helpers */
QMF_API int qmf_parse_rational(const char* text, long long* d, long long* c);
QMF_API int qmf_parse_gamma(const char* text, long long gamma[4]);

/* forms */
QMF_API int qmf_form_from_json(const char* json, qmf_form** out);
QMF_API int qmf_form_from_file(const char* path, qmf_form** out);
QMF_API void qmf_form_free(qmf_form* form);
QMF_API int qmf_form_weight_twice(const qmf_form* form, int* twice_k);
QMF_API int qmf_form_level(const qmf_form* form, long long* level);
QMF_API int qmf_form_character(const qmf_form* form, long long* discriminant);
QMF_API int qmf_form_is_zero(const qmf_form* form, int* is_zero);

/* a(1..count); qmf_integer_coefficients fails with QMF_EUNSUPPORTED when they are not integers */
QMF_API int qmf_coefficients(const qmf_form* form, long long count, double* re, double* im);
QMF_API int qmf_integer_coefficients(const qmf_form* form, long long count, long long* out);

/* tau = d/c + (off_re + i off_im) */
QMF_API int qmf_evaluate(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol,
                         qmf_value* out);
QMF_API int qmf_tilde_f(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol,
                        qmf_value* out);
/* off_im < 0; method 0 = incomplete gamma series, 1 = period integral */
QMF_API int qmf_f_star(const qmf_form* form, long long d, long long c, double off_re, double off_im, double tol,
                       int method, qmf_value* out);

/* L_f(e(d/c); s) */
QMF_API int qmf_l_value(const qmf_form* form, long long d, long long c, double s_re, double s_im, double tol,
                        qmf_value* out);
/* completed L-function by the split integral */
QMF_API int qmf_lambda(const qmf_form* form, double s_re, double s_im, double tol, qmf_value* out);

/* Q_f(d/c) = L_f(e(d/c); k - 1) */
QMF_API int qmf_q_value(const qmf_form* form, long long d, long long c, double tol, qmf_value* out);
QMF_API int qmf_cocycle(const qmf_form* form, const long long gamma[4], double x, double tol, qmf_value* out);
/* x[i], r[i] for i < n; divided[3] receives the largest divided differences of orders 1..3 */
QMF_API int qmf_cocycle_scan(const qmf_form* form, const long long gamma[4], double lo, double hi, int n, double tol,
                             double* x, qmf_value* r, double divided[3]);
QMF_API int qmf_modularity_residual(const qmf_form* form, const long long gamma[4], long long d, long long c,
                                    double tol, qmf_value* out);
/* upper-side coefficients beta(0..M-1) of f~(d/c + it/2pi) ~ sum beta(n) t^n */
QMF_API int qmf_asymptotic(const qmf_form* form, long long d, long long c, int M, double tol, qmf_value* beta);
/* Kontsevich's F at e(a/b) */
QMF_API int qmf_strange(long long a, long long b, qmf_value* out);

/* verification suites; t_grid may be NULL (asymptotic suite default) */
QMF_API int qmf_suite_exists(const char* name, int* exists);
QMF_API int qmf_verify(const qmf_form* form, const char* suite, double tol, const double* t_grid, size_t t_count,
                       qmf_report** out);
QMF_API void qmf_report_free(qmf_report* report);
QMF_API size_t qmf_report_size(const qmf_report* report);
QMF_API int qmf_report_passed(const qmf_report* report);
QMF_API int qmf_report_row(const qmf_report* report, size_t i, const char** suite, const char** name, double* value,
                           double* threshold, int* at_least, int* passed);

#ifdef __cplusplus
}
#endif

#endif
