// qmf: batch front end over the C interface.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct Failure {
    int status;
    std::string message;
};

void check(int status) {
    if (status != QMF_OK) throw Failure{status, qmf_last_error()};
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormDeleter {
    void operator()(qmf_form* f) const { qmf_form_free(f); }
};
struct ReportDeleter {
    void operator()(qmf_report* r) const { qmf_report_free(r); }
};
using FormPtr = std::unique_ptr<qmf_form, FormDeleter>;
using ReportPtr = std::unique_ptr<qmf_report, ReportDeleter>;

struct Job {
    std::string form_path;
    double tol = 1e-10;
    std::string out_path;
    std::string format = "csv";
    std::string suite = "all";
    std::string gamma;
    std::vector<std::string> at;
    std::vector<std::string> s;
    std::string grid;
    std::string t_grid;
    std::string what = "f";
    long long count = 30;
    int order = 4;
    bool completed = false;
};

struct Rat {
    long long d = 0, c = 1;
    std::string text() const { return c == 1 ? std::to_string(d) : std::to_string(d) + "/" + std::to_string(c); }
};

Rat parse_rational(const std::string& t) {
    Rat r;
    check(qmf_parse_rational(t.c_str(), &r.d, &r.c));
    return r;
}

double parse_double(const std::string& t, const char* what) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    while (used < t.size() && t[used] == ' ') ++used;
    if (used == 0 || used != t.size() || !std::isfinite(v)) throw UsageError(std::string("bad ") + what + ": '" + t + "'");
    return v;
}

std::vector<std::string> split(const std::string& t, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(t);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!t.empty() && t.back() == sep) parts.emplace_back();
    return parts;
}

// "re,im" or "re"
std::pair<double, double> parse_s(const std::string& t) {
    auto p = split(t, ',');
    if (p.size() == 1) return {parse_double(p[0], "s"), 0.0};
    if (p.size() != 2) throw UsageError("--s expects 're,im', got '" + t + "'");
    return {parse_double(p[0], "Re s"), parse_double(p[1], "Im s")};
}

// "start:stop:n", n >= 1 equally spaced points including both ends
std::vector<double> parse_grid(const std::string& t) {
    auto p = split(t, ':');
    if (p.size() != 3) throw UsageError("--grid expects 'start:stop:n', got '" + t + "'");
    double a = parse_double(p[0], "grid start"), b = parse_double(p[1], "grid stop");
    double nd = parse_double(p[2], "grid count");
    if (nd < 1 || nd > 1e6 || nd != std::floor(nd)) throw UsageError("grid count must be an integer in [1, 1e6]");
    int n = static_cast<int>(nd);
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return g;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string complex_label(double re, double im) {
    if (im == 0.0) return num(re);
    return num(re) + (std::signbit(im) ? "-" : "+") + num(std::fabs(im)) + "i";
}

class Table {
public:
    explicit Table(std::string format) : format_(std::move(format)) {}

    void row(const std::string& x, double re, double im, double err) { rows_.push_back({x, num(re), num(im), num(err)}); }
    void row(const std::string& x, const qmf_value& v) { row(x, v.re, v.im, v.err); }

    std::string render() const {
        std::ostringstream o;
        if (format_ == "csv") {
            o << "x,re,im,err\n";
            for (const auto& r : rows_) o << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
        } else {
            o << pad("x", 26) << pad("re", 26) << pad("im", 26) << "err\n";
            for (const auto& r : rows_) o << pad(r[0], 26) << pad(r[1], 26) << pad(r[2], 26) << r[3] << '\n';
        }
        return o.str();
    }

private:
    static std::string pad(const std::string& s, size_t w) { return s.size() + 1 >= w ? s + ' ' : s + std::string(w - s.size(), ' '); }

    std::string format_;
    std::vector<std::array<std::string, 4>> rows_;
};

FormPtr load_form(const Job& job) {
    if (job.form_path.empty()) throw UsageError("--form is required");
    qmf_form* f = nullptr;
    check(qmf_form_from_file(job.form_path.c_str(), &f));
    return FormPtr(f);
}

void write_output(const Job& job, const std::string& text) {
    if (job.out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(job.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{QMF_EINVAL, "cannot open '" + job.out_path + "' for writing"};
    out << text;
    if (!out.flush()) throw Failure{QMF_EINVAL, "write to '" + job.out_path + "' failed"};
}

std::vector<Rat> rationals(const Job& job) {
    std::vector<Rat> r;
    for (const auto& a : job.at) r.push_back(parse_rational(a));
    return r;
}

Rat single_point(const Job& job) {
    if (job.at.size() > 1) throw UsageError("this command takes at most one --at");
    return job.at.empty() ? Rat{} : parse_rational(job.at.front());
}

int cmd_coeffs(const Job& job) {
    auto f = load_form(job);
    if (job.count < 0 || job.count > 1000000) throw UsageError("--count must lie in [0, 1e6]");
    Table t(job.format);
    std::vector<long long> exact(static_cast<size_t>(job.count));
    if (qmf_integer_coefficients(f.get(), job.count, exact.data()) == QMF_OK) {
        std::ostringstream o;
        if (job.format == "csv") {
            o << "x,re,im,err\n";
            for (long long n = 1; n <= job.count; ++n) o << n << ',' << exact[static_cast<size_t>(n - 1)] << ",0,0\n";
        } else {
            o << "n a(n)\n";
            for (long long n = 1; n <= job.count; ++n) o << n << ' ' << exact[static_cast<size_t>(n - 1)] << '\n';
        }
        write_output(job, o.str());
        return kExitOk;
    }
    std::vector<double> re(static_cast<size_t>(job.count)), im(static_cast<size_t>(job.count));
    check(qmf_coefficients(f.get(), job.count, re.data(), im.data()));
    for (long long n = 1; n <= job.count; ++n)
        t.row(std::to_string(n), re[static_cast<size_t>(n - 1)], im[static_cast<size_t>(n - 1)], 0.0);
    write_output(job, t.render());
    return kExitOk;
}

// f, f~ at x + iy; f* at x - iy. y runs over the grid.
int cmd_eval(const Job& job) {
    auto f = load_form(job);
    Rat x = single_point(job);
    auto ys = parse_grid(job.grid.empty() ? "0.1:1:10" : job.grid);
    Table t(job.format);
    for (double y : ys) {
        if (!(y > 0)) throw UsageError("heights on --grid must be positive");
        qmf_value v{};
        if (job.what == "f")
            check(qmf_evaluate(f.get(), x.d, x.c, 0.0, y, job.tol, &v));
        else if (job.what == "tilde")
            check(qmf_tilde_f(f.get(), x.d, x.c, 0.0, y, job.tol, &v));
        else if (job.what == "fstar")
            check(qmf_f_star(f.get(), x.d, x.c, 0.0, -y, job.tol, 0, &v));
        else
            check(qmf_f_star(f.get(), x.d, x.c, 0.0, -y, job.tol, 1, &v));
        t.row(num(y), v);
    }
    write_output(job, t.render());
    return kExitOk;
}

int cmd_lvalue(const Job& job) {
    auto f = load_form(job);
    Rat x = single_point(job);
    if (job.completed && x.d != 0) throw UsageError("--completed applies to the untwisted L-function only");
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : job.s) pts.push_back(parse_s(s));
    if (!job.grid.empty())
        for (double r : parse_grid(job.grid)) pts.emplace_back(r, 0.0);
    if (pts.empty()) throw UsageError("give --s or --grid");
    Table t(job.format);
    for (auto [re, im] : pts) {
        qmf_value v{};
        if (job.completed)
            check(qmf_lambda(f.get(), re, im, job.tol, &v));
        else
            check(qmf_l_value(f.get(), x.d, x.c, re, im, job.tol, &v));
        t.row(complex_label(re, im), v);
    }
    write_output(job, t.render());
    return kExitOk;
}

int cmd_quantum(const Job& job) {
    auto f = load_form(job);
    auto xs = rationals(job);
    Table t(job.format);
    for (const auto& x : xs) {
        qmf_value v{};
        check(qmf_q_value(f.get(), x.d, x.c, job.tol, &v));
        t.row(x.text(), v);
    }
    write_output(job, t.render());
    return kExitOk;
}

int cmd_cocycle(const Job& job) {
    auto f = load_form(job);
    if (job.gamma.empty()) throw UsageError("--gamma is required");
    long long g[4];
    check(qmf_parse_gamma(job.gamma.c_str(), g));
    auto pts = parse_grid(job.grid.empty() ? "-1:1:21" : job.grid);
    double lo = pts.front(), hi = pts.back();
    int n = static_cast<int>(pts.size());
    std::vector<double> xs(pts.size());
    std::vector<qmf_value> rs(pts.size());
    double divided[3];
    check(qmf_cocycle_scan(f.get(), g, lo, hi, n, job.tol, xs.data(), rs.data(), divided));
    Table t(job.format);
    for (size_t i = 0; i < xs.size(); ++i) t.row(num(xs[i]), rs[i]);
    write_output(job, t.render());
    return kExitOk;
}

int cmd_asymptotic(const Job& job) {
    auto f = load_form(job);
    Rat x = single_point(job);
    if (job.order < 1 || job.order > 12) throw UsageError("--order must lie in [1, 12]");
    std::vector<qmf_value> beta(static_cast<size_t>(job.order));
    check(qmf_asymptotic(f.get(), x.d, x.c, job.order, job.tol, beta.data()));
    Table t(job.format);
    for (int n = 0; n < job.order; ++n) t.row(std::to_string(n), beta[static_cast<size_t>(n)]);
    write_output(job, t.render());
    return kExitOk;
}

int cmd_strange(const Job& job) {
    std::vector<Rat> xs = rationals(job);
    if (job.at.empty()) {
        if (job.count < 1 || job.count > 1000) throw UsageError("--count must lie in [1, 1000] for strange");
        for (long long b = 1; b <= job.count; ++b)
            for (long long a = 0; a < b; ++a)
                if (std::gcd(a, b) == 1) xs.push_back(Rat{a, b});
    }
    Table t(job.format);
    for (const auto& x : xs) {
        qmf_value v{};
        check(qmf_strange(x.d, x.c, &v));
        t.row(x.text(), v);
    }
    write_output(job, t.render());
    return kExitOk;
}

int cmd_verify(const Job& job) {
    int exists = 0;
    check(qmf_suite_exists(job.suite.c_str(), &exists));
    if (!exists) throw UsageError("unknown suite '" + job.suite + "'");
    auto f = load_form(job);
    std::vector<double> grid;
    if (!job.t_grid.empty())
        for (const auto& p : split(job.t_grid, ',')) grid.push_back(parse_double(p, "t"));
    qmf_report* raw = nullptr;
    check(qmf_verify(f.get(), job.suite.c_str(), job.tol, grid.empty() ? nullptr : grid.data(), grid.size(), &raw));
    ReportPtr rep(raw);
    std::ostringstream o;
    size_t n = qmf_report_size(rep.get()), failed = 0;
    if (job.format == "csv") o << "suite,check,value,threshold,relation,passed\n";
    for (size_t i = 0; i < n; ++i) {
        const char *suite = nullptr, *name = nullptr;
        double value = 0, threshold = 0;
        int at_least = 0, passed = 0;
        check(qmf_report_row(rep.get(), i, &suite, &name, &value, &threshold, &at_least, &passed));
        failed += passed ? 0 : 1;
        const char* rel = at_least ? ">=" : "<=";
        if (job.format == "csv")
            o << suite << ',' << name << ',' << num(value) << ',' << num(threshold) << ',' << rel << ','
              << (passed ? 1 : 0) << '\n';
        else
            o << (passed ? "PASS " : "FAIL ") << suite << ' ' << name << ' ' << num(value) << ' ' << rel << ' '
              << num(threshold) << '\n';
    }
    if (job.format != "csv")
        o << (qmf_report_passed(rep.get()) ? "PASS" : "FAIL") << ' ' << n - failed << '/' << n << " checks\n";
    write_output(job, o.str());
    return qmf_report_passed(rep.get()) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eichler integrals, twisted L-values and quantum modular forms of half-integral weight"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qmf_version()));
    Job job;

    auto common = [&](CLI::App* c, bool form) {
        if (form) c->add_option("--form", job.form_path, "form-spec JSON file")->required()->check(CLI::ExistingFile);
        c->add_option("--tol", job.tol, "absolute tolerance in [1e-12, 1e-4]")->check(CLI::Range(1e-12, 1e-4));
        c->add_option("--out", job.out_path, "output file (default stdout)");
        c->add_option("--format", job.format, "csv or txt")->check(CLI::IsMember({"csv", "txt"}));
    };

    auto* coeffs = app.add_subcommand("coeffs", "coefficients a(1..n)");
    common(coeffs, true);
    coeffs->add_option("-n,--count", job.count, "number of coefficients");

    auto* eval = app.add_subcommand("eval", "f, f~ at x+iy or f* at x-iy over heights y");
    common(eval, true);
    eval->add_option("--at", job.at, "base point d/c");
    eval->add_option("--grid", job.grid, "heights start:stop:n");
    eval->add_option("--what", job.what, "f, tilde, fstar or fstar-integral")
        ->check(CLI::IsMember({"f", "tilde", "fstar", "fstar-integral"}));

    auto* lvalue = app.add_subcommand("lvalue", "twisted L-values L(e(d/c); s)");
    common(lvalue, true);
    lvalue->add_option("--at", job.at, "twist d/c (default 0)");
    lvalue->add_option("--s", job.s, "s as 're,im' (repeatable)");
    lvalue->add_option("--grid", job.grid, "real s values start:stop:n");
    lvalue->add_flag("--completed", job.completed, "completed Lambda(s) instead of L(s)");

    auto* quantum = app.add_subcommand("quantum", "Q_f at rationals");
    common(quantum, true);
    quantum->add_option("--at", job.at, "rational d/c (repeatable)");

    auto* cocycle = app.add_subcommand("cocycle", "period cocycle r_gamma(x) on a grid");
    common(cocycle, true);
    cocycle->add_option("--gamma", job.gamma, "a,b,c,d in Gamma_0(N)")->required();
    cocycle->add_option("--grid", job.grid, "x range start:stop:n");

    auto* asym = app.add_subcommand("asymptotic", "expansion coefficients beta(n) of f~ at a rational");
    common(asym, true);
    asym->add_option("--at", job.at, "rational d/c (default 0)");
    asym->add_option("-M,--order", job.order, "number of coefficients (<= 12)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify, true);
    verify->add_option("--suite", job.suite, "suite name or 'all'");
    verify->add_option("--t-grid", job.t_grid, "comma separated t values for the asymptotic suite");

    auto* strange = app.add_subcommand("strange", "Kontsevich's F at roots of unity e(a/b)");
    common(strange, false);
    strange->add_option("--at", job.at, "exponent a/b (repeatable)");
    strange->add_option("-n,--count", job.count, "all primitive roots of order <= n when --at is absent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*coeffs) return cmd_coeffs(job);
        if (*eval) return cmd_eval(job);
        if (*lvalue) return cmd_lvalue(job);
        if (*quantum) return cmd_quantum(job);
        if (*cocycle) return cmd_cocycle(job);
        if (*asym) return cmd_asymptotic(job);
        if (*verify) return cmd_verify(job);
        if (*strange) return cmd_strange(job);
    } catch (const UsageError& e) {
        std::cerr << "qmf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Failure& e) {
        std::cerr << "qmf: " << qmf_status_string(e.status) << ": " << e.message << '\n';
        return e.status == QMF_EPARSE || e.status == QMF_EINVAL ? kExitUsage : kExitCompute;
    }
    return kExitUsage;
}
