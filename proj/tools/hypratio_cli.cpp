// Command-line surface for the hypratio shared library. Talks to the core
// exclusively through the C API in hypratio.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hypratio.h"

namespace {

// Failure that carries the process exit status (2 = bad parameters,
// 3 = numerical failure).
struct CliError {
    int code;
    std::string msg;
};

void check(hr_status st, hr_context* ctx) {
    if (st != HR_OK) throw CliError{static_cast<int>(st), hr_last_error(ctx)};
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// One output record: ordered fields, each either a raw token (number/bool)
// or a string. Rendered as key=value lines or as a single JSON document.
struct Report {
    struct Field {
        std::string key;
        std::string val;
        bool raw;
    };
    std::vector<Field> fields;

    void add_num(const std::string& k, double v) { fields.push_back({k, fmt(v), true}); }
    void add_int(const std::string& k, long v) {
        fields.push_back({k, std::to_string(v), true});
    }
    void add_str(const std::string& k, const std::string& v) {
        fields.push_back({k, v, false});
    }
    void add_cplx(const std::string& k, const double v[2]) {
        add_num(k + "_re", v[0]);
        add_num(k + "_im", v[1]);
    }
};

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

void render(const Report& r, const std::string& format) {
    if (format == "doc") {
        std::string out = "{";
        for (size_t i = 0; i < r.fields.size(); ++i) {
            if (i) out += ", ";
            out += json_escape(r.fields[i].key);
            out += ": ";
            out += r.fields[i].raw ? r.fields[i].val : json_escape(r.fields[i].val);
        }
        out += "}\n";
        std::fputs(out.c_str(), stdout);
    } else {
        for (const auto& f : r.fields)
            std::printf("%s=%s\n", f.key.c_str(), f.val.c_str());
    }
}

struct Job {
    double a = 0.0, b = 0.0, c = 0.0;
    int n1 = 0, n2 = 0, m = 0;
    std::vector<std::string> z_specs;
    std::string grid;
    std::string strategy = "auto";
    std::string suite = "all";
    std::string which = "r111xr001";
    std::string format = "kv";
    std::string bank = "auto";
    double tol = 0.0;
    int digits = 0;
};

struct Point {
    double re, im;
    int bank; // 0 off-cut, +1 upper, -1 lower
};

int bank_flag(const Job& job) {
    if (job.bank == "upper") return 1;
    if (job.bank == "lower") return -1;
    return 0;
}

// Resolve --z / --grid into evaluation points. Points that land on the
// branch cut [1, inf) need an explicit --bank.
std::vector<Point> resolve_points(const Job& job, bool need_points,
                                  int default_bank = 0) {
    std::vector<Point> pts;
    for (const auto& spec : job.z_specs) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(spec.c_str(), "%lf,%lf", &re, &im) != 2)
            throw CliError{2, "bad --z value (expected re,im): " + spec};
        pts.push_back({re, im, 0});
    }
    if (!job.grid.empty()) {
        double r0 = 0.0, r1 = 0.0;
        int n = 0;
        if (std::sscanf(job.grid.c_str(), "%lf,%lf,%d", &r0, &r1, &n) != 3 || n < 2)
            throw CliError{2, "bad --grid value (expected re0,re1,n with n >= 2)"};
        for (int i = 0; i < n; ++i)
            pts.push_back({r0 + (r1 - r0) * double(i) / double(n - 1), 0.0, 0});
    }
    int bf = bank_flag(job);
    if (bf == 0) bf = default_bank;
    for (auto& p : pts) {
        if (p.im == 0.0 && p.re >= 1.0) {
            if (bf == 0)
                throw CliError{2, "point " + fmt(p.re) +
                                      " lies on the cut [1, inf); pass --bank "
                                      "upper or --bank lower"};
            p.bank = bf;
        }
    }
    if (need_points && pts.empty())
        throw CliError{2, "no evaluation points (pass --z or --grid)"};
    return pts;
}

void add_meta(Report& rep, const std::string& cmd, const Job& job, double abs_tol,
              double rel_tol, int digits) {
    rep.add_str("command", cmd);
    rep.add_num("a", job.a);
    rep.add_num("b", job.b);
    rep.add_num("c", job.c);
    rep.add_int("n1", job.n1);
    rep.add_int("n2", job.n2);
    rep.add_int("m", job.m);
    rep.add_num("abs_tol", abs_tol);
    rep.add_num("rel_tol", rel_tol);
    rep.add_int("digits", digits);
}

void add_poly(Report& rep, hr_representation* h, int which, const std::string& key) {
    int len = 0;
    check(hr_repr_poly(h, which, 0, nullptr, &len), nullptr);
    std::vector<double> cs(len > 0 ? len : 1);
    check(hr_repr_poly(h, which, len, cs.data(), &len), nullptr);
    rep.add_int(key + "_len", len);
    for (int i = 0; i < len; ++i) rep.add_num(key + "_" + std::to_string(i), cs[i]);
}

struct ReprHolder {
    hr_representation* h = nullptr;
    ~ReprHolder() { hr_repr_destroy(h); }
};

int run(const std::string& cmd, const Job& job) {
    hr_context* ctx = hr_context_create();
    if (!ctx) {
        std::fprintf(stderr, "out of memory\n");
        return 3;
    }
    double abs_tol = 1e-10, rel_tol = 1e-10;
    int digits = 32;
    Report rep;
    int code = 0;
    try {
        if (job.tol > 0.0) {
            abs_tol = rel_tol = job.tol;
            check(hr_set_tolerance(ctx, abs_tol, rel_tol), ctx);
        }
        if (job.digits > 0) {
            digits = job.digits;
            check(hr_set_working_digits(ctx, digits), ctx);
        }
        add_meta(rep, cmd, job, abs_tol, rel_tol, digits);

        if (cmd == "indices") {
            int out[5];
            check(hr_indices(ctx, job.n1, job.n2, job.m, out), ctx);
            rep.add_int("n_low", out[0]);
            rep.add_int("n_high", out[1]);
            rep.add_int("p", out[2]);
            rep.add_int("l", out[3]);
            rep.add_int("r", out[4]);
        } else if (cmd == "eval" || cmd == "represent") {
            ReprHolder holder;
            check(hr_repr_build(ctx, job.a, job.b, job.c, job.n1, job.n2, job.m,
                                job.strategy.c_str(), &holder.h),
                  ctx);
            int M = 0, N = 0, d = 0, lf = 0;
            check(hr_repr_info(holder.h, &M, &N, &d, &lf), ctx);
            rep.add_str("strategy", hr_repr_strategy(holder.h));
            rep.add_int("M", M);
            rep.add_int("N", N);
            rep.add_int("d", d);
            rep.add_int("log_flag", lf);
            if (cmd == "represent") {
                double ex = 0.0, ex1 = 0.0;
                check(hr_repr_weight_exponents(holder.h, &ex, &ex1), ctx);
                rep.add_num("exp_x", ex);
                rep.add_num("exp_x_minus_1", ex1);
                add_poly(rep, holder.h, 0, "q_num");
                add_poly(rep, holder.h, 1, "q_den");
                add_poly(rep, holder.h, 2, "t_mult");
                add_poly(rep, holder.h, 3, "taylor");
                add_poly(rep, holder.h, 4, "weight_poly");
            }
            std::vector<Point> pts = resolve_points(job, cmd == "eval");
            if (job.format == "csv") {
                std::printf("z_re,z_im,R_re,R_im,abs_err_vs_oracle\n");
                for (const auto& p : pts) {
                    double v[2], o[2];
                    check(hr_repr_eval(ctx, holder.h, p.re, p.im, p.bank, v), ctx);
                    check(hr_ratio_direct(ctx, job.a, job.b, job.c, job.n1, job.n2,
                                          job.m, p.re, p.im, p.bank, o),
                          ctx);
                    double err = std::sqrt((v[0] - o[0]) * (v[0] - o[0]) +
                                           (v[1] - o[1]) * (v[1] - o[1]));
                    std::printf("%s,%s,%s,%s,%s\n", fmt(p.re).c_str(),
                                fmt(p.im).c_str(), fmt(v[0]).c_str(),
                                fmt(v[1]).c_str(), fmt(err).c_str());
                }
                hr_context_destroy(ctx);
                return 0;
            }
            rep.add_int("points", static_cast<long>(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i) {
                double v[2];
                check(hr_repr_eval(ctx, holder.h, pts[i].re, pts[i].im, pts[i].bank,
                                   v),
                      ctx);
                std::string tag = std::to_string(i);
                rep.add_num("z" + tag + "_re", pts[i].re);
                rep.add_num("z" + tag + "_im", pts[i].im);
                if (pts[i].bank != 0) rep.add_int("z" + tag + "_bank", pts[i].bank);
                rep.add_cplx("R" + tag, v);
            }
        } else if (cmd == "boundary") {
            // The boundary formula lives on the cut; default to the upper bank.
            std::vector<Point> pts = resolve_points(job, true, /*default_bank=*/1);
            int bf = bank_flag(job);
            if (bf == 0) bf = 1;
            rep.add_str("bank", bf > 0 ? "upper" : "lower");
            rep.add_int("points", static_cast<long>(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i) {
                if (!(pts[i].re > 1.0) || pts[i].im != 0.0)
                    throw CliError{2, "boundary points must be real with Re > 1"};
                double im = 0.0;
                check(hr_boundary_imag(ctx, job.a, job.b, job.c, job.n1, job.n2,
                                       job.m, pts[i].re, bf, &im),
                      ctx);
                std::string tag = std::to_string(i);
                rep.add_num("x" + tag, pts[i].re);
                rep.add_num("imag" + tag, im);
            }
        } else if (cmd == "zeros") {
            int nu = 0, degen = 0;
            check(hr_zero_count(ctx, job.a, job.b, job.c, &nu, &degen), ctx);
            rep.add_int("nu", nu);
            rep.add_int("degenerate", degen);
            int count = 0;
            std::vector<double> zre(nu > 0 ? nu : 1), zim(nu > 0 ? nu : 1);
            std::vector<int> pair(nu > 0 ? nu : 1);
            check(hr_zero_locations(ctx, job.a, job.b, job.c, nu, zre.data(),
                                    zim.data(), pair.data(), &count),
                  ctx);
            rep.add_int("located", count);
            // Residues of the shifted ratio at each pole; with no shift given,
            // report them for the first nontrivial shift (0,1,1).
            int rn1 = job.n1, rn2 = job.n2, rm = job.m;
            if (rn1 == 0 && rn2 == 0 && rm == 0) rn2 = rm = 1;
            rep.add_str("residue_shift", std::to_string(rn1) + "," +
                                             std::to_string(rn2) + "," +
                                             std::to_string(rm));
            for (int i = 0; i < count; ++i) {
                std::string tag = std::to_string(i);
                rep.add_num("beta" + tag + "_re", zre[i]);
                rep.add_num("beta" + tag + "_im", zim[i]);
                rep.add_int("beta" + tag + "_pair", pair[i]);
                double res[2];
                check(hr_residue(ctx, job.a, job.b, job.c, rn1, rn2, rm, zre[i],
                                 zim[i], res),
                      ctx);
                rep.add_cplx("residue" + tag, res);
            }
        } else if (cmd == "product") {
            std::vector<Point> pts = resolve_points(job, true);
            rep.add_str("which", job.which);
            rep.add_int("points", static_cast<long>(pts.size()));
            for (size_t i = 0; i < pts.size(); ++i) {
                double v[2];
                check(hr_product(ctx, job.which.c_str(), job.a, job.b, job.c,
                                 pts[i].re, pts[i].im, pts[i].bank, v),
                      ctx);
                std::string tag = std::to_string(i);
                rep.add_num("z" + tag + "_re", pts[i].re);
                rep.add_num("z" + tag + "_im", pts[i].im);
                rep.add_cplx("value" + tag, v);
            }
        } else if (cmd == "verify") {
            double dev = 0.0;
            int cases = 0;
            check(hr_verify(ctx, job.suite.c_str(), job.a, job.b, job.c, job.n1,
                            job.n2, job.m, &dev, &cases),
                  ctx);
            rep.add_str("suite", job.suite);
            rep.add_int("cases", cases);
            rep.add_num("max_rel_dev", dev);
        } else {
            throw CliError{2, "unknown command: " + cmd};
        }
        rep.add_int("status", 0);
    } catch (const CliError& e) {
        Report err;
        err.add_str("command", cmd);
        err.add_int("status", e.code);
        err.add_str("error", e.msg);
        render(err, job.format == "csv" ? "kv" : job.format);
        hr_context_destroy(ctx);
        return e.code;
    }
    render(rep, job.format);
    hr_context_destroy(ctx);
    return 0;
}

void add_common(CLI::App* sub, Job& job) {
    sub->add_option("--a", job.a, "parameter a");
    sub->add_option("--b", job.b, "parameter b");
    sub->add_option("--c", job.c, "parameter c");
    sub->add_option("--n1", job.n1, "shift n1");
    sub->add_option("--n2", job.n2, "shift n2");
    sub->add_option("--m", job.m, "shift m");
    sub->add_option("--z", job.z_specs, "evaluation point re,im (repeatable)");
    sub->add_option("--grid", job.grid, "real-axis sample grid re0,re1,n");
    sub->add_option("--strategy", job.strategy,
                    "representation strategy: auto, pole-free, q, t");
    sub->add_option("--tol", job.tol, "quadrature tolerance (abs and rel)");
    sub->add_option("--digits", job.digits, "working precision in decimal digits");
    sub->add_option("--suite", job.suite,
                    "verification suite: boundary, repr, zeros, products, all");
    sub->add_option("--which", job.which,
                    "product form: r111xr001, stieltjes2, gauss011, r010");
    sub->add_option("--bank", job.bank, "cut bank for on-cut points: upper, lower");
    sub->add_option("--format", job.format, "output format: kv, doc, csv");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ratios of associated Gauss hypergeometric functions"};
    app.require_subcommand(1);

    Job job;
    if (const char* env = std::getenv("HYPRATIO_DIGITS")) {
        int d = std::atoi(env);
        if (d > 0) job.digits = d;
    }

    const char* names[] = {"eval",     "indices", "zeros",  "represent",
                           "boundary", "verify",  "product"};
    const char* descs[] = {
        "evaluate the ratio through its integral representation",
        "derived index data for a shift triple",
        "count and locate poles of the ratio; report residues",
        "build and print the integral representation",
        "closed-form imaginary part on the cut x > 1",
        "run a self-verification suite against the direct oracle",
        "evaluate a closed product/ratio form"};
    for (int i = 0; i < 7; ++i) add_common(app.add_subcommand(names[i], descs[i]), job);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        Report err;
        err.add_str("command", "parse");
        err.add_int("status", 2);
        err.add_str("error", e.what());
        render(err, job.format == "csv" ? "kv" : job.format);
        return 2;
    }
    return run(app.get_subcommands().front()->get_name(), job);
}
