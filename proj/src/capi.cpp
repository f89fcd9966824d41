#include "hypratio.h"

#include <cstring>
#include <memory>
#include <string>

#include "hypratio/continuation.hpp"
#include "hypratio/ratio_theory.hpp"
#include "hypratio/representation.hpp"
#include "hypratio/types.hpp"
#include "hypratio/verify.hpp"
#include "hypratio/zeros.hpp"

using namespace hypratio;

struct hr_context {
    Precision prec{};
    QuadratureConfig quad{};
    std::string last_error;
};

struct hr_representation {
    Representation rep;
};

namespace {

hr_status fail(hr_context* ctx, hr_status st, const char* what) {
    if (ctx) ctx->last_error = what;
    return st;
}

// Run a callable, mapping exceptions to status codes on the context.
template <typename F>
hr_status guarded(hr_context* ctx, F&& f) {
    if (!ctx) return HR_PARAM_ERROR;
    try {
        f();
        ctx->last_error.clear();
        return HR_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return static_cast<hr_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HR_NUMERIC_ERROR;
    }
}

CutPlanePoint make_point(double re, double im, int bank) {
    if (bank > 0) return CutPlanePoint::boundary(re, Bank::Upper);
    if (bank < 0) return CutPlanePoint::boundary(re, Bank::Lower);
    return CutPlanePoint::at(cplx(re, im));
}

void write_cplx(double out[2], cplx v) {
    out[0] = v.real();
    out[1] = v.imag();
}

} // namespace

extern "C" {

hr_context* hr_context_create(void) { return new (std::nothrow) hr_context; }

void hr_context_destroy(hr_context* ctx) { delete ctx; }

const char* hr_last_error(const hr_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

hr_status hr_set_tolerance(hr_context* ctx, double abs_tol, double rel_tol) {
    if (!ctx) return HR_PARAM_ERROR;
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        return fail(ctx, HR_PARAM_ERROR, "tolerances must be positive");
    ctx->quad.abs_tol = abs_tol;
    ctx->quad.rel_tol = rel_tol;
    ctx->last_error.clear();
    return HR_OK;
}

hr_status hr_set_working_digits(hr_context* ctx, int digits) {
    if (!ctx) return HR_PARAM_ERROR;
    if (digits < 10 || digits > 64)
        return fail(ctx, HR_PARAM_ERROR, "working digits must lie in [10, 64]");
    ctx->prec.working_digits = digits;
    ctx->last_error.clear();
    return HR_OK;
}

hr_status hr_indices(hr_context* ctx, int n1, int n2, int m, int out[5]) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        IndexData ix = derive_indices(Shift(n1, n2, m));
        out[0] = ix.n_low;
        out[1] = ix.n_high;
        out[2] = ix.p;
        out[3] = ix.l;
        out[4] = ix.r;
    });
}

hr_status hr_ratio_direct(hr_context* ctx, double a, double b, double c, int n1,
                          int n2, int m, double z_re, double z_im, int bank,
                          double out[2]) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        write_cplx(out, ratio_direct(Params(a, b, c), Shift(n1, n2, m),
                                     make_point(z_re, z_im, bank), ctx->prec));
    });
}

hr_status hr_zero_count(hr_context* ctx, double a, double b, double c, int* nu,
                        int* degenerate) {
    return guarded(ctx, [&] {
        RunckelResult r = runckel_count(Params(a, b, c));
        if (nu) *nu = r.nu;
        if (degenerate) *degenerate = r.degenerate ? 1 : 0;
    });
}

hr_status hr_zero_locations(hr_context* ctx, double a, double b, double c, int cap,
                            double* out_re, double* out_im, int* out_pair,
                            int* count) {
    return guarded(ctx, [&] {
        ZeroReport rep = locate_zeros(Params(a, b, c), ctx->prec);
        int n = static_cast<int>(rep.zeros.size());
        if (count) *count = n;
        for (int i = 0; i < n && i < cap; ++i) {
            if (out_re) out_re[i] = rep.zeros[i].location.real();
            if (out_im) out_im[i] = rep.zeros[i].location.imag();
            if (out_pair) out_pair[i] = rep.zeros[i].complex_pair ? 1 : 0;
        }
    });
}

hr_status hr_residue(hr_context* ctx, double a, double b, double c, int n1, int n2,
                     int m, double beta_re, double beta_im, double out[2]) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        write_cplx(out, residue_at_pole(Params(a, b, c), Shift(n1, n2, m),
                                        cplx(beta_re, beta_im), ctx->prec));
    });
}

hr_status hr_boundary_imag(hr_context* ctx, double a, double b, double c, int n1,
                           int n2, int m, double x, int bank, double* out) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        if (bank == 0) throw ParamError("boundary_imag requires a bank (+1 or -1)");
        *out = boundary_imag(Params(a, b, c), Shift(n1, n2, m), x,
                             bank > 0 ? Bank::Upper : Bank::Lower, ctx->prec);
    });
}

hr_status hr_repr_build(hr_context* ctx, double a, double b, double c, int n1,
                        int n2, int m, const char* strategy,
                        hr_representation** out) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        std::string name = strategy ? strategy : "auto";
        Params p(a, b, c);
        Strategy st;
        if (name == "auto")
            st = pole_free_condition(p) ? Strategy::PoleFree : Strategy::QCorrection;
        else if (name == "pole-free")
            st = Strategy::PoleFree;
        else if (name == "q")
            st = Strategy::QCorrection;
        else if (name == "t")
            st = Strategy::TMultiplier;
        else
            throw ParamError("unknown strategy: " + name);
        auto holder = std::make_unique<hr_representation>();
        holder->rep = build_representation(p, Shift(n1, n2, m), st, ctx->prec);
        *out = holder.release();
    });
}

void hr_repr_destroy(hr_representation* rep) { delete rep; }

hr_status hr_repr_info(const hr_representation* rep, int* M, int* N, int* d,
                       int* log_flag) {
    if (!rep) return HR_PARAM_ERROR;
    if (M) *M = rep->rep.M;
    if (N) *N = rep->rep.N;
    if (d) *d = rep->rep.d;
    if (log_flag) *log_flag = rep->rep.log_flag ? 1 : 0;
    return HR_OK;
}

const char* hr_repr_strategy(const hr_representation* rep) {
    return rep ? to_string(rep->rep.strategy) : "";
}

hr_status hr_repr_poly(const hr_representation* rep, int which, int cap,
                       double* out, int* len) {
    if (!rep || which < 0 || which > 4) return HR_PARAM_ERROR;
    const std::vector<double>* src = nullptr;
    switch (which) {
        case 0: src = &rep->rep.Q.numerator.coeffs; break;
        case 1: src = &rep->rep.Q.denominator.coeffs; break;
        case 2: src = &rep->rep.T.coeffs; break;
        case 3: src = &rep->rep.taylor; break;
        case 4: src = &rep->rep.weight.B_times_Pr.coeffs; break;
    }
    int n = static_cast<int>(src->size());
    if (len) *len = n;
    for (int i = 0; i < n && i < cap; ++i) {
        if (out) out[i] = (*src)[i];
    }
    return HR_OK;
}

hr_status hr_repr_weight_exponents(const hr_representation* rep, double* exp_x,
                                   double* exp_x_minus_1) {
    if (!rep) return HR_PARAM_ERROR;
    if (exp_x) *exp_x = rep->rep.weight.exp_x;
    if (exp_x_minus_1) *exp_x_minus_1 = rep->rep.weight.exp_x_minus_1;
    return HR_OK;
}

hr_status hr_repr_eval(hr_context* ctx, const hr_representation* rep, double z_re,
                       double z_im, int bank, double out[2]) {
    return guarded(ctx, [&] {
        if (!rep || !out) throw ParamError("null representation or output");
        write_cplx(out, eval_representation(rep->rep, make_point(z_re, z_im, bank),
                                            ctx->quad, ctx->prec));
    });
}

hr_status hr_product(hr_context* ctx, const char* which, double a, double b,
                     double c, double z_re, double z_im, int bank, double out[2]) {
    return guarded(ctx, [&] {
        if (!out) throw ParamError("null output");
        std::string name = which ? which : "";
        Params p(a, b, c);
        CutPlanePoint pt = make_point(z_re, z_im, bank);
        cplx v;
        if (name == "r111xr001")
            v = product_r111_r001(p, pt, ctx->quad, ctx->prec);
        else if (name == "stieltjes2")
            v = product_stieltjes2(p, pt, ctx->quad, ctx->prec);
        else if (name == "gauss011")
            v = gauss_ratio_repr(p, pt, ctx->quad, ctx->prec);
        else if (name == "r010")
            v = ratio_r010(p, pt, ctx->quad, ctx->prec);
        else
            throw ParamError("unknown product form: " + name);
        write_cplx(out, v);
    });
}

hr_status hr_verify(hr_context* ctx, const char* suite, double a, double b,
                    double c, int n1, int n2, int m, double* max_rel_dev,
                    int* cases) {
    return guarded(ctx, [&] {
        VerifyReport r = verify_suite(suite ? suite : "all", Params(a, b, c),
                                      Shift(n1, n2, m), ctx->quad, ctx->prec);
        if (max_rel_dev) *max_rel_dev = r.max_rel_dev;
        if (cases) *cases = r.cases;
    });
}

} // extern "C"
