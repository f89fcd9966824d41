/* C interface to the hypratio library.
 *
 * All functions that can fail return an hr_status; on failure the context
 * stores a human-readable message retrievable with hr_last_error(). Complex
 * numbers are passed as separate real/imaginary doubles. Points on the
 * branch cut [1, inf) are selected with a bank argument: 0 = off-cut,
 * +1 = upper bank (x + i0), -1 = lower bank (x - i0).
 */
#ifndef HYPRATIO_H
#define HYPRATIO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
    HR_OK = 0,
    HR_PARAM_ERROR = 2,  /* invalid parameter combination / bad argument */
    HR_NUMERIC_ERROR = 3 /* quadrature, zero-search or continuation failure */
} hr_status;

typedef struct hr_context hr_context;
typedef struct hr_representation hr_representation;

/* ---- context -------------------------------------------------------- */

hr_context* hr_context_create(void);
void hr_context_destroy(hr_context* ctx);

/* Message of the most recent failure on this context ("" if none). */
const char* hr_last_error(const hr_context* ctx);

/* Quadrature tolerances (defaults 1e-10 / 1e-10). */
hr_status hr_set_tolerance(hr_context* ctx, double abs_tol, double rel_tol);

/* Working precision request in decimal digits (default 32). */
hr_status hr_set_working_digits(hr_context* ctx, int digits);

/* ---- index data ------------------------------------------------------ */

/* out = { min(n1,n2), max(n1,n2), (m-n1-n2)_+, (n1+n2-m)_+, r } */
hr_status hr_indices(hr_context* ctx, int n1, int n2, int m, int out[5]);

/* ---- direct ratio (the oracle) -------------------------------------- */

/* R_{n1,n2,m}(z) by analytic continuation of numerator and denominator. */
hr_status hr_ratio_direct(hr_context* ctx, double a, double b, double c, int n1,
                          int n2, int m, double z_re, double z_im, int bank,
                          double out[2]);

/* ---- zeros of the base function ------------------------------------- */

/* Zero count nu of 2F1(a,b;c;.) in the cut plane plus upper bank;
 * *degenerate is nonzero for terminating-series (polynomial) cases. */
hr_status hr_zero_count(hr_context* ctx, double a, double b, double c, int* nu,
                        int* degenerate);

/* Locate the zeros. Arrays of capacity cap receive location (re, im) and a
 * flag marking conjugate pairs (each pair is reported once, with weight 2).
 * *count receives the number of entries written. */
hr_status hr_zero_locations(hr_context* ctx, double a, double b, double c, int cap,
                            double* out_re, double* out_im, int* out_pair,
                            int* count);

/* Residue of R_{n1,n2,m} at a simple pole beta (a zero of the base 2F1). */
hr_status hr_residue(hr_context* ctx, double a, double b, double c, int n1, int n2,
                     int m, double beta_re, double beta_im, double out[2]);

/* ---- boundary formula ------------------------------------------------ */

/* Im R_{n1,n2,m}(x + bank*i0) through the closed boundary formula, x > 1. */
hr_status hr_boundary_imag(hr_context* ctx, double a, double b, double c, int n1,
                           int n2, int m, double x, int bank, double* out);

/* ---- integral representation ----------------------------------------- */

/* strategy: "auto", "pole-free", "q" (constant+poles correction) or
 * "t" (polynomial multiplier). "auto" picks pole-free when the parameters
 * are in a zero-free class, otherwise the q-correction. */
hr_status hr_repr_build(hr_context* ctx, double a, double b, double c, int n1,
                        int n2, int m, const char* strategy,
                        hr_representation** out);
void hr_repr_destroy(hr_representation* rep);

/* Structure of a built representation. Any output pointer may be NULL. */
hr_status hr_repr_info(const hr_representation* rep, int* M, int* N, int* d,
                       int* log_flag);
/* Name of the strategy the representation was built with. */
const char* hr_repr_strategy(const hr_representation* rep);

/* Coefficient arrays (ascending powers). which: 0 = numerator of Q,
 * 1 = denominator of Q, 2 = T, 3 = Taylor block of R - Q,
 * 4 = weight polynomial (in 1/x). Writes at most cap values and stores the
 * true length in *len (call with cap = 0 to query the length). */
hr_status hr_repr_poly(const hr_representation* rep, int which, int cap,
                       double* out, int* len);

/* Endpoint exponents of the cut integrand: x^{exp_x} (x-1)^{exp_x_minus_1}. */
hr_status hr_repr_weight_exponents(const hr_representation* rep, double* exp_x,
                                   double* exp_x_minus_1);

/* Evaluate the representation at a point of the cut plane or on a bank. */
hr_status hr_repr_eval(hr_context* ctx, const hr_representation* rep, double z_re,
                       double z_im, int bank, double out[2]);

/* ---- closed product/ratio forms -------------------------------------- */

/* which: "r111xr001" = z R_{1,1,1} R_{0,0,1}; "stieltjes2" =
 * R_{0,0,-1} R_{0,0,1}; "gauss011" = R_{0,1,1} closed form;
 * "r010" = R_{0,1,0} contiguous wrapper. */
hr_status hr_product(hr_context* ctx, const char* which, double a, double b,
                     double c, double z_re, double z_im, int bank, double out[2]);

/* ---- self-verification ------------------------------------------------ */

/* suite: "boundary", "repr", "zeros", "products" or "all". */
hr_status hr_verify(hr_context* ctx, const char* suite, double a, double b,
                    double c, int n1, int n2, int m, double* max_rel_dev,
                    int* cases);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPRATIO_H */
