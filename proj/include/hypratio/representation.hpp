#ifndef HYPRATIO_REPRESENTATION_HPP
#define HYPRATIO_REPRESENTATION_HPP

#include <memory>
#include <vector>

#include "hypratio/quadrature.hpp"
#include "hypratio/ratio_theory.hpp"
#include "hypratio/types.hpp"

namespace hypratio {

// Ratio of two real polynomials, reduced (no common roots within 1e-10).
// The zero numerator with denominator 1 is the zero function.
struct RationalFunction {
    RealPolynomial numerator;
    RealPolynomial denominator{std::vector<double>{1.0}};

    bool is_zero() const { return numerator.is_zero(); }
    cplx operator()(cplx z) const;
    double operator()(double z) const;

    // First `count` Taylor coefficients at 0; requires denominator(0) != 0.
    std::vector<double> taylor_at_zero(int count) const;
};

enum class Strategy { PoleFree, QCorrection, TMultiplier };

const char* to_string(Strategy s);

// Data of the cut integrand
//   x^{exp_x} (x-1)^{exp_x_minus_1} B_times_Pr(1/x) / |2F1(a,b;c;x)|^2
// on (1, inf). B_times_Pr already contains the gamma-quotient prefactor.
// unit_denominator is a test hook that replaces |2F1|^2 by 1 so the integral
// has a Beta/Gauss closed form.
struct IntegrandWeight {
    RealPolynomial B_times_Pr;  // polynomial in 1/x; zero polynomial => no integral
    double exp_x = 0.0;
    double exp_x_minus_1 = 0.0;
    Params params = Params(1.0, 1.0, 1.0);
    bool unit_denominator = false;
};

// A fully assembled integral representation of the ratio
// R(z) = 2F1(a+n1,b+n2;c+m;z) / 2F1(a,b;c;z):
//   R(z) = Q(z) + sum_{k<N+d} z^k [(taylor conv coeffs of (1-z)^M T)]_k / ((1-z)^M T(z))
//        + z^{N+d} / ((z-1)^M T(z)) * (cut integral of weight against 1/(x-z)).
struct Representation {
    Params params = Params(1.0, 1.0, 1.0);
    Shift shift{0, 0, 0};
    Strategy strategy = Strategy::PoleFree;

    RationalFunction Q;                          // zero function on the pole-free path
    RealPolynomial T{std::vector<double>{1.0}};  // monic; {1} means T == 1
    int M = 0;
    int N = 0;
    int d = 0;  // deg T

    std::vector<double> taylor;  // Taylor coefficients of R - Q at 0, length N + d
    IntegrandWeight weight;

    // Near-integer c-a-b or a-b: logarithmic endpoint behaviour, results in
    // this zone carry a widened accuracy expectation (1e-6 instead of 1e-8).
    bool log_flag = false;

    // Cached density of the mapped integrand (x = 1/t), together with the
    // configuration it was requested under (the density itself may run with
    // adjusted depth/tolerances near critical endpoint exponents);
    // evaluations requesting another configuration rebuild.
    std::shared_ptr<const WeightedDensity> density;
    QuadratureConfig density_config;
};

// The ratio evaluated directly from the two 2F1 values; the oracle.
// Throws NumericError at (near-)zeros of the denominator 2F1.
cplx ratio_direct(const Params& p, const Shift& s, const CutPlanePoint& pt,
                  const Precision& prec);

// Taylor coefficients R^(j)(0)/j!, j = 0..order, by power-series division
// (double-double accumulation). order <= 64.
std::vector<double> ratio_taylor_coeffs(const Params& p, const Shift& s, int order,
                                        const Precision& prec);

// Derivatives R^(n)(0), n = 0..order, through the alternating
// quotient-derivative formula (test-only cross-check; order <= 12).
std::vector<double> ratio_derivatives_fdb(const Params& p, const Shift& s, int order,
                                          const Precision& prec);

// Generic Schwarz-type reconstruction
//   f(z) = sum_{k<N} z^k/q(z) sum_{j<=k} q_{k-j} f_j  +  z^N/q(z) * I(z),
// where f_j are Taylor coefficients of f at 0, q_j those of q, and I(z) is
// the Cauchy transform of the boundary density. mapped_u must be the density
// of the boundary integral after x = 1/t, i.e. D(t) = q(1/t) u(1/t) t^{N-1}
// as a WeightedDensity on (0,1); pass nullptr for a vanishing density. The
// density's own quadrature configuration governs the integration.
cplx schwarz_reconstruct(const std::vector<double>& f_taylor, const RealPolynomial& q,
                         int N, const WeightedDensity* mapped_u, cplx z,
                         const QuadratureConfig& quad);

// Density of the mapped cut integral: after x = 1/t the integrand
//   x^{exp_x}(x-1)^{exp_x_minus_1} T(x) W(1/x) / (|2F1|^2 (x-z))
// becomes t^{p}(1-t)^{q} g(t) / (1-zt) with analytically declared p, q
// (the |2F1|^2 endpoint asymptotics are folded into the exponents so g stays
// bounded). Returns nullptr when the weight polynomial is zero.
std::shared_ptr<const WeightedDensity> mapped_density(const IntegrandWeight& w,
                                                      const RealPolynomial& T,
                                                      const QuadratureConfig& cfg,
                                                      const Precision& prec);

// The cut integral of the weight (and optional polynomial factor T) against
// the Cauchy kernel 1/(x - z), mapped to (0,1). Off-cut z only.
cplx cauchy_integral(const IntegrandWeight& w, const RealPolynomial& T, cplx z,
                     const QuadratureConfig& quad, const Precision& prec);

// Assemble the representation. extra_M/extra_N build with (M+extra_M,
// N+extra_N) instead of the minimal admissible pair (the representation is
// valid for any admissible pair; used by robustness checks).
Representation build_representation(const Params& p, const Shift& s, Strategy strategy,
                                    const Precision& prec, int extra_M = 0,
                                    int extra_N = 0);

// Evaluate an assembled representation anywhere in the cut plane or on a
// bank of the cut (principal value plus the half-residue jump there).
cplx eval_representation(const Representation& rep, const CutPlanePoint& pt,
                         const QuadratureConfig& quad, const Precision& prec);

// Closed integral representation of R_{0,1,1} for zero-free parameter
// classes: constant c(b-a)_+/(b(c-a)) plus a positive-density cut integral.
cplx gauss_ratio_repr(const Params& p, const CutPlanePoint& pt,
                      const QuadratureConfig& quad, const Precision& prec);

// z R_{1,1,1}(z) R_{0,0,1}(z) via its closed constant-plus-integral form
// (order-2 kernel with numerator c + zt(1-c)). Off-cut z only.
cplx product_r111_r001(const Params& p, const CutPlanePoint& pt,
                       const QuadratureConfig& quad, const Precision& prec);

// R_{0,0,-1}(z) R_{0,0,1}(z) as a generalized Stieltjes transform of order 2.
// Requires c != 1. Off-cut z only.
cplx product_stieltjes2(const Params& p, const CutPlanePoint& pt,
                        const QuadratureConfig& quad, const Precision& prec);

// Convenience wrapper: R_{0,1,0}(z) = (c-1)/b R_{0,0,-1}(z) - (c-b-1)/b,
// with R_{0,0,-1} evaluated through its representation.
cplx ratio_r010(const Params& p, const CutPlanePoint& pt,
                const QuadratureConfig& quad, const Precision& prec);

} // namespace hypratio

#endif
