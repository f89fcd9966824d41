#ifndef HYPRATIO_RATIO_THEORY_HPP
#define HYPRATIO_RATIO_THEORY_HPP

#include <vector>

#include "hypratio/types.hpp"

namespace hypratio {

// Derived integer quantities attached to a shift (n1, n2, m).
struct IndexData {
    int n_low;   // min(n1, n2)
    int n_high;  // max(n1, n2)
    int p;       // (m - n1 - n2)_+
    int l;       // (n1 + n2 - m)_+
    int r;       // l + (m)_+ - n_low - 1; -1 only for the zero shift
};

IndexData derive_indices(const Shift& s);

// Real polynomial, ascending coefficients; empty list is the zero polynomial.
struct RealPolynomial {
    std::vector<double> coeffs;

    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;

    double operator()(double t) const;
    cplx operator()(cplx t) const;
    RealPolynomial derivative() const;
};

// Gamma-quotient prefactor B_{n1,n2,m}(a,b,c); exactly 0 at gamma poles.
double coefficient_B(const Params& p, const Shift& s);

// Growth exponent of 2F1 at z -> 1 (four-case table).
double eta(const Params& p);

// Growth exponent of 2F1 at z -> infinity (three-case table).
double zeta(const Params& p);

// Minimal admissible (M, N) for the representation of R_{n1,n2,m}. The
// returned N assumes a rational correction Q may absorb a non-decaying part
// at infinity; pass q_absorbs_infinity = false (the pole-free path, where
// Q == 0 is mandatory) to get the strictly larger N instead.
std::pair<int, int> select_MN(const Params& p, const Shift& s,
                              bool q_absorbs_infinity = true);

// The degree-r polynomial of the boundary formula, via the K_j double sum of
// terminating 4F3 values (computed in double-double precision).
RealPolynomial pr_polynomial(const Params& p, const Shift& s, const Precision& prec);

// B * P_r as a single object, stable under the perturb-and-average policy
// when B vanishes at a gamma pole while the product stays finite.
RealPolynomial effective_weight(const Params& p, const Shift& s, const Precision& prec);

// Independent cross-check of pr_polynomial: sample Im R on the upper bank,
// invert the boundary formula pointwise and solve the Vandermonde system.
RealPolynomial pr_fit_from_boundary(const Params& p, const Shift& s,
                                    const Precision& prec);

// Im R_{n1,n2,m}(x ± i0) through the closed boundary formula.
double boundary_imag(const Params& p, const Shift& s, double x, Bank bank,
                     const Precision& prec);

} // namespace hypratio

#endif
