#ifndef HYPRATIO_SPECIAL_CORE_HPP
#define HYPRATIO_SPECIAL_CORE_HPP

#include <array>
#include <initializer_list>

#include "hypratio/dd.hpp"
#include "hypratio/types.hpp"

namespace hypratio {

// (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
double rising_factorial(double a, int n);

// Generalized Pochhammer allowing negative order: (a)_{-k} = 1/((a-k)_k).
// Throws NumericError if a negative-order factor vanishes.
dd pochhammer_dd(dd a, int n);

// 1/Gamma(x); exactly 0 at the poles of Gamma (x in {0,-1,-2,...}).
double reciprocal_gamma(double x);

// Sign of Gamma(x) for x not a pole; +1 for x > 0.
int gamma_sign(double x);

// prod Gamma(num_i) / prod Gamma(den_i), computed through lgamma.
// A pole among the denominators sends the ratio to zero; a pole among the
// numerators throws (callers perturb parameters before getting here).
double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den);

// Power-series 2F1 inside the unit disc, or the exact finite sum when the
// series terminates (-a or -b a non-negative integer).
cplx hyp2f1_series(const Params& p, cplx z, const Precision& prec);

// Terminating 4F3 at unit argument; top[0] must be a non-positive integer.
// A vanishing bottom Pochhammer at an index before termination throws
// NumericError (singular term; callers apply the perturbation policy).
double hyp4f3_terminating(const std::array<double, 4>& top,
                          const std::array<double, 3>& bottom,
                          const Precision& prec);

dd hyp4f3_terminating_dd(const std::array<dd, 4>& top,
                         const std::array<dd, 3>& bottom);

} // namespace hypratio

#endif
