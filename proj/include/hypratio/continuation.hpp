#ifndef HYPRATIO_CONTINUATION_HPP
#define HYPRATIO_CONTINUATION_HPP

#include "hypratio/types.hpp"

namespace hypratio {

// 2F1(a,b;c;z) on the principal branch, anywhere in C \ [1,inf) and on both
// banks of the branch cut. Region-based dispatch among the six standard
// linear-transformation arguments; the small zone where every image has
// modulus near 1 falls back to ODE path continuation.
cplx hyp2f1(const Params& p, const CutPlanePoint& pt, const Precision& prec);

// Boundary value 2F1(a,b;c;x ± i0) for x > 1.
cplx hyp2f1_boundary(const Params& p, double x, Bank bank, const Precision& prec);

// d/dz 2F1(a,b;c;z) via the contiguous shift (ab/c) 2F1(a+1,b+1;c+1;z).
cplx hyp2f1_derivative(const Params& p, const CutPlanePoint& pt,
                       const Precision& prec);

// Independent oracle: integrates the hypergeometric ODE
//   z(1-z) w'' + (c - (a+b+1)z) w' - ab w = 0
// along a path from a series-valid anchor to pt, passing above or below the
// cut according to the requested bank.
cplx hyp2f1_ode_oracle(const Params& p, const CutPlanePoint& pt,
                       const Precision& prec, double cut_clearance = 1e-3);

} // namespace hypratio

#endif
