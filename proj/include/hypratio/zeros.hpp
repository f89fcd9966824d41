#ifndef HYPRATIO_ZEROS_HPP
#define HYPRATIO_ZEROS_HPP

#include <array>
#include <optional>
#include <vector>

#include "hypratio/types.hpp"

namespace hypratio {

// The multiset {a, b, c-a, c-b} in non-decreasing order, together with the
// sign S of Gamma(xi1)...Gamma(xi4) (meaningful only off the Gamma poles).
struct XiQuadruple {
    std::array<double, 4> xi;
    int S;
};

XiQuadruple xi_quadruple(const Params& p);

struct RunckelResult {
    int nu;           // zeros in C \ [1,inf) plus the upper bank
    bool degenerate;  // 2F1 reduces to (1-z)^s times a polynomial
};

// Closed-form zero count. Throws NumericError when a xi_j is within 1e-9 of
// a non-positive integer in the non-degenerate branch (Gamma sign unstable).
RunckelResult runckel_count(const Params& p);

enum class PoleFreeCondition { I, II, III, IV, V, VI };

// First matching zero-free criterion, or nullopt; boundary equalities use a
// 1e-12 tolerance.
std::optional<PoleFreeCondition> pole_free_condition(const Params& p);

const char* to_string(PoleFreeCondition c);

struct LocatedZero {
    cplx location;
    bool complex_pair;  // stored once with Im > 0, counts twice
};

struct ZeroReport {
    int count = 0;
    std::vector<LocatedZero> zeros;
    std::vector<cplx> residues;  // filled by callers that know the shift
    bool degenerate = false;
};

// Finds all count zeros: argument-principle winding over growing rectangles
// with recursive subdivision and Newton polishing; degenerate parameters go
// through companion-matrix roots of the terminating polynomial instead.
// Never returns fewer zeros silently; mismatch raises NumericError.
ZeroReport locate_zeros(const Params& p, const Precision& prec);

// Residue of the shifted/base ratio at a simple zero beta of the base 2F1:
// numerator(beta) / F'(beta). Rejects the zero shift and non-simple zeros.
cplx residue_at_pole(const Params& p, const Shift& s, cplx beta, const Precision& prec);

} // namespace hypratio

#endif
