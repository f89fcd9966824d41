#ifndef HYPRATIO_TYPES_HPP
#define HYPRATIO_TYPES_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace hypratio {

using cplx = std::complex<double>;

enum class ErrorCode {
    Param = 2,    // invalid parameter combination
    Numeric = 3,  // quadrature / zero-search / convergence failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ParamError : Error {
    explicit ParamError(const std::string& what) : Error(ErrorCode::Param, what) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(ErrorCode::Numeric, what) {}
};

// True when x is a non-negative integer (within tol).
inline bool is_nonneg_int(double x, double tol = 1e-12) {
    return x > -tol && std::fabs(x - std::round(x)) < tol;
}

// True when x is in {0, -1, -2, ...} (within tol).
inline bool is_nonpos_int(double x, double tol = 1e-12) {
    return x < tol && std::fabs(x - std::round(x)) < tol;
}

inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }
inline double neg_part(double x) { return x < 0.0 ? x : 0.0; }

// Real triple (a, b, c) of the base hypergeometric function.
struct Params {
    double a, b, c;

    Params(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
        if (is_nonpos_int(c))
            throw ParamError("c must not be zero or a negative integer");
    }

    // F is a polynomial (possibly times a power of 1-z) exactly when one of
    // a, b, c-a, c-b is a non-positive integer.
    bool degenerate(double tol = 1e-12) const {
        return is_nonpos_int(a, tol) || is_nonpos_int(b, tol) ||
               is_nonpos_int(c - a, tol) || is_nonpos_int(c - b, tol);
    }
};

// Integer parameter shift of the numerator function.
struct Shift {
    int n1 = 0, n2 = 0, m = 0;

    Shift() = default;
    Shift(int n1_, int n2_, int m_) : n1(n1_), n2(n2_), m(m_) {}

    Params apply(const Params& p) const {
        if (is_nonpos_int(p.c + m))
            throw ParamError("c+m must not be zero or a negative integer");
        return Params(p.a + n1, p.b + n2, p.c + m);
    }
};

struct Precision {
    int working_digits = 32;
    double series_tolerance = 1e-16;
    int max_terms = 4000;
};

enum class Bank { Upper, Lower };

inline int bank_sign(Bank b) { return b == Bank::Upper ? +1 : -1; }
inline Bank other_bank(Bank b) { return b == Bank::Upper ? Bank::Lower : Bank::Upper; }

// A point of the cut plane, or a boundary point x±i0 on the cut [1,inf).
struct CutPlanePoint {
    cplx z;
    std::optional<std::pair<double, Bank>> on_cut;

    static CutPlanePoint at(cplx z) {
        if (z.imag() == 0.0 && z.real() >= 1.0)
            throw ParamError("point on [1,inf) requires an explicit bank");
        return {z, std::nullopt};
    }

    static CutPlanePoint boundary(double x, Bank bank) {
        if (!(x > 1.0)) throw ParamError("boundary point requires x > 1");
        CutPlanePoint pt;
        pt.z = cplx(x, bank == Bank::Upper ? +0.0 : -0.0);
        pt.on_cut = {x, bank};
        return pt;
    }

    // Signed-zero representative: x + (+0)i on the upper bank, x + (-0)i on
    // the lower one, so principal-branch powers take the correct limits.
    cplx signed_z() const { return z; }
};

} // namespace hypratio

#endif
