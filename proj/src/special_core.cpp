#include "hypratio/special_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hypratio {

double rising_factorial(double a, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= a + k;
    return r;
}

dd pochhammer_dd(dd a, int n) {
    if (n >= 0) {
        dd r(1.0);
        for (int k = 0; k < n; ++k) r *= a + dd(double(k));
        return r;
    }
    // (a)_{-k} = 1/[(a-1)(a-2)...(a+n)]
    dd r(1.0);
    for (int k = 1; k <= -n; ++k) {
        dd f = a - dd(double(k));
        if (is_zero(f))
            throw NumericError("vanishing factor in negative-order Pochhammer");
        r /= f;
    }
    return r;
}

int gamma_sign(double x) {
    if (x > 0.0) return +1;
    // x in (-(k+1), -k): sign alternates starting negative on (-1,0)
    int k = static_cast<int>(std::floor(-x));
    return (k % 2 == 0) ? -1 : +1;
}

double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    return gamma_sign(x) * std::exp(-std::lgamma(x));
}

double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den) {
    double lg = 0.0;
    int sign = 1;
    for (double x : num) {
        if (is_nonpos_int(x))
            throw NumericError("gamma pole in numerator of gamma ratio");
        lg += std::lgamma(x);
        sign *= gamma_sign(x);
    }
    for (double x : den) {
        if (is_nonpos_int(x)) return 0.0;
        lg -= std::lgamma(x);
        sign *= gamma_sign(x);
    }
    return sign * std::exp(lg);
}

namespace {

// Number of terms when the series terminates through parameter x, or -1.
int terminating_order(double x) {
    if (is_nonpos_int(x)) return static_cast<int>(std::lround(-x));
    return -1;
}

} // namespace

cplx hyp2f1_series(const Params& p, cplx z, const Precision& prec) {
    if (z == cplx(0.0)) return 1.0;

    int na = terminating_order(p.a);
    int nb = terminating_order(p.b);
    int nterm = -1;
    if (na >= 0 && nb >= 0) nterm = std::min(na, nb);
    else if (na >= 0) nterm = na;
    else if (nb >= 0) nterm = nb;

    if (nterm >= 0) {
        // exact finite sum, valid for every z
        cplx sum = 1.0, term = 1.0;
        double a = (na == nterm && na >= 0) ? std::round(p.a) : p.a;
        double b = (nb == nterm && nb >= 0 && na != nterm) ? std::round(p.b) : p.b;
        for (int n = 0; n < nterm; ++n) {
            term *= (a + n) * (b + n) / ((p.c + n) * (n + 1.0)) * z;
            sum += term;
        }
        return sum;
    }

    if (std::abs(z) >= 1.0)
        throw ParamError("hyp2f1_series requires |z| < 1 unless terminating");

    cplx sum = 1.0, term = 1.0;
    int small_streak = 0;
    for (int n = 0; n < prec.max_terms; ++n) {
        term *= (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) < prec.series_tolerance * std::abs(sum)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    std::ostringstream os;
    os << "hyp2f1 series did not converge within " << prec.max_terms
       << " terms at |z|=" << std::abs(z);
    throw NumericError(os.str());
}

dd hyp4f3_terminating_dd(const std::array<dd, 4>& top,
                         const std::array<dd, 3>& bottom) {
    double t0 = top[0].to_double();
    if (!is_nonpos_int(t0, 1e-9))
        throw ParamError("4F3 top[0] must be a non-positive integer");
    int nterm = static_cast<int>(std::lround(-t0));

    dd sum(1.0), term(1.0);
    for (int i = 0; i < nterm; ++i) {
        dd den = (bottom[0] + dd(double(i))) * (bottom[1] + dd(double(i))) *
                 (bottom[2] + dd(double(i))) * dd(double(i + 1));
        if (is_zero(den) || std::fabs(den.to_double()) < 1e-300) {
            std::ostringstream os;
            os << "singular 4F3 term at index " << i;
            throw NumericError(os.str());
        }
        term *= (dd(double(-nterm)) + dd(double(i))) * (top[1] + dd(double(i))) *
                (top[2] + dd(double(i))) * (top[3] + dd(double(i))) / den;
        sum += term;
    }
    return sum;
}

double hyp4f3_terminating(const std::array<double, 4>& top,
                          const std::array<double, 3>& bottom,
                          const Precision&) {
    std::array<dd, 4> t{dd(top[0]), dd(top[1]), dd(top[2]), dd(top[3])};
    std::array<dd, 3> b{dd(bottom[0]), dd(bottom[1]), dd(bottom[2])};
    return hyp4f3_terminating_dd(t, b).to_double();
}

} // namespace hypratio
