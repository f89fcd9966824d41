#include "hypratio/representation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypratio/continuation.hpp"
#include "hypratio/dd.hpp"
#include "hypratio/special_core.hpp"
#include "hypratio/zeros.hpp"

namespace hypratio {

namespace {

constexpr double kNearInt = 1e-6;   // endpoint-asymptotics perturbation zone
constexpr double kPert = 1e-7;      // perturbation step for that zone
constexpr double kTailT = 1e-10;    // below this t: z -> infinity asymptotics
constexpr double kTailU = 1e-8;     // below this x-1: z -> 1 asymptotics
constexpr double kExpClamp = 1e-12; // lift of exactly-critical exponents

double near_int_gap(double v) { return std::fabs(v - std::round(v)); }

// exp(e * log_value) hardened against 0 * (+-inf) for underflowed endpoint
// nodes of the double-exponential grid (e == 0 must win, giving 1).
double pow_exp(double e, double log_value) {
    if (e == 0.0) return 1.0;
    double v = e * log_value;
    if (v < -745.0) return 0.0;
    if (v > 709.0) return std::exp(709.0); // overflow guard; caller-side limits bound this
    return std::exp(v);
}

cplx ipow(cplx z, int n) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Taylor coefficients of num/den at 0 (den[0] != 0), `count` terms.
std::vector<double> series_quotient(const std::vector<double>& num,
                                    const std::vector<double>& den, int count) {
    std::vector<double> r(count, 0.0);
    double d0 = den.empty() ? 0.0 : den[0];
    if (std::fabs(d0) < 1e-300)
        throw ParamError("rational function has a pole at the origin");
    for (int k = 0; k < count; ++k) {
        double v = k < (int)num.size() ? num[k] : 0.0;
        for (int i = 1; i <= k && i < (int)den.size(); ++i) v -= den[i] * r[k - i];
        r[k] = v / d0;
    }
    return r;
}

// Coefficients of (1-z)^M * T(z), ascending.
std::vector<double> bracket_poly(int M, const RealPolynomial& T) {
    std::vector<double> q{1.0};
    for (int i = 0; i < M; ++i) q = poly_mul(q, {1.0, -1.0});
    return poly_mul(q, T.coeffs.empty() ? std::vector<double>{1.0} : T.coeffs);
}

bool same_config(const QuadratureConfig& a, const QuadratureConfig& b) {
    return a.abs_tol == b.abs_tol && a.rel_tol == b.rel_tol &&
           a.max_levels == b.max_levels && a.scheme == b.scheme;
}

double snap_int(double v) {
    double r = std::round(v);
    return std::fabs(v - r) < 1e-9 ? r : v;
}

// ---- endpoint-safe |2F1(a,b;c;x+i0)|^2 on the cut, in scaled form --------
//
// h(t) = t^{-2 zeta} (1-t)^{2 min(c-a-b,0)} / |2F1(a,b;c;1/t + i0)|^2
//
// stays bounded with nonzero endpoint limits; the declared quadrature
// exponents absorb exactly these two factors. Near the endpoints the direct
// boundary evaluation either loses the distance to the endpoint to rounding
// or overflows, so the two-term connection-formula asymptotics take over;
// within kNearInt of the logarithmic cases the parameters are perturbed
// symmetrically and the two values averaged.

double tail_infinity(const Params& P, double log_t, double zt, int depth) {
    if (near_int_gap(P.a - P.b) < kNearInt && depth == 0) {
        return 0.5 * (tail_infinity(Params(P.a + kPert, P.b - kPert, P.c), log_t, zt, 1) +
                      tail_infinity(Params(P.a - kPert, P.b + kPert, P.c), log_t, zt, 1));
    }
    double ga = gamma_ratio({P.c, P.b - P.a}, {P.b, P.c - P.a});
    double gb = gamma_ratio({P.c, P.a - P.b}, {P.a, P.c - P.b});
    double t = std::exp(log_t);
    double ka = 1.0 + P.a * (P.a - P.c + 1.0) / (P.a - P.b + 1.0) * t;
    double kb = 1.0 + P.b * (P.b - P.c + 1.0) / (P.b - P.a + 1.0) * t;
    cplx F = ga * ka * std::polar(pow_exp(P.a + zt, log_t), M_PI * P.a) +
             gb * kb * std::polar(pow_exp(P.b + zt, log_t), M_PI * P.b);
    double n2 = std::norm(F);
    if (!(n2 > 1e-280))
        throw NumericError("cut density: boundary 2F1 modulus vanishes in the far tail");
    return 1.0 / n2;
}

double tail_one(const Params& P, double log_t, double log_u, double zt, double sneg,
                int depth) {
    double s = P.c - P.a - P.b;
    if (near_int_gap(s) < kNearInt && depth == 0) {
        return 0.5 *
               (tail_one(Params(P.a, P.b, P.c + kPert), log_t, log_u, zt, sneg, 1) +
                tail_one(Params(P.a, P.b, P.c - kPert), log_t, log_u, zt, sneg, 1));
    }
    double F1c = gamma_ratio({P.c, s}, {P.c - P.a, P.c - P.b});
    double B1 = gamma_ratio({P.c, -s}, {P.a, P.b});
    double u = std::exp(log_u); // may underflow; only the correction terms need it
    double base = pow_exp(-2.0 * zt, log_t);
    // next term of each connection series in 1 - z = -u
    double k1 = 1.0 - P.a * P.b / (1.0 - s) * u;
    double k2 = 1.0 - (P.c - P.a) * (P.c - P.b) / (1.0 + s) * u;
    if (s > 0.0) {
        cplx F = F1c * k1 + B1 * k2 * std::polar(pow_exp(s, log_u), -M_PI * s);
        double n2 = std::norm(F);
        if (!(n2 > 1e-280))
            throw NumericError("cut density: boundary 2F1 modulus vanishes near x = 1");
        // (1-t)^{2 sneg} with sneg ~ 0 (only a perturbation remainder)
        return base * pow_exp(2.0 * sneg, log_u + log_t) / n2;
    }
    cplx core = B1 * k2 * std::polar(1.0, -M_PI * s) + F1c * k1 * pow_exp(-s, log_u);
    double n2 = std::norm(core);
    if (!(n2 > 1e-280))
        throw NumericError("cut density: boundary 2F1 modulus vanishes near x = 1");
    // (1-t)^{2 sneg} u^{-2s} = t^{2s} u^{2(sneg - s)}; sneg - s is 0 up to
    // the perturbation remainder
    return base * pow_exp(2.0 * s, log_t) * pow_exp(2.0 * (sneg - s), log_u) / n2;
}

const double kLogTailT = std::log(kTailT);
const double kLogTailU = std::log(kTailU);

double scaled_recip_mod2(const Params& P, double t, double logt, double logomt,
                         double zt, double sneg, const Precision& prec) {
    double log_u = logomt - logt; // log(x - 1) for x = 1/t
    if (logt <= kLogTailT) {
        double h = tail_infinity(P, logt, zt, 0);
        return h * std::exp(2.0 * sneg * logomt);
    }
    if (log_u <= kLogTailU) return tail_one(P, logt, log_u, zt, sneg, 0);
    cplx F = hyp2f1_boundary(P, 1.0 / t, Bank::Upper, prec);
    double logm = std::log(std::abs(F));
    return std::exp(-2.0 * zt * logt + 2.0 * sneg * logomt - 2.0 * logm);
}

double eval_ascending(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

// ---- limit of the ratio at infinity ---------------------------------------

// Coefficient of the dominant power of 2F1(a,b;c;-z) as z -> +infinity
// (generic two-term asymptotics; callers exclude the logarithmic case).
double dominant_inf_coef(const Params& P) {
    if (P.a <= P.b) return gamma_ratio({P.c, P.b - P.a}, {P.b, P.c - P.a});
    return gamma_ratio({P.c, P.a - P.b}, {P.a, P.c - P.b});
}

double limit_at_infinity(const Params& p, const Shift& s) {
    auto one = [&](const Params& pb) {
        Params psh = s.apply(pb);
        double cb = dominant_inf_coef(pb);
        double cs = dominant_inf_coef(psh);
        if (std::fabs(cb) < 1e-280)
            throw NumericError("limit at infinity indeterminate (vanishing base coefficient)");
        return cs / cb;
    };
    Params ps = s.apply(p);
    if (near_int_gap(p.a - p.b) < kNearInt || near_int_gap(ps.a - ps.b) < kNearInt) {
        return 0.5 * (one(Params(p.a + kPert, p.b - kPert, p.c)) +
                      one(Params(p.a - kPert, p.b + kPert, p.c)));
    }
    return one(p);
}

// ---- pole data for the Q / T strategies ------------------------------------

struct PoleFactor {
    RealPolynomial factor;   // monic, degree 1 (real zero) or 2 (conjugate pair)
    RealPolynomial res_num;  // numerator of the partial fraction over `factor`
};

std::vector<PoleFactor> pole_factors(const Params& p, const Shift& s,
                                     const ZeroReport& zr, bool with_residues,
                                     const Precision& prec) {
    std::vector<PoleFactor> out;
    for (const auto& lz : zr.zeros) {
        cplx beta = lz.location;
        cplx rho(0.0, 0.0);
        if (with_residues) rho = residue_at_pole(p, s, beta, prec);
        PoleFactor f;
        if (!lz.complex_pair) {
            f.factor = RealPolynomial({-beta.real(), 1.0});
            f.res_num = RealPolynomial({rho.real()});
        } else {
            f.factor = RealPolynomial({std::norm(beta), -2.0 * beta.real(), 1.0});
            // rho/(z-beta) + conj(rho)/(z-conj(beta))
            f.res_num = RealPolynomial(
                {-2.0 * std::real(rho * std::conj(beta)), 2.0 * rho.real()});
        }
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

// ---- RationalFunction ------------------------------------------------------

cplx RationalFunction::operator()(cplx z) const {
    if (is_zero()) return cplx(0.0, 0.0);
    cplx den = denominator(z);
    if (std::abs(den) < 1e-13 * (1.0 + std::abs(numerator(z))))
        throw NumericError("rational function evaluated at a pole");
    return numerator(z) / den;
}

double RationalFunction::operator()(double z) const {
    cplx v = (*this)(cplx(z, 0.0));
    return v.real();
}

std::vector<double> RationalFunction::taylor_at_zero(int count) const {
    if (count <= 0) return {};
    if (is_zero()) return std::vector<double>(count, 0.0);
    return series_quotient(numerator.coeffs, denominator.coeffs, count);
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::PoleFree: return "pole-free";
        case Strategy::QCorrection: return "q-correction";
        case Strategy::TMultiplier: return "t-multiplier";
    }
    return "?";
}

// ---- direct ratio and Taylor machinery -------------------------------------

cplx ratio_direct(const Params& p, const Shift& s, const CutPlanePoint& pt,
                  const Precision& prec) {
    Params ps = s.apply(p);
    cplx num = pt.on_cut ? hyp2f1_boundary(ps, pt.on_cut->first, pt.on_cut->second, prec)
                         : hyp2f1(ps, pt, prec);
    cplx den = pt.on_cut ? hyp2f1_boundary(p, pt.on_cut->first, pt.on_cut->second, prec)
                         : hyp2f1(p, pt, prec);
    if (std::abs(den) < 1e-12 * (1.0 + std::abs(num))) {
        std::ostringstream os;
        os << "ratio has a pole near z = (" << pt.z.real() << ", " << pt.z.imag() << ")";
        throw NumericError(os.str());
    }
    return num / den;
}

namespace {

// Taylor coefficients of 2F1(a,b;c;z) at 0 in double-double, terms 0..order.
std::vector<dd> series_coeffs_dd(const Params& p, int order) {
    std::vector<dd> u(order + 1, dd(1.0));
    for (int k = 1; k <= order; ++k) {
        double kk = double(k);
        u[k] = u[k - 1] * dd(p.a + kk - 1.0) * dd(p.b + kk - 1.0) /
               (dd(p.c + kk - 1.0) * dd(kk));
    }
    return u;
}

} // namespace

std::vector<double> ratio_taylor_coeffs(const Params& p, const Shift& s, int order,
                                        const Precision&) {
    if (order < 0 || order > 64)
        throw ParamError("ratio_taylor_coeffs: order must lie in [0, 64]");
    Params ps = s.apply(p);
    std::vector<dd> u = series_coeffs_dd(ps, order);
    std::vector<dd> v = series_coeffs_dd(p, order);
    std::vector<dd> r(order + 1, dd(0.0));
    r[0] = dd(1.0);
    for (int k = 1; k <= order; ++k) {
        dd acc = u[k];
        for (int i = 1; i <= k; ++i) acc -= v[i] * r[k - i];
        r[k] = acc;
    }
    std::vector<double> out(order + 1);
    for (int k = 0; k <= order; ++k) out[k] = r[k].to_double();
    return out;
}

std::vector<double> ratio_derivatives_fdb(const Params& p, const Shift& s, int order,
                                          const Precision&) {
    if (order < 0 || order > 12)
        throw ParamError("ratio_derivatives_fdb: order must lie in [0, 12]");
    Params ps = s.apply(p);
    std::vector<dd> f = series_coeffs_dd(p, order);   // denominator series
    std::vector<dd> g = series_coeffs_dd(ps, order);  // numerator series
    auto trunc_mul = [order](const std::vector<dd>& a, const std::vector<dd>& b) {
        std::vector<dd> r(order + 1, dd(0.0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<double> out(order + 1, 0.0);
    for (int n = 0; n <= order; ++n) {
        std::vector<dd> gfk = g; // g * f^k, k = 0 to start
        dd sum(0.0);
        dd binom(double(n + 1)); // C(n+1, k+1), starts at k = 0
        double sign = 1.0;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) {
                gfk = trunc_mul(gfk, f);
                binom = binom * dd(double(n + 1 - k - 1 + 1)) / dd(double(k + 1));
                sign = -sign;
            }
            sum += dd(sign) * binom * gfk[n];
        }
        double fact = 1.0;
        for (int i = 2; i <= n; ++i) fact *= double(i);
        out[n] = sum.to_double() * fact;
    }
    return out;
}

// ---- Schwarz reconstruction -----------------------------------------------

cplx schwarz_reconstruct(const std::vector<double>& f_taylor, const RealPolynomial& q,
                         int N, const WeightedDensity* mapped_u, cplx z,
                         const QuadratureConfig&) {
    if (q.is_zero()) throw ParamError("schwarz_reconstruct: q must not vanish identically");
    if (N < 0) throw ParamError("schwarz_reconstruct: N must be non-negative");
    cplx qz = q(z);
    if (std::abs(qz) < 1e-300)
        throw NumericError("schwarz_reconstruct: evaluation at a zero of q");
    cplx sum(0.0, 0.0);
    cplx zk(1.0, 0.0);
    for (int k = 0; k < N; ++k) {
        double inner = 0.0;
        for (int j = 0; j <= k; ++j) {
            double qc = (k - j) < (int)q.coeffs.size() ? q.coeffs[k - j] : 0.0;
            double fc = j < (int)f_taylor.size() ? f_taylor[j] : 0.0;
            inner += qc * fc;
        }
        sum += zk * inner;
        zk *= z;
    }
    cplx val = sum / qz;
    if (mapped_u) {
        cplx I = mapped_u->integrate([z](double t, double) {
                              return 1.0 / (cplx(1.0, 0.0) - z * t);
                          })
                     .value;
        val += ipow(z, N) / qz * I;
    }
    return val;
}

// ---- mapped density and the cut integral ----------------------------------

std::shared_ptr<const WeightedDensity> mapped_density(const IntegrandWeight& w,
                                                      const RealPolynomial& T,
                                                      const QuadratureConfig& cfg,
                                                      const Precision& prec) {
    if (w.B_times_Pr.is_zero()) return nullptr;
    std::vector<double> tc = T.coeffs.empty() ? std::vector<double>{1.0} : T.coeffs;
    int d = (int)tc.size() - 1;
    std::vector<double> rev(tc.rbegin(), tc.rend()); // t^d T(1/t)
    double e1 = w.exp_x_minus_1;
    double e0 = -w.exp_x - e1 - 1.0 - double(d);
    double p_de = e0, q_de = e1;
    WeightedDensity::DensityFn g;
    RealPolynomial bp = w.B_times_Pr;
    if (w.unit_denominator) {
        g = [rev, bp](double t, double, double, double) {
            return eval_ascending(rev, t) * bp(t);
        };
    } else {
        Params P = w.params;
        double zt = zeta(P);
        double sneg = std::min(P.c - P.a - P.b, 0.0);
        p_de += 2.0 * zt;
        q_de -= 2.0 * sneg;
        g = [rev, bp, P, zt, sneg, prec](double t, double, double logt, double logomt) {
            return eval_ascending(rev, t) * bp(t) *
                   scaled_recip_mod2(P, t, logt, logomt, zt, sneg, prec);
        };
    }
    // Exactly-critical exponents occur in the logarithmic zone, where the
    // density still decays like an inverse square logarithm; lift the
    // declared exponent infinitesimally so the endpoint algebra stays valid.
    bool clamped = false;
    for (double* e : {&p_de, &q_de}) {
        if (*e <= -1.0 - 1e-9)
            throw NumericError("cut integrand is not integrable with these exponents");
        if (*e <= -1.0 + kExpClamp) {
            *e = -1.0 + kExpClamp;
            clamped = true;
        }
    }
    QuadratureConfig use = cfg;
    // A clamped exponent means an inverse-square-logarithm endpoint; the
    // double-exponential level gap then shrinks only linearly, so the default
    // tolerances are unreachable. The gap bounds the remaining error, and
    // these results carry a widened 1e-6 accuracy expectation anyway.
    if (clamped) {
        use.abs_tol = std::max(use.abs_tol, 1e-7);
        use.rel_tol = std::max(use.rel_tol, 1e-7);
    }
    // Near-critical endpoint exponents concentrate mass at scales where the
    // asymptotic/direct seam of the boundary modulus sits; grant the
    // double-exponential refinement extra depth there.
    if (std::min(p_de, q_de) < -0.8 && use.max_levels < 16) use.max_levels = 16;
    return std::make_shared<WeightedDensity>(p_de, q_de, std::move(g), use);
}

cplx cauchy_integral(const IntegrandWeight& w, const RealPolynomial& T, cplx z,
                     const QuadratureConfig& quad, const Precision& prec) {
    auto D = mapped_density(w, T, quad, prec);
    if (!D) return cplx(0.0, 0.0);
    return D->integrate([z](double t, double) { return 1.0 / (cplx(1.0, 0.0) - z * t); })
        .value;
}

// ---- building the representation ------------------------------------------

Representation build_representation(const Params& p, const Shift& s, Strategy strategy,
                                    const Precision& prec, int extra_M, int extra_N) {
    if (extra_M < 0 || extra_N < 0)
        throw ParamError("build_representation: extra orders must be non-negative");
    // Each extra power of (1-z)^M raises the growth of (1-z)^M T R at
    // infinity by one; the subtracted Taylor block must grow with it, so
    // (M, N) stays admissible only when N is enlarged at least as much.
    if (extra_N < extra_M)
        throw ParamError(
            "build_representation: enlarging M requires enlarging N at least as much");
    Params ps = s.apply(p);
    (void)ps;

    bool degenerate_params = p.degenerate(1e-12);
    ZeroReport zr;
    bool zeros_known = false;
    if (degenerate_params) {
        // The terminating (1-z)^sigma * polynomial case: the boundary density
        // can blow up on the cut unless no zero sits on [1, inf).
        zr = locate_zeros(p, prec);
        zeros_known = true;
        for (const auto& lz : zr.zeros) {
            if (!lz.complex_pair && lz.location.imag() == 0.0 &&
                lz.location.real() >= 1.0 - 1e-12)
                throw ParamError(
                    "degenerate parameters with a zero on the cut: representation refused");
        }
    }

    IndexData ix = derive_indices(s);
    auto [M0, N0] = select_MN(p, s, strategy != Strategy::PoleFree);
    Representation rep;
    rep.params = p;
    rep.shift = s;
    rep.strategy = strategy;
    rep.M = M0 + extra_M;
    rep.N = N0 + extra_N;
    rep.log_flag = near_int_gap(p.c - p.a - p.b) < 1e-3 || near_int_gap(p.a - p.b) < 1e-3;

    bool zero_shift = (s.n1 == 0 && s.n2 == 0 && s.m == 0);

    if (strategy == Strategy::PoleFree) {
        if (!pole_free_condition(p))
            throw ParamError("pole-free strategy requires a zero-free parameter class");
        rep.Q = RationalFunction{};
        rep.T = RealPolynomial({1.0});
        rep.d = 0;
    } else {
        double zdiff = snap_int(zeta(s.apply(p)) - zeta(p));
        if (zdiff > 1e-9)
            throw ParamError(
                "ratio grows at infinity; a constant-plus-poles correction cannot absorb "
                "it (use the pole-free path where applicable)");
        double cinf = (std::fabs(zdiff) <= 1e-9) ? limit_at_infinity(p, s) : 0.0;

        if (!zeros_known && !zero_shift) {
            zr = locate_zeros(p, prec);
            zeros_known = true;
        }
        if (zero_shift) zr = ZeroReport{};

        if (strategy == Strategy::QCorrection) {
            auto fs = pole_factors(p, s, zr, /*with_residues=*/true, prec);
            std::vector<double> den{1.0};
            for (const auto& f : fs) den = poly_mul(den, f.factor.coeffs);
            std::vector<double> num = den;
            for (double& c : num) c *= cinf;
            for (size_t i = 0; i < fs.size(); ++i) {
                std::vector<double> rest{1.0};
                for (size_t j = 0; j < fs.size(); ++j)
                    if (j != i) rest = poly_mul(rest, fs[j].factor.coeffs);
                std::vector<double> term = poly_mul(fs[i].res_num.coeffs, rest);
                if (term.size() > num.size()) num.resize(term.size(), 0.0);
                for (size_t k = 0; k < term.size(); ++k) num[k] += term[k];
            }
            rep.Q = RationalFunction{RealPolynomial(std::move(num)),
                                     RealPolynomial(std::move(den))};
            rep.T = RealPolynomial({1.0});
            rep.d = 0;
        } else { // TMultiplier
            auto fs = pole_factors(p, s, zr, /*with_residues=*/false, prec);
            std::vector<double> tc{1.0};
            for (const auto& f : fs) tc = poly_mul(tc, f.factor.coeffs);
            rep.T = RealPolynomial(tc);
            rep.d = rep.T.degree();
            int d = rep.d;
            std::vector<double> qnum(d + 1, 0.0);
            if (d > 0) {
                std::vector<double> rser =
                    ratio_taylor_coeffs(p, s, std::max(d - 1, 0), prec);
                for (int j = 0; j < d; ++j) {
                    double acc = 0.0;
                    for (int n = 0; n <= j; ++n) acc += rser[n] * tc[j - n];
                    qnum[j] = acc;
                }
            }
            qnum[d] = cinf;
            rep.Q = RationalFunction{RealPolynomial(std::move(qnum)), rep.T};
        }
    }

    int L = rep.N + rep.d;
    rep.taylor.assign(L, 0.0);
    if (L > 0) {
        std::vector<double> rser = ratio_taylor_coeffs(p, s, L - 1, prec);
        std::vector<double> qser = rep.Q.taylor_at_zero(L);
        for (int k = 0; k < L; ++k) rep.taylor[k] = rser[k] - qser[k];
    }

    rep.weight.B_times_Pr = effective_weight(p, s, prec);
    rep.weight.exp_x = double(ix.l - ix.n_low) - p.c - double(rep.N + rep.d);
    rep.weight.exp_x_minus_1 = double(rep.M) + p.c - p.a - p.b - double(ix.l);
    rep.weight.params = p;
    rep.density_config = QuadratureConfig{};
    rep.density = mapped_density(rep.weight, rep.T, rep.density_config, prec);
    return rep;
}

// ---- evaluating the representation ----------------------------------------

cplx eval_representation(const Representation& rep, const CutPlanePoint& pt,
                         const QuadratureConfig& quad, const Precision& prec) {
    cplx z = pt.signed_z();
    bool banked = pt.on_cut.has_value();
    if (!banked && z.real() > 1.0 && std::fabs(z.imag()) < 1e-6)
        throw ParamError("evaluation this close to the cut requires an explicit bank");
    if (std::abs(z - 1.0) < 1e-12)
        throw ParamError("z = 1 lies on the boundary of the cut plane");

    cplx Tz = rep.T(z);
    double scale = 1.0 + std::abs(z);
    if (std::abs(Tz) < 1e-10 * std::pow(scale, std::max(rep.d, 1)))
        throw NumericError("evaluation at a root of the polynomial multiplier");
    cplx Qz = rep.Q.is_zero() ? cplx(0.0, 0.0) : rep.Q(z);

    std::vector<double> qc = bracket_poly(rep.M, rep.T);
    cplx ksum(0.0, 0.0);
    cplx zk(1.0, 0.0);
    int L = rep.N + rep.d;
    for (int k = 0; k < L; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k && j < (int)rep.taylor.size(); ++j) {
            if (k - j < (int)qc.size()) conv += rep.taylor[j] * qc[k - j];
        }
        ksum += zk * conv;
        zk *= z;
    }
    ksum /= ipow(cplx(1.0, 0.0) - z, rep.M) * Tz;

    cplx result = Qz + ksum;
    if (!rep.weight.B_times_Pr.is_zero()) {
        std::shared_ptr<const WeightedDensity> local;
        const WeightedDensity* D = nullptr;
        if (rep.density && same_config(rep.density_config, quad)) {
            D = rep.density.get();
        } else {
            local = mapped_density(rep.weight, rep.T, quad, prec);
            D = local.get();
        }
        cplx I;
        if (banked) {
            double x = pt.on_cut->first;
            auto pv = D->pv_cauchy(x);
            double jump = M_PI * D->value_at(1.0 / x) / x;
            I = pv.value + cplx(0.0, bank_sign(pt.on_cut->second) * jump);
        } else {
            I = D->integrate([z](double t, double) {
                     return 1.0 / (cplx(1.0, 0.0) - z * t);
                 }).value;
        }
        cplx pref = ipow(z, L) / (ipow(z - 1.0, rep.M) * Tz);
        result += pref * I;
    }
    return result;
}

// ---- closed forms from the product identities ------------------------------

namespace {

// Shared kernel: integral of t^{p_t}(1-t)^{q_t} pref / (|2F1(a,b;c;1/t)|^2 ...)
// against a caller-supplied kernel, with the endpoint fold of mapped_density.
std::shared_ptr<const WeightedDensity> beta_like_density(const Params& P, double pref,
                                                         double p_t, double q_t,
                                                         const QuadratureConfig& quad,
                                                         const Precision& prec) {
    IntegrandWeight w;
    w.params = P;
    w.B_times_Pr = RealPolynomial({pref});
    w.exp_x_minus_1 = q_t;
    w.exp_x = -p_t - q_t - 1.0;
    return mapped_density(w, RealPolynomial({1.0}), quad, prec);
}

void require_zero_free(const Params& P, const char* what) {
    if (!pole_free_condition(P)) {
        std::ostringstream os;
        os << what << " requires a zero-free parameter class";
        throw ParamError(os.str());
    }
}

} // namespace

cplx gauss_ratio_repr(const Params& P, const CutPlanePoint& pt,
                      const QuadratureConfig& quad, const Precision& prec) {
    auto cond = pole_free_condition(P);
    if (!cond) throw ParamError("gauss_ratio_repr requires a zero-free parameter class");
    if (*cond == PoleFreeCondition::VI && std::fabs(P.c - P.a) < 1e-9)
        throw ParamError("gauss_ratio_repr: c = a excluded (non-integrable boundary density)");
    double cons = 0.0;
    if (P.b > P.a) {
        if (std::fabs(P.b) < 1e-12 || std::fabs(P.c - P.a) < 1e-12)
            throw ParamError("gauss_ratio_repr: vanishing denominator in the limit constant");
        cons = P.c * (P.b - P.a) / (P.b * (P.c - P.a));
    }
    double pref =
        gamma_ratio({P.c, P.c + 1.0}, {P.a, P.b + 1.0, P.c - P.b, P.c - P.a + 1.0});
    auto D = beta_like_density(P, pref, P.a + P.b - 1.0, P.c - P.a - P.b, quad, prec);
    cplx I;
    if (pt.on_cut) {
        double x = pt.on_cut->first;
        auto pv = D->pv_cauchy(x);
        I = pv.value + cplx(0.0, bank_sign(pt.on_cut->second) * M_PI *
                                     D->value_at(1.0 / x) / x);
    } else {
        cplx z = pt.z;
        I = D->integrate([z](double t, double) {
                 return 1.0 / (cplx(1.0, 0.0) - z * t);
             }).value;
    }
    return cons + I;
}

cplx product_r111_r001(const Params& P, const CutPlanePoint& pt,
                       const QuadratureConfig& quad, const Precision& prec) {
    require_zero_free(P, "product_r111_r001");
    if (pt.on_cut) throw ParamError("product_r111_r001: order-2 kernel, off-cut z only");
    double mn = std::min(P.a, P.b);
    if (std::fabs(P.c - mn) < 1e-9 || std::fabs(P.a * P.b) < 1e-12)
        throw ParamError("product_r111_r001: degenerate constant term");
    double Qabc = P.c / (P.c - mn);
    double cons = P.c * P.c / (P.a * P.b) * (1.0 - Qabc);
    double pref = gamma_ratio({P.c + 1.0, P.c + 1.0},
                              {P.a + 1.0, P.b + 1.0, P.c - P.a + 1.0, P.c - P.b + 1.0});
    auto D = beta_like_density(P, pref, P.a + P.b - 1.0, P.c - P.a - P.b, quad, prec);
    cplx z = pt.z;
    double c = P.c;
    cplx I = D->integrate([z, c](double t, double) {
                  cplx den = cplx(1.0, 0.0) - z * t;
                  return (c + z * t * (1.0 - c)) / (den * den);
              }).value;
    return cons + I;
}

cplx product_stieltjes2(const Params& P, const CutPlanePoint& pt,
                        const QuadratureConfig& quad, const Precision& prec) {
    require_zero_free(P, "product_stieltjes2");
    if (pt.on_cut) throw ParamError("product_stieltjes2: order-2 kernel, off-cut z only");
    if (std::fabs(P.c - 1.0) < 1e-9)
        throw ParamError("product_stieltjes2 requires c != 1");
    double mn = std::min(P.a, P.b);
    if (std::fabs(P.c - mn) < 1e-9)
        throw ParamError("product_stieltjes2: degenerate constant term");
    double cons = P.c * (P.c - mn - 1.0) / ((P.c - 1.0) * (P.c - mn));
    double pref = gamma_ratio({P.c - 1.0, P.c + 1.0},
                              {P.a, P.b, P.c - P.a + 1.0, P.c - P.b + 1.0});
    auto D = beta_like_density(P, pref, P.a + P.b - 1.0, P.c - P.a - P.b, quad, prec);
    cplx z = pt.z;
    cplx I = D->integrate([z](double t, double) {
                  cplx den = cplx(1.0, 0.0) - z * t;
                  return 1.0 / (den * den);
              }).value;
    return cons + I;
}

cplx ratio_r010(const Params& P, const CutPlanePoint& pt, const QuadratureConfig& quad,
                const Precision& prec) {
    if (std::fabs(P.b) < 1e-12)
        throw ParamError("ratio_r010: the contiguous relation requires b != 0");
    Strategy st =
        pole_free_condition(P) ? Strategy::PoleFree : Strategy::QCorrection;
    Representation rep = build_representation(P, Shift(0, 0, -1), st, prec);
    cplx r = eval_representation(rep, pt, quad, prec);
    return (P.c - 1.0) / P.b * r - (P.c - P.b - 1.0) / P.b;
}

} // namespace hypratio
