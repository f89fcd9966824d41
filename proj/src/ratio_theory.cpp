#include "hypratio/ratio_theory.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <sstream>

#include "hypratio/continuation.hpp"
#include "hypratio/dd.hpp"
#include "hypratio/special_core.hpp"

namespace hypratio {

IndexData derive_indices(const Shift& s) {
    IndexData d;
    d.n_low = std::min(s.n1, s.n2);
    d.n_high = std::max(s.n1, s.n2);
    d.p = std::max(s.m - s.n1 - s.n2, 0);
    d.l = std::max(s.n1 + s.n2 - s.m, 0);
    d.r = d.l + std::max(s.m, 0) - d.n_low - 1;
    return d;
}

bool RealPolynomial::is_zero() const {
    for (double c : coeffs)
        if (c != 0.0) return false;
    return true;
}

double RealPolynomial::operator()(double t) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

cplx RealPolynomial::operator()(cplx t) const {
    cplx v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs.size() <= 1) return RealPolynomial{};
    std::vector<double> d(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * double(i);
    return RealPolynomial(std::move(d));
}

double coefficient_B(const Params& p, const Shift& s) {
    double gc = std::tgamma(p.c) * std::tgamma(p.c + s.m);
    return -gc * reciprocal_gamma(p.a) * reciprocal_gamma(p.b) *
           reciprocal_gamma(p.c - p.a + s.m - s.n1) *
           reciprocal_gamma(p.c - p.b + s.m - s.n2);
}

namespace {
constexpr double kIntTol = 1e-9;
bool nni(double x) { return is_nonneg_int(x, kIntTol); }
} // namespace

double eta(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    if ((nni(-a) && nni(b - c)) || (nni(-b) && nni(a - c))) return pos_part(c - a - b);
    if ((nni(-a) || nni(-b)) && !nni(a - c) && !nni(b - c)) return 0.0;
    if (!nni(-a) && !nni(-b) && (nni(a - c) || nni(b - c))) return c - a - b;
    return neg_part(c - a - b);
}

double zeta(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    if (nni(b - c) || nni(-a)) return -a;
    if (nni(a - c) || nni(-b)) return -b;
    return -std::min(a, b);
}

namespace {

// Minimal integer strictly greater than x; float noise within 1e-9 of an
// integer snaps to that integer first.
int strict_above(double x) {
    double r = std::round(x);
    if (std::fabs(x - r) < kIntTol) return static_cast<int>(r) + 1;
    return static_cast<int>(std::floor(x)) + 1;
}

} // namespace

std::pair<int, int> select_MN(const Params& p, const Shift& s, bool q_absorbs_infinity) {
    Params ps = s.apply(p);
    double boundM = eta(p) - eta(ps) - 1.0;
    int M = std::max(0, strict_above(boundM));
    double zdiff = zeta(ps) - zeta(p);
    double zr = std::round(zdiff);
    if (std::fabs(zdiff - zr) < kIntTol) zdiff = zr;
    int N;
    if (q_absorbs_infinity && zdiff >= 0.0) {
        // a rational correction absorbs the non-decaying part at infinity
        N = std::max(0, M + static_cast<int>(std::ceil(zdiff)));
    } else {
        N = std::max(0, strict_above(M + zdiff));
    }
    return {M, N};
}

namespace {

dd binom_dd(int n, int k) {
    if (k < 0 || k > n) return dd(0.0);
    dd r(1.0);
    for (int i = 0; i < k; ++i) r = r * dd(double(n - i)) / dd(double(i + 1));
    return r;
}

// One of the two symmetric halves of K_j. Returns 0 under the 1/(-i)! = 0
// convention when j + n1 < 0.
dd kj_half(dd a, dd b, dd c, int n1, int n2, int m, int j) {
    if (j + n1 < 0) return dd(0.0);
    dd den_poch = pochhammer_dd(b - a, n2 + j + 1);
    if (std::fabs(den_poch.to_double()) < 1e-280)
        throw NumericError("singular Pochhammer prefactor in K_j");
    dd pref = pochhammer_dd(dd(1.0) - a, j) * pochhammer_dd(c - a, m + j) /
              (den_poch * pochhammer_dd(dd(1.0), j + n1));
    if (is_zero(pref)) return dd(0.0);
    std::array<dd, 4> top{dd(double(-j - n1)), a, dd(1.0) + a - c, a - b - dd(double(n2 + j))};
    std::array<dd, 3> bot{a - dd(double(j)), dd(1.0) + a - c - dd(double(m + j)),
                          dd(1.0) + a - b};
    return pref * hyp4f3_terminating_dd(top, bot);
}

std::vector<double> pr_coeffs_raw(const Params& p, const Shift& s) {
    IndexData ix = derive_indices(s);
    if (ix.r < 0) return {};

    dd a(p.a), b(p.b), c(p.c);
    std::map<int, dd> kj;
    auto K = [&](int j) -> dd {
        auto it = kj.find(j);
        if (it != kj.end()) return it->second;
        dd v;
        try {
            v = kj_half(a, b, c, s.n1, s.n2, s.m, j) +
                kj_half(b, a, c, s.n2, s.n1, s.m, j);
        } catch (const NumericError& e) {
            std::ostringstream os;
            os << "singular K_j at j=" << j << ": " << e.what();
            throw NumericError(os.str());
        }
        kj.emplace(j, v);
        return v;
    };

    std::vector<double> coeffs(ix.r + 1, 0.0);
    int sgn_nbar = (ix.n_high % 2 == 0) ? +1 : -1;
    for (int k = 0; k <= ix.r; ++k) {
        dd inner(0.0);
        int jlo = std::max(k - ix.p, 0) - ix.n_high;
        int jhi = k - ix.n_high;
        for (int j = jlo; j <= jhi; ++j) {
            dd term = binom_dd(ix.p, k - ix.n_high - j) * K(j);
            if ((j % 2 + 2) % 2 == 1) term = -term;
            inner += term;
        }
        int sgn_k = (k % 2 == 0) ? +1 : -1;
        coeffs[k] = double(sgn_nbar * sgn_k) * inner.to_double();
    }
    return coeffs;
}

// Joint perturbation breaking integer relations among a, b, c; the sqrt(2)
// factor keeps the two offsets incommensurate.
Params perturbed(const Params& p, int dir) {
    const double e1 = 1e-8 * dir;
    const double e2 = 1e-8 * std::sqrt(2.0) * dir;
    return Params(p.a + e1, p.b - e1, p.c + e2);
}

} // namespace

RealPolynomial pr_polynomial(const Params& p, const Shift& s, const Precision&) {
    try {
        return RealPolynomial(pr_coeffs_raw(p, s));
    } catch (const NumericError&) {
        // perturb-and-average, first-order cancellation
        std::vector<double> cp = pr_coeffs_raw(perturbed(p, +1), s);
        std::vector<double> cm = pr_coeffs_raw(perturbed(p, -1), s);
        for (size_t i = 0; i < cp.size(); ++i) cp[i] = 0.5 * (cp[i] + cm[i]);
        return RealPolynomial(std::move(cp));
    }
}

RealPolynomial effective_weight(const Params& p, const Shift& s, const Precision& prec) {
    auto dist_to_pole = [](double x) {
        if (x > 0.5) return 1.0;
        return std::fabs(x - std::round(x));
    };
    double dmin = std::min({dist_to_pole(p.a), dist_to_pole(p.b),
                            dist_to_pole(p.c - p.a + s.m - s.n1),
                            dist_to_pole(p.c - p.b + s.m - s.n2)});
    if (dmin > 1e-6) {
        double B = coefficient_B(p, s);
        RealPolynomial pr = pr_polynomial(p, s, prec);
        for (double& c : pr.coeffs) c *= B;
        return pr;
    }
    // B has a gamma pole; the product B*P_r can stay finite and nonzero
    RealPolynomial prp, prm;
    Params pp = perturbed(p, +1), pm = perturbed(p, -1);
    double Bp = coefficient_B(pp, s), Bm = coefficient_B(pm, s);
    prp = pr_polynomial(pp, s, prec);
    prm = pr_polynomial(pm, s, prec);
    size_t n = std::max(prp.coeffs.size(), prm.coeffs.size());
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double vp = i < prp.coeffs.size() ? Bp * prp.coeffs[i] : 0.0;
        double vm = i < prm.coeffs.size() ? Bm * prm.coeffs[i] : 0.0;
        out[i] = 0.5 * (vp + vm);
    }
    return RealPolynomial(std::move(out));
}

double boundary_imag(const Params& p, const Shift& s, double x, Bank bank,
                     const Precision& prec) {
    if (!(x > 1.0)) throw ParamError("boundary_imag requires x > 1");
    IndexData ix = derive_indices(s);
    RealPolynomial w = effective_weight(p, s, prec);
    if (w.coeffs.empty()) return 0.0; // P_{-1} == 0

    cplx F = hyp2f1_boundary(p, x, Bank::Upper, prec);
    double F2 = std::norm(F);
    if (F2 < 1e-16)
        throw NumericError("boundary denominator vanishes on the cut (degenerate case)");

    double v = M_PI * std::pow(x, ix.l - ix.n_low - p.c) *
               std::pow(x - 1.0, p.c - p.a - p.b - ix.l) * w(1.0 / x) / F2;
    return bank_sign(bank) * v;
}

RealPolynomial pr_fit_from_boundary(const Params& p, const Shift& s,
                                    const Precision& prec) {
    IndexData ix = derive_indices(s);
    if (ix.r < 0) throw ParamError("nothing to fit: r = -1 for the zero shift");
    double B = coefficient_B(p, s);
    if (B == 0.0) throw ParamError("pr_fit_from_boundary requires B != 0");

    static const double xs[] = {1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 34.0, 55.0, 89.0};
    int npts = std::min<int>(ix.r + 3, std::size(xs));
    npts = std::max(npts, ix.r + 1);

    Params ps = s.apply(p);
    Eigen::MatrixXd V(npts, ix.r + 1);
    Eigen::VectorXd y(npts);
    for (int i = 0; i < npts; ++i) {
        double x = xs[i];
        cplx Fb = hyp2f1_boundary(p, x, Bank::Upper, prec);
        cplx Fs = hyp2f1_boundary(ps, x, Bank::Upper, prec);
        double im = (Fs / Fb).imag();
        double scale = M_PI * B * std::pow(x, ix.l - ix.n_low - p.c) *
                       std::pow(x - 1.0, p.c - p.a - p.b - ix.l) / std::norm(Fb);
        y(i) = im / scale;
        double u = 1.0 / x, uk = 1.0;
        for (int k = 0; k <= ix.r; ++k) {
            V(i, k) = uk;
            uk *= u;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double cond = svd.singularValues()(0) /
                  svd.singularValues()(svd.singularValues().size() - 1);
    if (cond > 1e10) {
        std::ostringstream os;
        os << "ill-conditioned boundary fit, condition estimate " << cond;
        throw NumericError(os.str());
    }
    Eigen::VectorXd sol = svd.solve(y);
    return RealPolynomial(std::vector<double>(sol.data(), sol.data() + sol.size()));
}

} // namespace hypratio
