#include "hypratio/zeros.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "hypratio/continuation.hpp"
#include "hypratio/special_core.hpp"

namespace hypratio {

namespace {

constexpr double kXiTol = 1e-9;
constexpr double kCondTol = 1e-12;

// F at any point, taking the upper-bank limit on the cut.
cplx eval_F(const Params& p, cplx z, const Precision& prec) {
    if (z.imag() == 0.0 && z.real() >= 1.0)
        return hyp2f1_boundary(p, z.real(), Bank::Upper, prec);
    return hyp2f1(p, CutPlanePoint::at(z), prec);
}

cplx eval_Fprime(const Params& p, cplx z, const Precision& prec) {
    Params up(p.a + 1.0, p.b + 1.0, p.c + 1.0);
    return (p.a * p.b / p.c) * eval_F(up, z, prec);
}

} // namespace

XiQuadruple xi_quadruple(const Params& p) {
    XiQuadruple q;
    q.xi = {p.a, p.b, p.c - p.a, p.c - p.b};
    std::sort(q.xi.begin(), q.xi.end());
    q.S = 1;
    for (double x : q.xi) q.S *= gamma_sign(x);
    return q;
}

RunckelResult runckel_count(const Params& p) {
    // degenerate branch: any of -a, -b, a-c, b-c a non-negative integer
    const double degs[] = {-p.a, -p.b, p.a - p.c, p.b - p.c};
    int xi_min = -1;
    for (double v : degs) {
        if (is_nonneg_int(v, 1e-12)) {
            int n = static_cast<int>(std::llround(v));
            if (xi_min < 0 || n < xi_min) xi_min = n;
        }
    }
    if (xi_min >= 0) return {xi_min, true};

    XiQuadruple q = xi_quadruple(p);
    for (double x : q.xi) {
        if (x < 0.5 && std::fabs(x - std::round(x)) < kXiTol) {
            std::ostringstream os;
            os << "zero count ambiguous: parameter combination " << x
               << " is too close to a non-positive integer";
            throw NumericError(os.str());
        }
    }
    const double x1 = q.xi[0], x4 = q.xi[3];
    if (x1 > 0.0) return {0, false};
    int nu = static_cast<int>(std::floor(-x1)) + (1 + q.S) / 2;
    if (x4 < 0.0) nu += q.S * static_cast<int>(std::floor(1.0 - x4));
    if (nu < 0) throw NumericError("zero count formula produced a negative value");
    return {nu, false};
}

std::optional<PoleFreeCondition> pole_free_condition(const Params& p) {
    const double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b), c = p.c;
    auto le = [](double x, double y) { return x <= y + kCondTol; };
    auto lt = [](double x, double y) { return x < y - kCondTol; };

    if (lt(-1.0, lo) && le(lo, c) && le(c, hi) && le(hi, 0.0))
        return PoleFreeCondition::I;
    if (lt(-1.0, lo) && le(lo, 0.0) && le(0.0, hi) && le(hi, c))
        return PoleFreeCondition::II;
    if (lt(-1.0, c) && le(c, lo) && le(lo, 0.0) && le(0.0, hi) && lt(hi, c + 1.0))
        return PoleFreeCondition::III;
    if (le(0.0, lo) && le(lo, c) && lt(hi, c + 1.0))
        return PoleFreeCondition::IV;
    {
        bool all_neg_nonint = true;
        for (double v : {p.a, p.b, c, c - p.a, c - p.b}) {
            if (!(lt(v, 0.0) && std::fabs(v - std::round(v)) > kCondTol))
                all_neg_nonint = false;
        }
        if (all_neg_nonint) {
            XiQuadruple q = xi_quadruple(p);
            if (std::floor(q.xi[0]) + 1.0 == std::floor(q.xi[3]) &&
                std::floor(q.xi[1]) == std::floor(q.xi[2]))
                return PoleFreeCondition::V;
        }
    }
    for (double v : {p.a, p.b, c - p.a, c - p.b})
        if (std::fabs(v) <= kCondTol) return PoleFreeCondition::VI;
    return std::nullopt;
}

const char* to_string(PoleFreeCondition c) {
    switch (c) {
        case PoleFreeCondition::I: return "I";
        case PoleFreeCondition::II: return "II";
        case PoleFreeCondition::III: return "III";
        case PoleFreeCondition::IV: return "IV";
        case PoleFreeCondition::V: return "V";
        case PoleFreeCondition::VI: return "VI";
    }
    return "?";
}

namespace {

struct Box {
    double x0, x1, y0, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
    bool contains(cplx z, double slack) const {
        return z.real() > x0 - slack && z.real() < x1 + slack &&
               z.imag() > y0 - slack && z.imag() < y1 + slack;
    }
};

class WindingSearch {
public:
    WindingSearch(const Params& p, const Precision& prec) : p_(p), prec_(prec) {}

    int winding(const Box& b) const {
        double phi = 0.0;
        phi += edge({b.x0, b.y0}, {b.x1, b.y0});
        phi += edge({b.x1, b.y0}, {b.x1, b.y1});
        phi += edge({b.x1, b.y1}, {b.x0, b.y1});
        phi += edge({b.x0, b.y1}, {b.x0, b.y0});
        double w = phi / (2.0 * M_PI);
        if (std::fabs(w - std::round(w)) > 0.3)
            throw NumericError("winding integral failed to snap to an integer");
        return static_cast<int>(std::llround(w));
    }

    void collect(const Box& b, int w, std::vector<cplx>& out) const {
        if (w == 0) return;
        double diam = std::max(b.width(), b.height());
        if (w == 1 && diam < 1.5) {
            cplx root;
            if (newton(b, root)) {
                out.push_back(root);
                return;
            }
        }
        if (diam < 1e-5)
            throw NumericError("zero search: cluster or multiple zero in a tiny box");
        double mx = b.x0 + 0.51234567 * b.width();
        double my = b.y0 + 0.48765433 * b.height();
        Box parts[4] = {{b.x0, mx, b.y0, my},
                        {mx, b.x1, b.y0, my},
                        {b.x0, mx, my, b.y1},
                        {mx, b.x1, my, b.y1}};
        int found = 0;
        for (const Box& part : parts) {
            int pw = winding(part);
            found += pw;
            collect(part, pw, out);
        }
        if (found != w) {
            if (std::getenv("HYPRATIO_DEBUG_ZEROS")) {
                std::fprintf(stderr,
                             "[zeros] subdiv mismatch parent w=%d found=%d box "
                             "[%.9g,%.9g]x[%.9g,%.9g] children:",
                             w, found, b.x0, b.x1, b.y0, b.y1);
                for (const Box& part : parts)
                    std::fprintf(stderr, " %d", winding(part));
                std::fprintf(stderr, "\n");
            }
            throw NumericError("zero search: winding lost during subdivision");
        }
    }

private:
    cplx F(cplx z) const { return eval_F(p_, z, prec_); }

    double edge(cplx z1, cplx z2) const {
        double len = std::abs(z2 - z1);
        int steps = std::max(6, static_cast<int>(std::ceil(len / 0.75)));
        double phi = 0.0;
        cplx prev = z1, fprev = F(z1);
        for (int i = 1; i <= steps; ++i) {
            cplx z = z1 + (double(i) / steps) * (z2 - z1);
            cplx f = F(z);
            phi += track(prev, z, fprev, f, 0);
            prev = z;
            fprev = f;
        }
        return phi;
    }

    double track(cplx z1, cplx z2, cplx f1, cplx f2, int depth) const {
        if (std::abs(f1) < 1e-280 || std::abs(f2) < 1e-280)
            throw NumericError("zero search: function vanishes on the contour");
        double dphi = std::arg(f2 / f1);
        // Near the branch point z=1 the phase can swing by (a+b-c)*pi inside
        // a window far narrower than the sample spacing, and a contour passing
        // just above two real zeros in one sample step aliases their combined
        // -2pi swing to ~0; either way the aliased arg can pass the
        // |dphi| < pi/2 test. Keep subdividing until each segment is short
        // relative to its distance from every known rapid-phase site (the
        // branch point plus the pre-scanned real-axis zeros).
        double len = std::abs(z2 - z1);
        cplx zm0 = 0.5 * (z1 + z2);
        double dist = std::abs(zm0 - 1.0);
        for (double g : guards_)
            dist = std::min(dist, std::abs(zm0 - cplx(g, 0.0)));
        if (std::fabs(dphi) < M_PI_2 && len <= 0.5 * dist) return dphi;
        if (depth > 48)
            throw NumericError("zero search: phase tracking did not resolve");
        cplx zm = 0.5 * (z1 + z2);
        cplx fm = F(zm);
        return track(z1, zm, f1, fm, depth + 1) + track(zm, z2, fm, f2, depth + 1);
    }

public:
    // Simple real zeros of F on (-inf, hi). Three scan charts: a uniform one
    // on (lo, hi), a reciprocal one u = 1/x covering (-inf, lo) (zeros can sit
    // at huge |x| when the two z->inf decay exponents nearly coincide), and a
    // logarithmic one x = 1 - 10^{-tau} covering the approach to 1 (zeros
    // cluster there when c-a-b is small). Grids double until the expected
    // number of crossings appears.
    std::vector<double> real_zeros(double lo, double hi, int expected) const {
        if (expected <= 0) return {};
        int n = std::max(256, 64 * expected);
        while (true) {
            std::vector<double> cr = real_scan_once(lo, hi, n);
            if (static_cast<int>(cr.size()) >= expected || n >= (1 << 17)) return cr;
            n *= 2;
        }
    }

    // single-pass scan over all three charts; used both by real_zeros and to
    // seed the phase-tracking guards before any winding is computed
    std::vector<double> real_scan_once(double lo, double hi, int n) const {
        std::vector<double> cr;
        auto fx = [&](double x) { return F(cplx(x, 0.0)).real(); };
        scan(fx, lo, hi, n, cr);
        auto fu = [&](double u) { return F(cplx(1.0 / u, 0.0)).real(); };
        std::vector<double> uc;
        scan(fu, -1.0 / std::fabs(lo), -1e-14, n, uc);
        for (double u : uc) cr.push_back(1.0 / u);
        auto ft = [&](double tau) {
            return F(cplx(1.0 - std::pow(10.0, -tau), 0.0)).real();
        };
        std::vector<double> tc;
        scan(ft, -std::log10(1.0 - hi), 13.5, n, tc);
        for (double tau : tc) cr.push_back(1.0 - std::pow(10.0, -tau));
        std::sort(cr.begin(), cr.end());
        cr.erase(std::unique(cr.begin(), cr.end(),
                             [](double x, double y) {
                                 return std::fabs(x - y) <
                                        1e-9 * (1.0 + std::fabs(x));
                             }),
                 cr.end());
        return cr;
    }

    void set_guards(std::vector<double> g) { guards_ = std::move(g); }

private:
    // sign-change scan with bisection refinement, in the chart coordinate
    template <class Fn>
    void scan(const Fn& f, double lo, double hi, int n, std::vector<double>& out) const {
        if (!(hi > lo)) return;
        double fprev = f(lo);
        for (int i = 1; i <= n; ++i) {
            double x = lo + (hi - lo) * double(i) / n;
            double fx = f(x);
            if (fprev == 0.0) fprev = 1e-300;
            if ((fprev < 0.0) != (fx < 0.0)) {
                double x0 = lo + (hi - lo) * double(i - 1) / n, x1 = x, f0 = fprev;
                for (int it = 0; it < 90; ++it) {
                    double xm = 0.5 * (x0 + x1);
                    double fm = f(xm);
                    if (fm == 0.0) {
                        x0 = x1 = xm;
                        break;
                    }
                    if ((f0 < 0.0) == (fm < 0.0)) {
                        x0 = xm;
                        f0 = fm;
                    } else {
                        x1 = xm;
                    }
                    if (x1 - x0 < 1e-15 * (1.0 + std::fabs(x0))) break;
                }
                out.push_back(0.5 * (x0 + x1));
            }
            fprev = fx;
        }
    }

    bool newton(const Box& b, cplx& root) const {
        cplx z = b.center();
        for (int it = 0; it < 80; ++it) {
            cplx f = F(z);
            cplx fp = eval_Fprime(p_, z, prec_);
            if (std::abs(fp) < 1e-280) return false;
            cplx dz = -f / fp;
            z += dz;
            if (!b.contains(z, 2.0 * std::max(b.width(), b.height()))) return false;
            if (std::abs(dz) < 1e-13 * (1.0 + std::abs(z))) {
                // strict containment (jittered split lines make edge hits
                // improbable); prevents capturing an axis zero from above
                if (!b.contains(z, 0.0)) return false;
                cplx fr = F(z);
                cplx fpr = eval_Fprime(p_, z, prec_);
                if (std::abs(fr) > 1e-9 * (1.0 + std::abs(fpr) * std::abs(z)))
                    return false;
                root = z;
                return true;
            }
        }
        return false;
    }

    Params p_;
    Precision prec_;
    std::vector<double> guards_;  // real-axis zeros, for phase-step control
};

// coefficients of the terminating series of degree n (upper parameter -n)
std::vector<double> terminating_coeffs(const Params& p, int n) {
    std::vector<double> c(n + 1);
    double term = 1.0;
    c[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0));
        c[k + 1] = term;
    }
    return c;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    if (coeffs[n] == 0.0) throw NumericError("vanishing leading polynomial coefficient");
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[i] / coeffs[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<cplx> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

// merge conjugate partners, snap real zeros onto the axis
void classify_zeros(std::vector<cplx> raw, int expected, ZeroReport& report) {
    const double axis_tol = 1e-8;
    std::vector<cplx> uppers;
    int weight = 0;
    for (cplx z : raw) {
        if (std::fabs(z.imag()) <= axis_tol * (1.0 + std::abs(z))) {
            report.zeros.push_back({cplx(z.real(), 0.0), false});
            weight += 1;
        } else if (z.imag() > 0.0) {
            uppers.push_back(z);
            weight += 2;
        }
        // lower-half partners are dropped; conjugate symmetry pairs them
    }
    for (cplx z : uppers) report.zeros.push_back({z, true});
    if (weight != expected)
        throw NumericError("zero search: located zeros do not account for the full count");
}

} // namespace

ZeroReport locate_zeros(const Params& p, const Precision& prec) {
    RunckelResult rc = runckel_count(p);
    ZeroReport report;
    report.count = rc.nu;
    report.degenerate = rc.degenerate;
    if (rc.nu == 0) return report;

    if (rc.degenerate) {
        // terminating polynomial route, possibly after the Euler transform
        bool direct = (is_nonneg_int(-p.a, 1e-12) &&
                       std::llround(-p.a) == rc.nu) ||
                      (is_nonneg_int(-p.b, 1e-12) && std::llround(-p.b) == rc.nu);
        Params poly = direct ? p : Params(p.c - p.a, p.c - p.b, p.c);
        std::vector<cplx> roots = polynomial_roots(terminating_coeffs(poly, rc.nu));
        for (cplx z : roots)
            if (std::abs(z - 1.0) < 1e-8)
                throw NumericError("degenerate zero collides with the branch point z=1");
        // on the cut each real zero is counted once (upper bank convention)
        classify_zeros(std::move(roots), rc.nu, report);
        return report;
    }

    // conjugate symmetry: count strictly-upper zeros by winding over an
    // upper-half rectangle (F is analytic there, including over Re z > 1),
    // and real zeros on (-R, 1) by sign scanning; totals must match nu.
    WindingSearch search(p, prec);
    const double delta = 1e-6;
    for (double R : {4.0, 16.0, 64.0, 256.0}) {
        Box up{-R - 0.0031, R + 0.0057, delta, R + 0.0071};
        // approximate real-axis zeros steer the phase-tracking step control:
        // the bottom edge passes 1e-6 above them and a coarse step can alias
        // the swings of two adjacent ones away
        search.set_guards(search.real_scan_once(-R - 0.0031, 1.0 - delta, 2048));
        int wup = search.winding(up);
        if (std::getenv("HYPRATIO_DEBUG_ZEROS"))
            std::fprintf(stderr, "[zeros] R=%g wup=%d\n", R, wup);
        if (2 * wup > rc.nu) continue;
        std::vector<double> reals =
            search.real_zeros(-R - 0.0031, 1.0 - delta, rc.nu - 2 * wup);
        if (std::getenv("HYPRATIO_DEBUG_ZEROS")) {
            std::fprintf(stderr, "[zeros] R=%g reals=%zu:", R, reals.size());
            for (double x : reals) std::fprintf(stderr, " %.8g", x);
            std::fprintf(stderr, "\n");
        }
        if (2 * wup + static_cast<int>(reals.size()) != rc.nu) continue;
        std::vector<cplx> uppers;
        search.collect(up, wup, uppers);
        if (static_cast<int>(uppers.size()) != wup)
            throw NumericError("zero search: upper-half isolation lost zeros");
        for (double x : reals) report.zeros.push_back({cplx(x, 0.0), false});
        for (cplx z : uppers) report.zeros.push_back({z, true});
        return report;
    }
    std::ostringstream os;
    os << "zero search: winding count never reached the formula count " << rc.nu;
    throw NumericError(os.str());
}

cplx residue_at_pole(const Params& p, const Shift& s, cplx beta, const Precision& prec) {
    if (s.n1 == 0 && s.n2 == 0 && s.m == 0)
        throw ParamError("residue is undefined for the zero shift (ratio is 1)");

    // polish the pole location on the base function
    for (int it = 0; it < 8; ++it) {
        cplx f = eval_F(p, beta, prec);
        cplx fp = eval_Fprime(p, beta, prec);
        if (std::abs(fp) < 1e-280) break;
        cplx dz = -f / fp;
        beta += dz;
        if (std::abs(dz) < 1e-14 * (1.0 + std::abs(beta))) break;
    }

    cplx fp = eval_Fprime(p, beta, prec);
    // second derivative via the double contiguous shift, for the scale of the
    // simplicity threshold
    Params pp2(p.a + 2.0, p.b + 2.0, p.c + 2.0);
    cplx f2 = (p.a * (p.a + 1.0) * p.b * (p.b + 1.0) / (p.c * (p.c + 1.0))) *
              eval_F(pp2, beta, prec);
    if (std::abs(fp) < 1e-8 * std::max(1.0, std::abs(f2)))
        throw NumericError("pole is not simple: derivative below threshold");

    cplx num = eval_F(s.apply(p), beta, prec);
    return num / fp;
}

} // namespace hypratio
