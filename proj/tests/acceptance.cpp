// Acceptance gate: one deterministic check per shipped guarantee, one
// PASS/FAIL line each, nonzero exit if anything fails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypratio/continuation.hpp"
#include "hypratio/ratio_theory.hpp"
#include "hypratio/representation.hpp"
#include "hypratio/zeros.hpp"

using namespace hypratio;

namespace {

const Precision prec{};
const QuadratureConfig quad{};

double rel_err(cplx v, cplx o) { return std::abs(v - o) / (1.0 + std::abs(o)); }

bool params_well_separated(double a, double b, double c) {
    for (double v : {a, b, c, c - a, c - b, a - b, c - a - b}) {
        if (std::fabs(v - std::round(v)) < 1e-3) return false;
    }
    return true;
}

std::vector<cplx> z_points(int count) {
    std::vector<cplx> pts;
    for (int i = 0; pts.size() < static_cast<size_t>(count); ++i) {
        double r = 0.2 + 2.5 * double(i % 23) / 22.0;
        double th = 0.3 + (2.0 * M_PI - 0.6) * double(i % 7) / 6.0;
        cplx z = std::polar(r, th);
        if (std::abs(z - 1.0) < 0.05) continue;
        if (z.real() > 1.0 && std::fabs(z.imag()) < 1e-3) continue;
        pts.push_back(z);
    }
    return pts;
}

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// 1. Closed boundary formula for Im R on the upper bank vs the direct ratio,
// 20 sampled configurations at x in {1.1, 2, 10}.
std::string crit_boundary() {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(0.2, 1.5);
    std::uniform_int_distribution<int> di(-2, 3);
    double worst = 0.0;
    int done = 0;
    while (done < 20) {
        double a = dist(rng), b = dist(rng) + 0.5, c = a + b + dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        Params p(a, b, c);
        if (!pole_free_condition(p)) continue;
        Shift s(di(rng), di(rng), di(rng));
        if (s.n1 == 0 && s.n2 == 0 && s.m == 0) continue;
        try {
            for (double x : {1.1, 2.0, 10.0}) {
                double got = boundary_imag(p, s, x, Bank::Upper, prec);
                cplx o = ratio_direct(p, s, CutPlanePoint::boundary(x, Bank::Upper), prec);
                double dev = std::fabs(got - o.imag()) / (1.0 + std::fabs(o.imag()));
                worst = std::max(worst, dev);
                require(dev <= 1e-8, "deviation " + num(dev) + " at x=" + num(x));
            }
        } catch (const Error&) {
            continue; // configuration outside the formula's validity; resample
        }
        ++done;
    }
    return "20 configs x 3 abscissae, max dev " + num(worst);
}

// 2. Pole-free integral representation vs the direct oracle on 50 random
// zero-free configurations x 20 points.
std::string crit_pole_free_suite() {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    std::uniform_int_distribution<int> sh(-3, 3);
    double worst = 0.0, worst_log = 0.0;
    int done = 0;
    while (done < 50) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        Params p(a, b, c);
        if (!pole_free_condition(p)) continue;
        int n1 = sh(rng), n2 = sh(rng), m = sh(rng);
        double cm = c + m;
        if (std::fabs(cm - std::round(cm)) < 1e-3 && cm < 0.5) continue;
        Shift s(n1, n2, m);
        ++done;
        auto rep = build_representation(p, s, Strategy::PoleFree, prec);
        double tol = rep.log_flag ? 1e-6 : 1e-8;
        for (cplx z : z_points(20)) {
            cplx v = eval_representation(rep, CutPlanePoint::at(z), quad, prec);
            cplx o = ratio_direct(p, s, CutPlanePoint::at(z), prec);
            double dev = rel_err(v, o);
            (rep.log_flag ? worst_log : worst) = std::max(
                rep.log_flag ? worst_log : worst, dev);
            require(dev <= tol, "deviation " + num(dev) + " at config " +
                                    std::to_string(done));
        }
    }
    return "50 configs x 20 points, max dev " + num(worst) + " (log cases " +
           num(worst_log) + ")";
}

// 3. General representation in a parameter regime with one pole in (0,1):
// both pole-absorbing strategies match the oracle away from the pole, the
// pole is located in (0,1), and the residue agrees between the closed
// contiguous-shift formula and the numerator/derivative quotient.
std::string crit_pole_regime() {
    double worst = 0.0, worst_res = 0.0;
    for (Params p : {Params(1.5, -0.5, 1.2), Params(1.8, -0.3, 1.1),
                     Params(2.0, -0.8, 1.6)}) {
        require(0.0 < p.c && p.c < p.a && p.a < p.c + 1.0 && -1.0 < p.b && p.b < 0.0,
                "sample outside the intended regime");
        Shift s(0, 1, 1);
        ZeroReport zr = locate_zeros(p, prec);
        require(zr.zeros.size() == 1, "expected a single pole");
        cplx beta = zr.zeros[0].location;
        require(beta.imag() == 0.0 && beta.real() > 0.0 && beta.real() < 1.0,
                "pole not located in (0,1)");

        cplx res = residue_at_pole(p, s, beta, prec);
        cplx nu2 = hyp2f1(Params(p.a, p.b + 1.0, p.c + 1.0), CutPlanePoint::at(beta), prec);
        cplx de2 = hyp2f1(Params(p.a + 1.0, p.b + 1.0, p.c + 1.0), CutPlanePoint::at(beta), prec);
        cplx formula = (p.c / (p.a * p.b)) * nu2 / de2;
        double rd = std::abs(res - formula) / (1.0 + std::abs(res));
        worst_res = std::max(worst_res, rd);
        require(rd <= 1e-9, "residue routes disagree by " + num(rd));

        for (Strategy st : {Strategy::QCorrection, Strategy::TMultiplier}) {
            auto rep = build_representation(p, s, st, prec);
            for (cplx z : z_points(10)) {
                if (std::abs(z - beta) < 0.2) continue;
                cplx v = eval_representation(rep, CutPlanePoint::at(z), quad, prec);
                cplx o = ratio_direct(p, s, CutPlanePoint::at(z), prec);
                double dev = rel_err(v, o);
                worst = std::max(worst, dev);
                require(dev <= 1e-8, std::string("strategy ") + to_string(st) +
                                         " deviation " + num(dev));
            }
        }
    }
    return "3 regimes, max eval dev " + num(worst) + ", max residue dev " +
           num(worst_res);
}

// 4. Zero counting: the closed-form count equals the argument-principle
// count on 100 random triples, and the zero-free criteria (I)-(VI) hold
// exactly when the count is zero.
std::string crit_counting() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    int done = 0, max_nu = 0;
    while (done < 100) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        Params p(a, b, c);
        RunckelResult rc;
        try {
            rc = runckel_count(p);
        } catch (const Error&) {
            continue; // unstable gamma-sign zone; resample
        }
        ZeroReport zr = locate_zeros(p, prec);
        int weight = 0;
        for (const auto& z : zr.zeros) weight += z.complex_pair ? 2 : 1;
        require(weight == rc.nu,
                "count mismatch at (" + num(a) + "," + num(b) + "," + num(c) +
                    "): formula " + std::to_string(rc.nu) + ", located " +
                    std::to_string(weight));
        bool zero_free = pole_free_condition(p).has_value();
        require(zero_free == (rc.nu == 0),
                "criteria (I)-(VI) disagree with nu at (" + num(a) + "," + num(b) +
                    "," + num(c) + ")");
        max_nu = std::max(max_nu, rc.nu);
        ++done;
    }
    return "100 triples, counts agree, criteria iff nu=0, max nu " +
           std::to_string(max_nu);
}

// 5. Boundary-weight polynomial: terminating-sum coefficients vs an
// independent fit of sampled boundary values, plus two closed special cases.
std::string crit_weight_poly() {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.15, 1.2);
    std::uniform_int_distribution<int> di(-3, 4);
    double worst = 0.0;
    int done = 0;
    while (done < 30) {
        double a = dist(rng), b = dist(rng) + 0.8, c = a + b + dist(rng);
        Shift s(di(rng), di(rng), di(rng));
        IndexData d = derive_indices(s);
        if (d.r < 0 || d.r > 6) continue;
        Params p(a, b, c);
        if (coefficient_B(p, s) == 0.0) continue;
        try {
            RealPolynomial an = pr_polynomial(p, s, prec);
            RealPolynomial fit = pr_fit_from_boundary(p, s, prec);
            require(an.coeffs.size() == fit.coeffs.size(), "degree mismatch");
            double scale = 0.0;
            for (double x : an.coeffs) scale = std::max(scale, std::fabs(x));
            for (size_t i = 0; i < an.coeffs.size(); ++i) {
                double dev = std::fabs(an.coeffs[i] - fit.coeffs[i]) / (1.0 + scale);
                worst = std::max(worst, dev);
                require(dev <= 1e-6, "coefficient dev " + num(dev));
            }
            ++done;
        } catch (const Error&) {
            continue;
        }
    }

    // Shift (0,1,1): the weight polynomial is the constant -1/b.
    Params p0(0.47, 0.83, 1.9);
    RealPolynomial p011 = pr_polynomial(p0, Shift(0, 1, 1), prec);
    require(p011.coeffs.size() == 1, "(0,1,1) weight is not constant");
    require(std::fabs(p011.coeffs[0] + 1.0 / p0.b) <= 1e-10,
            "(0,1,1) constant is not -1/b");

    // Shift (1,1,1): B * P_0 equals the gamma-quotient prefactor
    // Gamma(c)Gamma(c+1) / (Gamma(a+1)Gamma(b+1)Gamma(c-a)Gamma(c-b)).
    RealPolynomial w111 = effective_weight(p0, Shift(1, 1, 1), prec);
    require(w111.coeffs.size() == 1, "(1,1,1) weight is not constant");
    double lg = std::lgamma(p0.c) + std::lgamma(p0.c + 1.0) - std::lgamma(p0.a + 1.0) -
                std::lgamma(p0.b + 1.0) - std::lgamma(p0.c - p0.a) -
                std::lgamma(p0.c - p0.b);
    double pref = std::exp(lg);
    require(std::fabs(w111.coeffs[0] - pref) <= 1e-10 * (1.0 + pref),
            "(1,1,1) prefactor mismatch");

    return "30 shifts (r <= 6) max coeff dev " + num(worst) +
           "; (0,1,1) and (1,1,1) closed forms exact";
}

// 6. Worked example reproductions at 10 points each.
std::string crit_examples() {
    double worst = 0.0;
    auto sweep = [&](const Params& p, const Shift& s, Strategy st, double tol) {
        auto rep = build_representation(p, s, st, prec);
        for (cplx z : z_points(10)) {
            cplx v = eval_representation(rep, CutPlanePoint::at(z), quad, prec);
            cplx o = ratio_direct(p, s, CutPlanePoint::at(z), prec);
            double dev = rel_err(v, o);
            worst = std::max(worst, dev);
            require(dev <= tol, "deviation " + num(dev));
        }
    };

    // Shift (1,1,1) on a zero-free class, both c > a+b and c <= a+b.
    sweep(Params(0.5, 0.7, 1.9), Shift(1, 1, 1), Strategy::PoleFree, 1e-8);
    sweep(Params(0.5, 0.7, 1.0), Shift(1, 1, 1), Strategy::PoleFree, 1e-8);

    // Shift (0,0,-1) with the constant correction (c - min(a,b) - 1)/(c - 1).
    Params p2(0.5, 0.7, 1.4);
    auto rep2 = build_representation(p2, Shift(0, 0, -1), Strategy::QCorrection, prec);
    double q0 = (p2.c - std::min(p2.a, p2.b) - 1.0) / (p2.c - 1.0);
    require(std::fabs(rep2.Q(0.0) - q0) <= 1e-10, "constant correction mismatch");
    sweep(p2, Shift(0, 0, -1), Strategy::QCorrection, 1e-8);

    // One-pole regime, both displayed pole-absorbing forms. The oracle has a
    // pole near z ~ 0.92; z_points(10) stays clear of it.
    sweep(Params(1.5, -0.5, 1.2), Shift(0, 1, 1), Strategy::QCorrection, 1e-8);
    sweep(Params(1.5, -0.5, 1.2), Shift(0, 1, 1), Strategy::TMultiplier, 1e-8);

    return "shifts (1,1,1), (0,0,-1), (0,1,1) reproduced, max dev " + num(worst);
}

// 7. Closed product forms: oracle agreement, monotone growth of the
// order-2 transform on the real axis, and the z = 0 normalization.
std::string crit_products() {
    double worst = 0.0;
    for (Params p : {Params(0.5, 0.8, 1.6), Params(0.4, 1.1, 2.3)}) {
        for (cplx z : {cplx(-2.0, 0.0), cplx(0.3, 0.8), cplx(-0.5, -1.2)}) {
            CutPlanePoint pt = CutPlanePoint::at(z);
            cplx pr = product_r111_r001(p, pt, quad, prec);
            cplx op = z * ratio_direct(p, Shift(1, 1, 1), pt, prec) *
                      ratio_direct(p, Shift(0, 0, 1), pt, prec);
            double d1 = rel_err(pr, op);
            cplx st = product_stieltjes2(p, pt, quad, prec);
            cplx os = ratio_direct(p, Shift(0, 0, -1), pt, prec) *
                      ratio_direct(p, Shift(0, 0, 1), pt, prec);
            double d2 = rel_err(st, os);
            worst = std::max({worst, d1, d2});
            require(d1 <= 1e-8 && d2 <= 1e-8,
                    "product dev " + num(std::max(d1, d2)));
        }
    }

    // Monotone increase of z R_{1,1,1} R_{0,0,1} on (-inf, 1) for a
    // positive-parameter triple with a positive transform density.
    Params pm(0.5, 0.7, 1.9);
    double prev = -1e300;
    for (double x = -6.0; x < 0.95; x += 0.35) {
        cplx v = product_r111_r001(pm, CutPlanePoint::at(cplx(x, 0.0)), quad, prec);
        require(std::fabs(v.imag()) <= 1e-10, "transform not real on the axis");
        require(v.real() > prev, "transform not increasing at x=" + num(x));
        prev = v.real();
    }

    // z = 0 normalization of the order-2 product.
    cplx at0 = product_stieltjes2(pm, CutPlanePoint::at(cplx(0.0, 0.0)), quad, prec);
    require(std::abs(at0 - 1.0) <= 1e-8, "z=0 normalization off by " +
                                             num(std::abs(at0 - 1.0)));
    return "products vs oracle max dev " + num(worst) +
           ", monotone on the axis, unit at z=0";
}

// 8. Structural identities of the underlying machinery.
std::string crit_structural() {
    // Euler and Pfaff transformations.
    for (Params p : {Params(0.5, 0.7, 1.9), Params(1.2, -0.4, 2.1)}) {
        for (cplx z : {cplx(-1.5, 0.0), cplx(0.4, 0.6), cplx(-0.3, -2.0)}) {
            cplx f = hyp2f1(p, CutPlanePoint::at(z), prec);
            cplx euler = std::pow(1.0 - z, p.c - p.a - p.b) *
                         hyp2f1(Params(p.c - p.a, p.c - p.b, p.c), CutPlanePoint::at(z), prec);
            require(rel_err(euler, f) <= 1e-10, "Euler identity dev " +
                                                    num(rel_err(euler, f)));
            cplx pfaff = std::pow(1.0 - z, -p.a) *
                         hyp2f1(Params(p.a, p.c - p.b, p.c),
                                CutPlanePoint::at(z / (z - 1.0)), prec);
            require(rel_err(pfaff, f) <= 1e-10, "Pfaff identity dev " +
                                                    num(rel_err(pfaff, f)));
        }
    }

    // Taylor coefficients by series division vs derivative recursion, order 8.
    {
        Params p(0.5, 0.7, 1.9);
        Shift s(1, 0, 1);
        auto tc = ratio_taylor_coeffs(p, s, 8, prec);
        auto dv = ratio_derivatives_fdb(p, s, 8, prec);
        double fact = 1.0;
        for (int k = 0; k <= 8; ++k) {
            if (k > 0) fact *= k;
            double dev = std::fabs(tc[k] * fact - dv[k]) / (1.0 + std::fabs(dv[k]));
            require(dev <= 1e-10, "coefficient order " + std::to_string(k) +
                                      " dev " + num(dev));
        }
    }

    // The representation value is independent of the admissible (M, N) pair.
    {
        Params p(0.5, 0.7, 1.9);
        Shift s(1, 1, 1);
        auto base = build_representation(p, s, Strategy::PoleFree, prec);
        for (auto [em, en] : {std::pair{1, 1}, {0, 1}, {2, 2}, {0, 3}}) {
            auto big = build_representation(p, s, Strategy::PoleFree, prec, em, en);
            for (cplx z : {cplx(-1.0, 0.5), cplx(0.4, -0.7)}) {
                cplx v0 = eval_representation(base, CutPlanePoint::at(z), quad, prec);
                cplx v1 = eval_representation(big, CutPlanePoint::at(z), quad, prec);
                require(rel_err(v1, v0) <= 1e-8, "(M,N) robustness dev " +
                                                     num(rel_err(v1, v0)));
            }
        }

        // Conjugate symmetry of the evaluation.
        for (cplx z : {cplx(-0.8, 0.9), cplx(0.5, 0.4)}) {
            cplx v = eval_representation(base, CutPlanePoint::at(z), quad, prec);
            cplx vc = eval_representation(base, CutPlanePoint::at(std::conj(z)), quad, prec);
            require(std::abs(vc - std::conj(v)) <= 1e-12 * (1.0 + std::abs(v)),
                    "conjugate symmetry violated");
        }
    }

    // A terminating series with a root on the cut: 2F1(1,-2;4/5;6/5) = 0.
    cplx root = hyp2f1_boundary(Params(1.0, -2.0, 0.8), 1.2, Bank::Upper, prec);
    require(std::abs(root) <= 1e-12, "polynomial root on the cut off by " +
                                         num(std::abs(root)));

    return "Euler/Pfaff, Taylor routes, (M,N) freedom, symmetry, cut root";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const Criterion criteria[] = {
        {"boundary formula vs direct oracle", crit_boundary},
        {"pole-free representation suite", crit_pole_free_suite},
        {"one-pole regime, both strategies + residue", crit_pole_regime},
        {"zero counting vs argument principle", crit_counting},
        {"boundary weight polynomial cross-validation", crit_weight_poly},
        {"worked example reproductions", crit_examples},
        {"closed product forms", crit_products},
        {"structural identities", crit_structural},
    };

    int failures = 0;
    int id = 0;
    for (const auto& c : criteria) {
        ++id;
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected error: ") + e.what();
        }
        std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
