#include "hypratio/continuation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "hypratio/special_core.hpp"

namespace hypratio {

namespace {

cplx cpow(cplx w, double s) {
    if (s == 0.0) return 1.0;
    return std::exp(s * std::log(w));
}

bool near_int(double x, double tol) {
    return std::fabs(x - std::round(x)) < tol;
}

constexpr double kExceptionalTol = 1e-6;
constexpr double kPerturb = 1e-4;

enum class Xform { Direct, Pfaff, OneMinusZ, InvZ, InvOneMinusZ, OneMinusInvZ };

cplx eval_xform(const Params& p, cplx z, Xform xf, const Precision& prec) {
    const double a = p.a, b = p.b, c = p.c;
    switch (xf) {
        case Xform::Direct:
            return hyp2f1_series(p, z, prec);
        case Xform::Pfaff:
            return cpow(1.0 - z, -a) *
                   hyp2f1_series(Params(a, c - b, c), z / (z - 1.0), prec);
        case Xform::OneMinusZ: {
            cplx u = 1.0 - z;
            double g1 = gamma_ratio({c, c - a - b}, {c - a, c - b});
            double g2 = gamma_ratio({c, a + b - c}, {a, b});
            cplx s1 = g1 == 0.0 ? cplx(0.0)
                                : g1 * hyp2f1_series(Params(a, b, a + b - c + 1.0), u, prec);
            cplx s2 = g2 == 0.0 ? cplx(0.0)
                                : g2 * cpow(u, c - a - b) *
                                      hyp2f1_series(Params(c - a, c - b, c - a - b + 1.0), u, prec);
            return s1 + s2;
        }
        case Xform::InvZ: {
            cplx u = 1.0 / z;
            double g1 = gamma_ratio({c, b - a}, {b, c - a});
            double g2 = gamma_ratio({c, a - b}, {a, c - b});
            cplx s1 = g1 == 0.0 ? cplx(0.0)
                                : g1 * cpow(-z, -a) *
                                      hyp2f1_series(Params(a, 1.0 - c + a, 1.0 - b + a), u, prec);
            cplx s2 = g2 == 0.0 ? cplx(0.0)
                                : g2 * cpow(-z, -b) *
                                      hyp2f1_series(Params(b, 1.0 - c + b, 1.0 - a + b), u, prec);
            return s1 + s2;
        }
        case Xform::InvOneMinusZ: {
            cplx u = 1.0 / (1.0 - z);
            double g1 = gamma_ratio({c, b - a}, {b, c - a});
            double g2 = gamma_ratio({c, a - b}, {a, c - b});
            cplx s1 = g1 == 0.0 ? cplx(0.0)
                                : g1 * cpow(1.0 - z, -a) *
                                      hyp2f1_series(Params(a, c - b, a - b + 1.0), u, prec);
            cplx s2 = g2 == 0.0 ? cplx(0.0)
                                : g2 * cpow(1.0 - z, -b) *
                                      hyp2f1_series(Params(b, c - a, b - a + 1.0), u, prec);
            return s1 + s2;
        }
        case Xform::OneMinusInvZ: {
            cplx u = 1.0 - 1.0 / z;
            double g1 = gamma_ratio({c, c - a - b}, {c - a, c - b});
            double g2 = gamma_ratio({c, a + b - c}, {a, b});
            cplx s1 = g1 == 0.0 ? cplx(0.0)
                                : g1 * cpow(z, -a) *
                                      hyp2f1_series(Params(a, a - c + 1.0, a + b - c + 1.0), u, prec);
            cplx s2 = g2 == 0.0 ? cplx(0.0)
                                : g2 * cpow(1.0 - z, c - a - b) * cpow(z, a - c) *
                                      hyp2f1_series(Params(c - a, 1.0 - a, c - a - b + 1.0), u, prec);
            return s1 + s2;
        }
    }
    return 0.0; // unreachable
}

// Exceptional parameter configurations make the two-term connection formulas
// singular; the perturb-and-average policy cancels the first-order error.
cplx eval_xform_guarded(const Params& p, cplx z, Xform xf, const Precision& prec) {
    bool needs_cab = (xf == Xform::OneMinusZ || xf == Xform::OneMinusInvZ);
    bool needs_ab = (xf == Xform::InvZ || xf == Xform::InvOneMinusZ);
    auto richardson = [&](auto eval_at) -> cplx {
        // symmetric averages at eps and eps/2 are L + A eps^2 + O(eps^4);
        // one extrapolation step removes the quadratic term
        cplx a1 = 0.5 * (eval_at(kPerturb) + eval_at(-kPerturb));
        cplx a2 = 0.5 * (eval_at(0.5 * kPerturb) + eval_at(-0.5 * kPerturb));
        return (4.0 * a2 - a1) / 3.0;
    };
    if (needs_cab && near_int(p.c - p.a - p.b, kExceptionalTol)) {
        return richardson([&](double e) {
            return eval_xform(Params(p.a, p.b, p.c + e), z, xf, prec);
        });
    }
    if (needs_ab && near_int(p.a - p.b, kExceptionalTol)) {
        return richardson([&](double e) {
            return eval_xform(Params(p.a + e, p.b, p.c), z, xf, prec);
        });
    }
    return eval_xform(p, z, xf, prec);
}

struct Candidate {
    Xform xf;
    double image;
};

} // namespace

cplx hyp2f1(const Params& p, const CutPlanePoint& pt, const Precision& prec) {
    cplx z = pt.signed_z();
    if (z == cplx(0.0)) return 1.0;

    // terminating series: exact polynomial, valid everywhere
    if (is_nonpos_int(p.a) || is_nonpos_int(p.b))
        return hyp2f1_series(p, z, prec);

    // Euler-degenerate: polynomial times (1-z)^{c-a-b}
    if (is_nonpos_int(p.c - p.a) || is_nonpos_int(p.c - p.b)) {
        return cpow(1.0 - z, p.c - p.a - p.b) *
               hyp2f1_series(Params(p.c - p.a, p.c - p.b, p.c), z, prec);
    }

    const bool cut = pt.on_cut.has_value();
    std::vector<Candidate> cands;
    if (!cut) {
        cands.push_back({Xform::Direct, std::abs(z)});
        cands.push_back({Xform::Pfaff, std::abs(z / (z - 1.0))});
    }
    cands.push_back({Xform::OneMinusZ, std::abs(1.0 - z)});
    cands.push_back({Xform::InvZ, std::abs(1.0 / z)});
    cands.push_back({Xform::InvOneMinusZ, std::abs(1.0 / (1.0 - z))});
    cands.push_back({Xform::OneMinusInvZ, std::abs(1.0 - 1.0 / z)});

    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& l, const Candidate& r) { return l.image < r.image; });

    // A two-term connection whose gamma coefficients sit close to (but not
    // essentially at) a pole cancels catastrophically: both terms grow like
    // 1/gap while the sum stays O(1). Essentially-integer gaps are repaired
    // by the perturb-and-average guard; the intermediate zone is routed to a
    // single-term transformation or to path continuation instead.
    const double gap_cab = std::fabs(p.c - p.a - p.b - std::round(p.c - p.a - p.b));
    const double gap_ab = std::fabs(p.a - p.b - std::round(p.a - p.b));
    auto cancellation_prone = [&](Xform xf) {
        if (xf == Xform::OneMinusZ || xf == Xform::OneMinusInvZ)
            return gap_cab >= kExceptionalTol && gap_cab < 1e-2;
        if (xf == Xform::InvZ || xf == Xform::InvOneMinusZ)
            return gap_ab >= kExceptionalTol && gap_ab < 1e-2;
        return false;
    };
    const Candidate* prone_best = nullptr;
    for (const Candidate& cand : cands) {
        if (cand.image > 0.93) break;
        if (cancellation_prone(cand.xf)) {
            if (!prone_best) prone_best = &cand;
            continue;
        }
        return eval_xform_guarded(p, z, cand.xf, prec);
    }
    // No safe transformation converges here (typically z close to 1 with a
    // near-integer c-a-b); accept the cancellation-prone one rather than the
    // path integrator, which cannot approach z = 1.
    if (prone_best) return eval_xform_guarded(p, z, prone_best->xf, prec);

    // Either all six images are close to the unit circle (neighbourhood of
    // z = exp(+-i pi/3)) or every reachable transformation is cancellation
    // prone; continue along a path instead.
    Precision tight = prec;
    tight.series_tolerance = std::min(prec.series_tolerance, 1e-15);
    return hyp2f1_ode_oracle(p, pt, tight);
}

cplx hyp2f1_boundary(const Params& p, double x, Bank bank, const Precision& prec) {
    return hyp2f1(p, CutPlanePoint::boundary(x, bank), prec);
}

cplx hyp2f1_derivative(const Params& p, const CutPlanePoint& pt, const Precision& prec) {
    Params up(p.a + 1.0, p.b + 1.0, p.c + 1.0);
    return (p.a * p.b / p.c) * hyp2f1(up, pt, prec);
}

namespace {

using State = std::array<cplx, 2>;

// Cash-Karp embedded RK45 for the hypergeometric ODE along the straight
// segment z(s) = za + s (zb - za), s in [0,1].
void integrate_segment(const Params& p, cplx za, cplx zb, State& w) {
    const cplx dz = zb - za;
    if (dz == cplx(0.0)) return;

    auto rhs = [&](double s, const State& y) -> State {
        cplx z = za + s * dz;
        cplx d = z * (1.0 - z);
        cplx w2 = (p.a * p.b * y[0] - (p.c - (p.a + p.b + 1.0) * z) * y[1]) / d;
        return {dz * y[1], dz * w2};
    };

    static const double b21 = 1.0 / 5;
    static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
    static const double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
    static const double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27, b54 = 35.0 / 27;
    static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                        b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
    static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
    static const double d1 = 2825.0 / 27648, d3 = 18575.0 / 48384, d4 = 13525.0 / 55296,
                        d5 = 277.0 / 14336, d6 = 1.0 / 4;

    const double tol = 1e-14;
    double s = 0.0, h = 0.05;
    int steps = 0;
    while (s < 1.0) {
        if (++steps > 200000) throw NumericError("ODE oracle: step limit exceeded");
        if (s + h > 1.0) h = 1.0 - s;
        State k1 = rhs(s, w);
        auto axpy = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State y = w;
            for (auto& t : terms) {
                y[0] += h * t.first * (*t.second)[0];
                y[1] += h * t.first * (*t.second)[1];
            }
            return y;
        };
        State k2 = rhs(s + 0.2 * h, axpy({{b21, &k1}}));
        State k3 = rhs(s + 0.3 * h, axpy({{b31, &k1}, {b32, &k2}}));
        State k4 = rhs(s + 0.6 * h, axpy({{b41, &k1}, {b42, &k2}, {b43, &k3}}));
        State k5 = rhs(s + h, axpy({{b51, &k1}, {b52, &k2}, {b53, &k3}, {b54, &k4}}));
        State k6 = rhs(s + 0.875 * h,
                       axpy({{b61, &k1}, {b62, &k2}, {b63, &k3}, {b64, &k4}, {b65, &k5}}));

        State y5, y4;
        for (int i = 0; i < 2; ++i) {
            y5[i] = w[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            y4[i] = w[i] + h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
        }
        double err = 0.0, scale = 0.0;
        for (int i = 0; i < 2; ++i) {
            err = std::max(err, std::abs(y5[i] - y4[i]));
            scale = std::max(scale, std::abs(y5[i]));
        }
        double bound = tol * (1.0 + scale);
        if (err <= bound) {
            s += h;
            w = y5;
            h *= std::min(5.0, 0.9 * std::pow(bound / std::max(err, 1e-300), 0.2));
        } else {
            h *= std::max(0.1, 0.9 * std::pow(bound / err, 0.25));
            if (h < 1e-13) throw NumericError("ODE oracle: step-size underflow");
        }
    }
}

} // namespace

cplx hyp2f1_ode_oracle(const Params& p, const CutPlanePoint& pt, const Precision& prec,
                       double cut_clearance) {
    cplx target = pt.signed_z();
    if (target == cplx(0.0)) return 1.0;

    Precision sp = prec;
    sp.series_tolerance = std::min(prec.series_tolerance, 1e-16);

    // anchor well inside the disc of convergence
    const cplx z0(0.25, 0.0);
    if (std::abs(target) <= 0.6 && std::abs(target - 1.0) > cut_clearance)
        return hyp2f1_series(p, target, sp);

    if (std::abs(target - 1.0) < cut_clearance)
        throw NumericError("ODE oracle: target violates cut clearance at z=1");
    if (std::abs(target) < cut_clearance)
        throw NumericError("ODE oracle: target too close to z=0");

    int sigma;
    if (pt.on_cut)
        sigma = bank_sign(pt.on_cut->second);
    else if (target.imag() != 0.0)
        sigma = target.imag() > 0.0 ? +1 : -1;
    else
        sigma = +1;

    double H = std::max(0.5, std::abs(target.imag()));
    cplx w1(0.25, sigma * H);
    cplx w2(target.real(), sigma * H);

    State w{hyp2f1_series(p, z0, sp),
            (p.a * p.b / p.c) * hyp2f1_series(Params(p.a + 1, p.b + 1, p.c + 1), z0, sp)};
    integrate_segment(p, z0, w1, w);
    integrate_segment(p, w1, w2, w);
    integrate_segment(p, w2, target, w);
    return w[0];
}

} // namespace hypratio
