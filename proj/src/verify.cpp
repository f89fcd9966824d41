#include "hypratio/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "hypratio/continuation.hpp"
#include "hypratio/ratio_theory.hpp"
#include "hypratio/representation.hpp"
#include "hypratio/zeros.hpp"

namespace hypratio {

namespace {

void fold(VerifyReport& r, double dev) {
    r.max_rel_dev = std::max(r.max_rel_dev, dev);
    ++r.cases;
}

double rel_dev(cplx v, cplx o) { return std::abs(v - o) / (1.0 + std::abs(o)); }

std::vector<cplx> eval_grid() {
    std::vector<cplx> g;
    for (int i = 0; i < 12; ++i) {
        double r = 0.3 + 2.2 * double(i) / 11.0;
        double th = 0.4 + (2.0 * M_PI - 0.8) * double(i % 5) / 4.0;
        cplx z = std::polar(r, th);
        if (std::abs(z - 1.0) < 0.05) continue;
        if (z.real() > 1.0 && std::fabs(z.imag()) < 1e-3) continue;
        g.push_back(z);
    }
    return g;
}

VerifyReport suite_boundary(const Params& p, const Shift& s, const Precision& prec) {
    VerifyReport r;
    for (double x : {1.1, 2.0, 10.0}) {
        double im = boundary_imag(p, s, x, Bank::Upper, prec);
        cplx o = ratio_direct(p, s, CutPlanePoint::boundary(x, Bank::Upper), prec);
        fold(r, std::fabs(im - o.imag()) / (1.0 + std::fabs(o.imag())));
    }
    return r;
}

VerifyReport suite_repr(const Params& p, const Shift& s, const QuadratureConfig& quad,
                        const Precision& prec) {
    Strategy strat =
        pole_free_condition(p) ? Strategy::PoleFree : Strategy::QCorrection;
    Representation rep = build_representation(p, s, strat, prec);
    VerifyReport r;
    for (cplx z : eval_grid()) {
        cplx v = eval_representation(rep, CutPlanePoint::at(z), quad, prec);
        cplx o = ratio_direct(p, s, CutPlanePoint::at(z), prec);
        fold(r, rel_dev(v, o));
    }
    return r;
}

VerifyReport suite_zeros(const Params& p, const Precision& prec) {
    VerifyReport r;
    RunckelResult rc = runckel_count(p);
    ZeroReport zr = locate_zeros(p, prec);
    int weight = 0;
    for (const auto& z : zr.zeros) weight += z.complex_pair ? 2 : 1;
    fold(r, weight == rc.nu ? 0.0 : 1.0);
    for (const auto& z : zr.zeros) {
        cplx loc = z.location;
        cplx val = (loc.imag() == 0.0 && loc.real() >= 1.0)
                       ? hyp2f1_boundary(p, loc.real(), Bank::Upper, prec)
                       : hyp2f1(p, CutPlanePoint::at(loc), prec);
        fold(r, std::abs(val));
    }
    return r;
}

VerifyReport suite_products(const Params& p, const QuadratureConfig& quad,
                            const Precision& prec) {
    VerifyReport r;
    for (cplx z : {cplx(-2.0, 0.0), cplx(0.3, 0.8)}) {
        CutPlanePoint pt = CutPlanePoint::at(z);
        cplx pr = product_r111_r001(p, pt, quad, prec);
        cplx op = z * ratio_direct(p, Shift(1, 1, 1), pt, prec) *
                  ratio_direct(p, Shift(0, 0, 1), pt, prec);
        fold(r, rel_dev(pr, op));
        if (std::fabs(p.c - 1.0) > 1e-9) {
            cplx st = product_stieltjes2(p, pt, quad, prec);
            cplx os = ratio_direct(p, Shift(0, 0, -1), pt, prec) *
                      ratio_direct(p, Shift(0, 0, 1), pt, prec);
            fold(r, rel_dev(st, os));
        }
        cplx g = gauss_ratio_repr(p, pt, quad, prec);
        cplx og = ratio_direct(p, Shift(0, 1, 1), pt, prec);
        fold(r, rel_dev(g, og));
    }
    return r;
}

void merge(VerifyReport& into, const VerifyReport& part) {
    into.max_rel_dev = std::max(into.max_rel_dev, part.max_rel_dev);
    into.cases += part.cases;
}

} // namespace

VerifyReport verify_suite(const std::string& suite, const Params& p, const Shift& s,
                          const QuadratureConfig& quad, const Precision& prec) {
    if (suite == "boundary") return suite_boundary(p, s, prec);
    if (suite == "repr") return suite_repr(p, s, quad, prec);
    if (suite == "zeros") return suite_zeros(p, prec);
    if (suite == "products") return suite_products(p, quad, prec);
    if (suite == "all") {
        VerifyReport r;
        merge(r, suite_boundary(p, s, prec));
        merge(r, suite_repr(p, s, quad, prec));
        merge(r, suite_zeros(p, prec));
        merge(r, suite_products(p, quad, prec));
        return r;
    }
    throw ParamError("unknown verification suite: " + suite);
}

} // namespace hypratio
