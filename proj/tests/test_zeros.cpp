#include <cmath>
#include <random>

#include "doctest.h"
#include "hypratio/continuation.hpp"
#include "hypratio/zeros.hpp"

using namespace hypratio;

static const Precision prec{};

static bool params_well_separated(double a, double b, double c) {
    for (double v : {a, b, c, c - a, c - b, a - b, c - a - b}) {
        if (std::fabs(v - std::round(v)) < 1e-3) return false;
    }
    return true;
}

TEST_CASE("xi quadruple ordering and sum identity") {
    XiQuadruple q = xi_quadruple(Params(1.5, -0.5, 1.2));
    CHECK(q.xi[0] == doctest::Approx(-0.5));
    CHECK(q.xi[1] == doctest::Approx(-0.3));
    CHECK(q.xi[2] == doctest::Approx(1.5));
    CHECK(q.xi[3] == doctest::Approx(1.7));
    CHECK(q.xi[0] + q.xi[3] == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(q.xi[1] + q.xi[2] == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(q.S == 1);
}

TEST_CASE("zero-count formula") {
    auto r1 = runckel_count(Params(0.5, 0.5, 1.5));
    CHECK(r1.nu == 0);
    CHECK_FALSE(r1.degenerate);

    auto r2 = runckel_count(Params(1.5, -0.5, 1.2));
    CHECK(r2.nu == 1);
    CHECK_FALSE(r2.degenerate);

    auto r3 = runckel_count(Params(-3.0, 0.7, 1.1));
    CHECK(r3.nu == 3);
    CHECK(r3.degenerate);

    // ambiguity guard: xi too close to a non-positive integer
    CHECK_THROWS_AS(runckel_count(Params(-1.0 + 1e-11, 0.7, 2.3)), NumericError);
}

TEST_CASE("zero-count symmetries") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    int done = 0;
    while (done < 60) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        if (is_nonpos_int(c, 1e-3)) continue;
        ++done;
        auto r = runckel_count(Params(a, b, c));
        CHECK(runckel_count(Params(b, a, c)).nu == r.nu);
        CHECK(runckel_count(Params(c - a, c - b, c)).nu == r.nu);
    }
}

TEST_CASE("zero-free classification") {
    auto c1 = pole_free_condition(Params(0.5, 0.5, 1.5));
    REQUIRE(c1.has_value());
    CHECK(*c1 == PoleFreeCondition::IV);

    auto c2 = pole_free_condition(Params(-0.5, -0.3, -0.4));
    REQUIRE(c2.has_value());
    CHECK(*c2 == PoleFreeCondition::I);

    auto c3 = pole_free_condition(Params(2.5, 4.0, 2.5)); // c - a = 0
    REQUIRE(c3.has_value());
    CHECK(*c3 == PoleFreeCondition::VI);

    CHECK_FALSE(pole_free_condition(Params(1.5, -0.5, 1.2)).has_value());
}

TEST_CASE("zero-free classification matches a vanishing count") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    int done = 0;
    while (done < 60) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        if (is_nonpos_int(c, 1e-3) || std::fabs(c) < 1e-3) continue;
        ++done;
        Params p(a, b, c);
        auto cond = pole_free_condition(p);
        auto rc = runckel_count(p);
        CHECK(cond.has_value() == (rc.nu == 0));
        if (cond && *cond == PoleFreeCondition::V) {
            XiQuadruple q = xi_quadruple(p);
            CHECK(std::floor(q.xi[0]) + 1.0 == std::floor(q.xi[3]));
            CHECK(std::floor(q.xi[1]) == std::floor(q.xi[2]));
        }
    }
}

TEST_CASE("zero location: empty, simple real, degenerate cubic") {
    ZeroReport empty = locate_zeros(Params(0.5, 0.5, 1.5), prec);
    CHECK(empty.count == 0);
    CHECK(empty.zeros.empty());

    Params ex3(1.5, -0.5, 1.2);
    ZeroReport one = locate_zeros(ex3, prec);
    REQUIRE(one.count == 1);
    REQUIRE(one.zeros.size() == 1);
    CHECK_FALSE(one.zeros[0].complex_pair);
    double beta = one.zeros[0].location.real();
    CHECK(beta > 0.0);
    CHECK(beta < 1.0);
    CHECK(std::abs(hyp2f1(ex3, CutPlanePoint::at(beta), prec)) < 1e-12);

    Params cubic(-3.0, 0.7, 1.1);
    ZeroReport deg = locate_zeros(cubic, prec);
    CHECK(deg.count == 3);
    CHECK(deg.degenerate);
    int weight = 0;
    for (const auto& z : deg.zeros) {
        weight += z.complex_pair ? 2 : 1;
        cplx loc = z.location;
        cplx val = (loc.imag() == 0.0 && loc.real() >= 1.0)
                       ? hyp2f1_boundary(cubic, loc.real(), Bank::Upper, prec)
                       : hyp2f1(cubic, CutPlanePoint::at(loc), prec);
        CHECK(std::abs(val) < 1e-10);
    }
    CHECK(weight == 3);
}

TEST_CASE("location count equals formula count on random samples") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    int done = 0;
    while (done < 8) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        if (!params_well_separated(a, b, c)) continue;
        if (is_nonpos_int(c, 1e-3)) continue;
        Params p(a, b, c);
        auto rc = runckel_count(p);
        if (rc.nu == 0 || rc.nu > 6) continue;
        ++done;
        ZeroReport rep = locate_zeros(p, prec);
        int weight = 0;
        for (const auto& z : rep.zeros) weight += z.complex_pair ? 2 : 1;
        CHECK(weight == rc.nu);
        for (const auto& z : rep.zeros) {
            if (!rep.degenerate) {
                bool on_cut = z.location.imag() == 0.0 && z.location.real() >= 1.0;
                CHECK_FALSE(on_cut);
            }
            CHECK(std::abs(z.location) > 1e-12);
        }
    }
}

TEST_CASE("residue at the Example-3 pole, three routes") {
    Params p(1.5, -0.5, 1.2);
    ZeroReport rep = locate_zeros(p, prec);
    REQUIRE(rep.zeros.size() == 1);
    cplx beta = rep.zeros[0].location;
    Shift s(0, 1, 1);

    cplx res = residue_at_pole(p, s, beta, prec);

    // printed closed form: (c/(ab)) 2F1(a,b+1;c+1;beta)/2F1(a+1,b+1;c+1;beta)
    cplx num = hyp2f1(Params(p.a, p.b + 1.0, p.c + 1.0), CutPlanePoint::at(beta), prec);
    cplx den = hyp2f1(Params(p.a + 1.0, p.b + 1.0, p.c + 1.0), CutPlanePoint::at(beta), prec);
    cplx formula = (p.c / (p.a * p.b)) * num / den;
    CHECK(std::abs(res - formula) <= 1e-9 * (1.0 + std::abs(res)));

    // limit oracle: (z-beta) * R(z), Richardson in the step
    auto g = [&](double h) {
        cplx z = beta + h;
        cplx R = hyp2f1(s.apply(p), CutPlanePoint::at(z), prec) /
                 hyp2f1(p, CutPlanePoint::at(z), prec);
        return (z - beta) * R;
    };
    double h = 1e-3;
    cplx g1 = g(h), g2 = g(0.5 * h), g3 = g(0.25 * h);
    cplx r1 = 2.0 * g2 - g1, r2 = 2.0 * g3 - g2;
    cplx lim = (4.0 * r2 - r1) / 3.0;
    CHECK(std::abs(res - lim) <= 1e-7 * (1.0 + std::abs(res)));

    CHECK_THROWS_AS(residue_at_pole(p, Shift(0, 0, 0), beta, prec), ParamError);
}
