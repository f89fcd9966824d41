#include <cmath>
#include <random>

#include "doctest.h"
#include "hypratio/continuation.hpp"
#include "hypratio/ratio_theory.hpp"
#include "hypratio/special_core.hpp"

using namespace hypratio;

static const Precision prec{};

TEST_CASE("index quantities") {
    IndexData d = derive_indices(Shift(0, 0, 0));
    CHECK(d.n_low == 0);
    CHECK(d.n_high == 0);
    CHECK(d.p == 0);
    CHECK(d.l == 0);
    CHECK(d.r == -1);

    d = derive_indices(Shift(1, 1, 1));
    CHECK(d.p == 0);
    CHECK(d.l == 1);
    CHECK(d.r == 0);

    d = derive_indices(Shift(0, 1, 1));
    CHECK(d.n_low == 0);
    CHECK(d.n_high == 1);
    CHECK(d.p == 0);
    CHECK(d.l == 0);
    CHECK(d.r == 0);

    d = derive_indices(Shift(-2, 3, 1));
    CHECK(d.n_low == -2);
    CHECK(d.n_high == 3);
    CHECK(d.p == 0);
    CHECK(d.l == 0);
    CHECK(d.r == 2);
}

TEST_CASE("index invariants on random shifts") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> di(-6, 6);
    for (int t = 0; t < 500; ++t) {
        Shift s(di(rng), di(rng), di(rng));
        IndexData d = derive_indices(s);
        CHECK(d.p - d.l == s.m - s.n1 - s.n2);
        CHECK(d.p >= 0);
        CHECK(d.l >= 0);
        CHECK(d.r >= -1);
        bool zero_shift = (s.n1 == 0 && s.n2 == 0 && s.m == 0);
        CHECK((d.r == -1) == zero_shift);
    }
}

TEST_CASE("growth exponent at z -> 1") {
    CHECK(eta(Params(0.3, 0.4, 2.0)) == doctest::Approx(0.0));          // c > a+b, generic
    CHECK(eta(Params(1.3, 1.4, 2.0)) == doctest::Approx(2.0 - 2.7));    // c < a+b, generic
    CHECK(eta(Params(-2.0, 0.4, 2.0)) == 0.0);                          // terminating, no log branch
    CHECK(eta(Params(-1.0, 3.5, 2.0)) == doctest::Approx(0.0));         // a=-1, b-c not in N0
    CHECK(eta(Params(-2.0, 5.0, 2.0)) == doctest::Approx(pos_part(2.0 - 3.0)));  // both degenerate
    CHECK(eta(Params(0.5, 4.5, 2.0)) == doctest::Approx(2.0 - 5.0));    // b-c in N0 only
}

TEST_CASE("growth exponent at z -> infinity") {
    CHECK(zeta(Params(0.7, 1.9, 2.4)) == doctest::Approx(-0.7));  // generic: -min(a,b)
    CHECK(zeta(Params(-2.0, 0.5, 1.5)) == doctest::Approx(2.0));  // terminating at -a
    CHECK(zeta(Params(0.5, 3.5, 1.5)) == doctest::Approx(-0.5));  // b-c in N0: branch -a first
    CHECK(zeta(Params(3.5, 0.5, 1.5)) == doctest::Approx(-0.5));  // a-c in N0: branch -b
}

TEST_CASE("representation orders (M, N)") {
    // unit shift of all three parameters
    {
        Params p(0.3, 0.4, 2.0); // c > a + b
        auto [M, N] = select_MN(p, Shift(1, 1, 1), false);
        CHECK(M == 0);
        CHECK(N == 0);
    }
    {
        Params p(1.3, 1.6, 2.0); // c <= a + b
        auto [M, N] = select_MN(p, Shift(1, 1, 1), false);
        CHECK(M == 1);
        CHECK(N == 1);
    }
    // lower the denominator parameter only (c <= a + b regime)
    {
        Params p(1.3, 1.6, 2.0);
        auto [M, N] = select_MN(p, Shift(0, 0, -1));
        CHECK(M == 1);
        CHECK(N == 1);
    }
    // single upper+denominator shift, pole-free orders
    {
        Params p(0.5, 0.7, 2.0);
        auto [M, N] = select_MN(p, Shift(0, 1, 1), false);
        CHECK(M == 0);
        CHECK(N >= 1);
    }
}

TEST_CASE("constant weight polynomials for the unit shifts") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(0.1, 2.5);
    for (int t = 0; t < 20; ++t) {
        double a = dist(rng), b = dist(rng), c = a + b + dist(rng);
        Params p(a, b, c);

        // shift (0,1,1): P_0 = -1/b
        RealPolynomial p011 = pr_polynomial(p, Shift(0, 1, 1), prec);
        REQUIRE(p011.degree() == 0);
        CHECK(p011.coeffs[0] == doctest::Approx(-1.0 / b).epsilon(1e-10));

        // shift (1,1,1): P_0 = -1/(ab); combined with B it gives the
        // classical positive gamma-quotient weight
        RealPolynomial w111 = effective_weight(p, Shift(1, 1, 1), prec);
        REQUIRE(w111.degree() == 0);
        double ref111 = gamma_ratio({c, c + 1.0}, {a + 1.0, b + 1.0, c - a, c - b});
        CHECK(w111.coeffs[0] == doctest::Approx(ref111).epsilon(1e-10));

        // shift (0,1,1) combined weight
        RealPolynomial w011 = effective_weight(p, Shift(0, 1, 1), prec);
        double ref011 = gamma_ratio({c, c + 1.0}, {a, b + 1.0, c - b, c - a + 1.0});
        CHECK(w011.coeffs[0] == doctest::Approx(ref011).epsilon(1e-10));
    }
}

TEST_CASE("weight polynomial symmetry under (a,n1) <-> (b,n2)") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(0.2, 1.8);
    std::uniform_int_distribution<int> di(-2, 3);
    int done = 0;
    while (done < 25) {
        double a = dist(rng), b = dist(rng) + 1.0, c = a + b + dist(rng);
        int n1 = di(rng), n2 = di(rng), m = di(rng);
        Shift s(n1, n2, m);
        IndexData d = derive_indices(s);
        if (d.r < 0 || d.r > 5) continue;
        try {
            RealPolynomial u = pr_polynomial(Params(a, b, c), Shift(n1, n2, m), prec);
            RealPolynomial v = pr_polynomial(Params(b, a, c), Shift(n2, n1, m), prec);
            REQUIRE(u.coeffs.size() == v.coeffs.size());
            double scale = 0.0;
            for (double x : u.coeffs) scale = std::max(scale, std::fabs(x));
            for (size_t i = 0; i < u.coeffs.size(); ++i)
                CHECK(std::fabs(u.coeffs[i] - v.coeffs[i]) <= 1e-9 * (1.0 + scale));
            ++done;
        } catch (const ParamError&) {
            continue;
        }
    }
}

TEST_CASE("weight polynomial against the boundary fit") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.15, 1.2);
    std::uniform_int_distribution<int> di(-2, 3);
    int done = 0;
    while (done < 12) {
        double a = dist(rng), b = dist(rng) + 0.8, c = a + b + dist(rng);
        int n1 = di(rng), n2 = di(rng), m = di(rng);
        Shift s(n1, n2, m);
        IndexData d = derive_indices(s);
        if (d.r < 0 || d.r > 4) continue;
        Params p(a, b, c);
        if (coefficient_B(p, s) == 0.0) continue;
        try {
            RealPolynomial an = pr_polynomial(p, s, prec);
            RealPolynomial fit = pr_fit_from_boundary(p, s, prec);
            REQUIRE(fit.coeffs.size() == an.coeffs.size());
            double scale = 0.0;
            for (double x : an.coeffs) scale = std::max(scale, std::fabs(x));
            for (size_t i = 0; i < an.coeffs.size(); ++i)
                CHECK(std::fabs(an.coeffs[i] - fit.coeffs[i]) <= 1e-6 * (1.0 + scale));
            ++done;
        } catch (const Error&) {
            continue;
        }
    }
}

TEST_CASE("boundary imaginary part against a direct ratio") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(0.2, 1.5);
    std::uniform_int_distribution<int> di(-1, 2);
    int done = 0;
    while (done < 10) {
        double a = dist(rng), b = dist(rng) + 0.5, c = a + b + dist(rng);
        Shift s(di(rng), di(rng), di(rng));
        if (derive_indices(s).r < 0) continue;
        Params p(a, b, c);
        try {
            for (double x : {1.5, 3.0, 9.0}) {
                cplx Fb = hyp2f1_boundary(p, x, Bank::Upper, prec);
                cplx Fs = hyp2f1_boundary(s.apply(p), x, Bank::Upper, prec);
                double ref = (Fs / Fb).imag();
                double got = boundary_imag(p, s, x, Bank::Upper, prec);
                CHECK(std::fabs(got - ref) <= 1e-8 * (1.0 + std::fabs(ref)));
                CHECK(boundary_imag(p, s, x, Bank::Lower, prec) ==
                      doctest::Approx(-got).epsilon(1e-14));
            }
            ++done;
        } catch (const Error&) {
            continue;
        }
    }
}

TEST_CASE("zero shift has a vanishing boundary weight") {
    Params p(0.4, 0.9, 2.0);
    CHECK(boundary_imag(p, Shift(0, 0, 0), 2.0, Bank::Upper, prec) == 0.0);
}
