#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapenum/discrete.hpp"
#include "mapenum/genfun.hpp"

using namespace mapenum;

TEST_CASE("formal moments reduce to gaussian moments and satisfy the string identity") {
    // t^0 slice: m_k(0) = (k-1)!! eps^(k/2) for even k, 0 for odd
    ESeries m4 = formal_moment(3, 4, 3);
    CHECK(m4[0] == RatFn(Poly::monomial(Var::eps, Rat(3), 2)));
    ESeries m1 = formal_moment(3, 1, 3);
    CHECK(m1[0].is_zero());
    // [t^1] m_1 = -N * m_4(0) = -3 eps^2 / eps = -3 eps
    CHECK(m1[1] == RatFn(Poly::monomial(Var::eps, Rat(-3), 1)));

    for (unsigned j : {3u, 4u, 5u}) {
        auto rep = moment_string_identity(j, 8, 5);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok);
    }
}

TEST_CASE("gaussian slice: a_n = 0, b_n^2 = n eps; hankel determinants positive") {
    for (unsigned j : {3u, 4u}) {
        TSeriesCoeff c = hankel_recurrence(j, 6, 3);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(c.a[n][0].is_zero());
            CHECK(c.b2[n][0] == RatFn(Poly::monomial(Var::eps, Rat(static_cast<long>(n)), 1)));
        }
        auto rep = hankel_determinant_check(c, 7);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok);
    }
}

TEST_CASE("first order in t: the string-equation leading coefficients") {
    TSeriesCoeff c = hankel_recurrence(3, 6, 2);
    // a_n = -3 t eps (2n+1) + O(t^2)
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(c.a[n][1] == RatFn(Poly::monomial(Var::eps, Rat(-3 * (2 * static_cast<long>(n) + 1)), 1)));
    // j=4: [t^1] b_n^2 = -4 (L^3)_{n,n-1} at t=0 = -4 * 3 n^2 eps^2 ... check
    // against the discrete string equation directly instead of a closed form
    TSeriesCoeff c4 = hankel_recurrence(4, 8, 2);
    auto rep = verify_string(c4);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
}

TEST_CASE("string, toda and edge-toda equations hold as exact t-series") {
    for (unsigned j : {3u, 4u}) {
        CAPTURE(j);
        TSeriesCoeff c = hankel_recurrence(j, 8, 5);
        auto rs = verify_string(c);
        for (const auto& f : rs.failures) MESSAGE(f);
        CHECK(rs.ok);
        auto rt = verify_toda_and_edge(c);
        for (const auto& f : rt.failures) MESSAGE(f);
        CHECK(rt.ok);
    }
    auto r1 = verify_t1_toda(6, 4);
    for (const auto& f : r1.failures) MESSAGE(f);
    CHECK(r1.ok);
}

TEST_CASE("genus extraction matches the continuum series: trivalent") {
    GenusExtraction ext = extract_genus_coeffs(3, 4, 4, 10);
    CHECK(ext.consistent);
    SeriesContext ctx = build_series_context(3, 4);
    // z0: [t^0]=1, [t^2], [t^4] from the xi^2-series; odd orders vanish
    CHECK(ext.z[0][0] == 1);
    CHECK(ext.z[0][1] == 0);
    CHECK(ext.z[0][2] == ctx.z0_of_xi2[1]);
    CHECK(ext.z[0][3] == 0);
    CHECK(ext.z[0][4] == ctx.z0_of_xi2[2]);
    // z1 = f1 at x=1
    CHECK(ext.z[1][2] == ctx.f1_of_xi2[1]);
    CHECK(ext.z[1][4] == ctx.f1_of_xi2[2]);
    // u0, u1 = h1, u2 = h2 at x=1
    CHECK(ext.u[0][1] == ctx.u0_of_xi[1]);
    CHECK(ext.u[0][3] == ctx.u0_of_xi[3]);
    CHECK(ext.u[1][1] == ctx.h1_of_xi[1]);
    CHECK(ext.u[1][3] == ctx.h1_of_xi[3]);
    CHECK(ext.u[2][1] == ctx.h2_of_xi[1]);
    CHECK(ext.u[2][3] == ctx.h2_of_xi[3]);
}

TEST_CASE("genus extraction matches the continuum series: quartic") {
    GenusExtraction ext = extract_genus_coeffs(4, 4, 4, 10);
    CHECK(ext.consistent);
    SeriesContext ctx = build_series_context(4, 4);
    for (unsigned k = 0; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(ext.z[0][k] == ctx.z0_of_xi[k]);
        CHECK(ext.z[1][k] == ctx.f1_of_xi[k]);
        CHECK(ext.u[0][k] == 0);
        CHECK(ext.u[1][k] == 0);
        CHECK(ext.u[2][k] == 0);
    }
}

TEST_CASE("bernoulli relation between extracted u1 and u0") {
    // u1 = h1 = (1/2) h0x at x=1, i.e. [t^k] u1 = (1/2)(1/2 + k(j-2)/2)[t^k] u0
    GenusExtraction ext = extract_genus_coeffs(3, 4, 4, 10);
    for (unsigned k = 1; k <= 3; k += 2) {
        Rat factor = Rat(1, 2) * (Rat(1, 2) + Rat(static_cast<long>(k), 2));
        CHECK(ext.u[1][k] == factor * ext.u[0][k]);
    }
}
