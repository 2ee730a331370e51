#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapenum/asymptotics.hpp"

#include <cmath>

using namespace mapenum;

TEST_CASE("critical data at j=3 matches the closed coordinates") {
    CriticalData cd = critical_data(3, 64);
    CHECK(cd.y0c_value == doctest::Approx(2 * (2 - std::sqrt(3.0))).epsilon(1e-13));
    CHECK(cd.xi2c_value == doctest::Approx(1.0 / (108 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(cd.z0c == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
    // simplicity: the quadratic's derivative does not vanish at the root
    CHECK(2 * cd.y0c_value - 8 != 0);
    // C1 strictly negative on this branch
    CHECK(cd.C1 < 0);
    CHECK(cd.C2 > 0);
}

TEST_CASE("gamma cross-validates between exact residue and finite differences") {
    CriticalData cd = critical_data(3, 64);
    CHECK(cd.gamma > 0);
    CHECK(std::abs(cd.gamma - cd.gamma_fd) < 1e-4 * std::abs(cd.gamma));
    CriticalData cd5 = critical_data(5, 64);
    CHECK(std::abs(cd5.gamma - cd5.gamma_fd) < 1e-3 * std::abs(cd5.gamma));
}

TEST_CASE("results are stable under doubled refinement precision") {
    CriticalData a = critical_data(3, 64);
    CriticalData b = critical_data(3, 128);
    CHECK(a.y0c_value == doctest::Approx(b.y0c_value).epsilon(1e-15));
    CHECK(a.zeta1 == doctest::Approx(b.zeta1).epsilon(1e-12));
    auto za = zeta_recurrence(a, 6);
    auto zb = zeta_recurrence(b, 6);
    for (unsigned g = 1; g <= 6; ++g) CHECK(za[g] == doctest::Approx(zb[g]).epsilon(1e-10));
}

TEST_CASE("zeta recurrence: positivity through g = 6 at j = 3 and j = 5") {
    for (unsigned j : {3u, 5u}) {
        CAPTURE(j);
        CriticalData cd = critical_data(j, 64);
        auto z = zeta_recurrence(cd, 6);
        for (unsigned g = 1; g <= 6; ++g) CHECK(z[g] > 0);
    }
}

TEST_CASE("gamma(5g-1)/2 at g=1 equals 1: the law is well posed") {
    CHECK(std::tgamma(2.0) == doctest::Approx(1.0));
}

TEST_CASE("two-legged ratio drift decreases monotonically") {
    CriticalData cd = critical_data(3, 64);
    auto rows0 = twolegged_vs_asymptotic(3, 0, 4, 12, cd);
    CHECK(drift_decreasing(rows0));
    CHECK(rows0.back().ratio == doctest::Approx(1.0).epsilon(0.1));
    auto rows1 = twolegged_vs_asymptotic(3, 1, 4, 12, cd);
    CHECK(drift_decreasing(rows1));
}

TEST_CASE("genus-2 coefficients versus the asymptotic law: drift shrinks over m=3..6") {
    CriticalData cd = critical_data(3, 64);
    CHECK(cd.c2_direct > 0);
    auto rows = e2_vs_asymptotic(3, 6, cd);
    CHECK(drift_decreasing(rows));
}
