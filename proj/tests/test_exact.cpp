#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapenum/poly.hpp"
#include "mapenum/ratfn.hpp"
#include "mapenum/roots.hpp"
#include "mapenum/series.hpp"

#include <random>

using namespace mapenum;

namespace {

std::mt19937 rng(20240517);

Rat random_rat(int span = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Rat(num(rng), den(rng));
}

Poly random_poly(Var v, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& a : c) a = random_rat();
    return Poly(v, c);
}

Series random_series(Var v, unsigned order, const Rat& c0, const Rat& c1) {
    Series s(v, order);
    s.set_coeff(0, c0);
    if (order >= 1) s.set_coeff(1, c1);
    for (unsigned i = 2; i <= order; ++i) s.set_coeff(i, random_rat());
    return s;
}

// Brute-force compositional inverse: determine g coefficient by coefficient
// by expanding g(f) with naive polynomial arithmetic.  Independent of
// Series::revert (no shared code path beyond Rat).
std::vector<Rat> brute_force_inverse(const std::vector<Rat>& f, unsigned order) {
    // g(f(y)) = y; work with full polynomial products truncated by hand.
    std::vector<Rat> g(order + 1, Rat(0));
    std::vector<std::vector<Rat>> fpow{{Rat(1)}};  // f^0
    for (unsigned k = 1; k <= order; ++k) {
        const auto& prev = fpow.back();
        std::vector<Rat> next(order + 1, Rat(0));
        for (size_t i = 0; i < prev.size() && i <= order; ++i)
            for (size_t j = 0; j < f.size() && i + j <= order; ++j) next[i + j] += prev[i] * f[j];
        fpow.push_back(next);
    }
    for (unsigned m = 1; m <= order; ++m) {
        Rat acc(0);
        for (unsigned k = 1; k < m; ++k) acc += g[k] * fpow[k][m];
        Rat target = m == 1 ? Rat(1) : Rat(0);
        g[m] = (target - acc) / fpow[m][m];
    }
    return g;
}

}  // namespace

TEST_CASE("rational canonical form and exact arithmetic") {
    Rat a = make_rat(6, -8);
    CHECK(num(a) == -3);
    CHECK(den(a) == 4);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(rat_string(Rat(-22, 7)) == "-22/7");
    CHECK(parse_rat("-22/7") == Rat(-22, 7));
    CHECK(decimal_string(Rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rat(-1, 2), 1) == "-0.5");
    CHECK(decimal_string(Rat(2, 3), 2) == "0.67");
    CHECK(multinomial3(4, 2, 1, 1) == 12);
    CHECK(double_factorial_odd(3) == 15);  // 5!! = 15
    CHECK(falling(Rat(-2), 4) == Rat(120));
}

TEST_CASE("polynomial canonical form, gcd and exact division") {
    Poly p(Var::y0, {Rat(4), Rat(0), Rat(-1)});  // 4 - y^2
    CHECK(p.degree() == 2);
    CHECK(Poly(Var::y0).degree() == -1);
    CHECK((p - p).is_zero());

    // gcd divides both and the cofactors reconstruct exactly
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_poly(Var::y0, 5), b = random_poly(Var::y0, 5);
        if (a.is_zero() || b.is_zero()) continue;
        Poly g = poly_gcd(a, b);
        if (g.is_zero()) continue;
        CHECK(exact_div(a, g) * g == a);
        CHECK(exact_div(b, g) * g == b);
    }

    Poly common(Var::y0, {Rat(-1), Rat(1)});
    Poly a = common * Poly(Var::y0, {Rat(2), Rat(3)});
    Poly b = common * Poly(Var::y0, {Rat(5), Rat(0), Rat(1)});
    Poly g = poly_gcd(a, b);
    CHECK(g == common / common.leading());

    CHECK_THROWS(exact_div(Poly(Var::y0, {Rat(1), Rat(1)}), Poly(Var::y0, {Rat(0), Rat(1)})));
}

TEST_CASE("parity-tagged conversion s <-> y0 round-trips") {
    Poly even_in_s(Var::s, {Rat(2), Rat(0), Rat(1), Rat(0), Rat(5)});
    Poly in_y0 = even_in_s.even_part_in_square(Var::y0);
    CHECK(in_y0 == Poly(Var::y0, {Rat(2), Rat(1), Rat(5)}));
    CHECK(in_y0.expand_square_to(Var::s) == even_in_s);
}

TEST_CASE("series reversion: frozen examples") {
    // f = y/36 - y^2/18  ->  g = 36 x + 2592 x^2 (hand Lagrange inversion:
    // g1 = 1/f1 = 36, g2 = -f2 g1^3 = (1/18) 36^3 / 36^... solved above)
    Series f(Var::y0, 2);
    f.set_coeff(1, Rat(1, 36));
    f.set_coeff(2, Rat(-1, 18));
    Series g = f.revert();
    CHECK(g[1] == 36);
    CHECK(g[2] == 2592);

    // identity
    Series id = Series::identity(Var::y0, 5);
    CHECK(id.revert() == id);

    // f = y + y^2 -> g = x - x^2 + 2x^3 - 5x^4 (brute-force oracle)
    Series f2(Var::y0, 4);
    f2.set_coeff(1, 1);
    f2.set_coeff(2, 1);
    auto oracle = brute_force_inverse({Rat(0), Rat(1), Rat(1)}, 4);
    CHECK(oracle == std::vector<Rat>{Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-5)});
    Series g2 = f2.revert();
    for (unsigned i = 0; i <= 4; ++i) CHECK(g2[i] == oracle[i]);

    Series bad(Var::y0, 3);
    bad.set_coeff(2, 1);
    CHECK_THROWS(bad.revert());
}

TEST_CASE("series reversion composes to the identity (randomized)") {
    const Rat slopes[] = {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(36)};
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Series f = random_series(Var::y0, 8, Rat(0), slopes[trial % 5]);
        Series g = f.revert();
        CHECK(g.compose(f) == Series::identity(Var::y0, 8));
        CHECK(f.compose(g) == Series::identity(Var::y0, 8));
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("series log: frozen examples and exp/log round-trip") {
    Series f(Var::xi2, 3);
    f.set_coeff(0, 1);
    f.set_coeff(1, 1);
    Series l = f.log();  // x - x^2/2 + x^3/3
    CHECK(l[1] == 1);
    CHECK(l[2] == Rat(-1, 2));
    CHECK(l[3] == Rat(1, 3));

    Series f2(Var::xi2, 2);
    f2.set_coeff(0, 1);
    f2.set_coeff(1, -2);
    f2.set_coeff(2, Rat(1, 4));
    Series l2 = f2.log();
    CHECK(l2[1] == -2);
    CHECK(l2[2] == Rat(-7, 4));

    CHECK(Series::constant(Var::xi2, 4, 1).log().is_zero());
    CHECK_THROWS(Series::constant(Var::xi2, 4, 2).log());

    for (int trial = 0; trial < 40; ++trial) {
        Series a = random_series(Var::t, 7, Rat(1), random_rat());
        CHECK(a.log().exp() == a);
        Series b = random_series(Var::t, 7, Rat(0), random_rat());
        CHECK(b.exp().log() == b);
    }
}

TEST_CASE("series sqrt, inverse, deflate") {
    for (int trial = 0; trial < 30; ++trial) {
        Series a = random_series(Var::t, 7, Rat(1), random_rat());
        CHECK(a.sqrt() * a.sqrt() == a);
        CHECK((a * a.inverse()) == Series::constant(Var::t, 7, 1));
    }
    Series e(Var::xi2, 3, {Rat(1), Rat(2), Rat(3), Rat(4)});
    Series infl = e.inflate(Var::xi);
    CHECK(infl.order() == 7);
    CHECK(infl[4] == 3);
    CHECK(infl.deflate(Var::xi2) == e);
}

TEST_CASE("rational function canonical form") {
    // (y^2 - 4)/(y - 2) -> y + 2
    RatFn r(Poly(Var::y0, {Rat(-4), Rat(0), Rat(1)}), Poly(Var::y0, {Rat(-2), Rat(1)}));
    CHECK(r.is_polynomial());
    CHECK(r.num() == Poly(Var::y0, {Rat(2), Rat(1)}));

    // (2y)/4 -> y/2 over denominator 1
    RatFn r2(Poly(Var::y0, {Rat(0), Rat(2)}), Poly(Var::y0, {Rat(4)}));
    CHECK(r2.den() == Poly::constant(Var::y0, 1));
    CHECK(r2.num() == Poly(Var::y0, {Rat(0), Rat(1, 2)}));

    // sign normalization: denominator ends up monic (positive leading coeff)
    RatFn r3(Poly(Var::y0, {Rat(4), Rat(-8), Rat(1)}),
             -(Poly(Var::y0, {Rat(2), Rat(-1)}) * Poly(Var::y0, {Rat(2), Rat(-1)})));
    CHECK(r3.den().leading() > 0);
    Rat at3 = r3.eval(Rat(3));
    CHECK(at3 == Rat(9 - 24 + 4) / Rat(-1));

    CHECK_THROWS(RatFn(Poly(Var::y0, {Rat(1)}), Poly(Var::y0)));
    RatFn pole(Poly::constant(Var::y0, 1), Poly(Var::y0, {Rat(-2), Rat(1)}));
    CHECK_THROWS(pole.eval(Rat(2)));

    // derivative: d/dy (1/(1-y)) = 1/(1-y)^2, checked as series
    RatFn geo(Poly::constant(Var::y0, 1), Poly(Var::y0, {Rat(1), Rat(-1)}));
    Series ds = geo.derivative().series_at_origin(5);
    for (unsigned i = 0; i <= 5; ++i) CHECK(ds[i] == Rat(static_cast<long>(i) + 1));

    // compose: (1/(1+u)) with u = y/(1-y)  ->  1 - y
    RatFn inner(Poly(Var::y0, {Rat(0), Rat(1)}), Poly(Var::y0, {Rat(1), Rat(-1)}));
    RatFn outer(Poly::constant(Var::y0, 1), Poly(Var::y0, {Rat(1), Rat(1)}));
    CHECK(outer.compose(inner) == RatFn(Poly(Var::y0, {Rat(1), Rat(-1)})));
}

TEST_CASE("sturm isolation: quadratic with two real roots") {
    // y^2 - 8y + 4: roots 2(2 -+ sqrt 3) ~ 0.536, 7.46
    Poly p(Var::y0, {Rat(4), Rat(-8), Rat(1)});
    auto roots = sturm_isolate(p, Rat(0), Rat(10));
    REQUIRE(roots.size() == 2);
    auto r0 = refine(roots[0], 80);
    auto r1 = refine(roots[1], 80);
    double v0 = to_double(r0.value), v1 = to_double(r1.value);
    CHECK(v0 == doctest::Approx(2 * (2 - std::sqrt(3.0))).epsilon(1e-15));
    CHECK(v1 == doctest::Approx(2 * (2 + std::sqrt(3.0))).epsilon(1e-15));

    // refined value squared back into the polynomial: within 2^(1-bits)
    Rat resid = p.eval(r0.value);
    if (resid < 0) resid = -resid;
    CHECK(resid < rat_pow(Rat(2), 1 - 64));
}

TEST_CASE("sturm isolation: no roots / exact rational roots / rejection") {
    Poly none(Var::y0, {Rat(1), Rat(0), Rat(1)});
    CHECK(sturm_isolate(none, Rat(-10), Rat(10)).empty());

    Poly fact = Poly(Var::y0, {Rat(0), Rat(1)}) * Poly(Var::y0, {Rat(-1), Rat(1)}) *
                Poly(Var::y0, {Rat(-2), Rat(1)});
    auto roots = sturm_isolate(fact, Rat(-1), Rat(3));
    REQUIRE(roots.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        auto r = refine(roots[i], 40);
        CHECK(r.lo <= Rat(static_cast<long>(i)));
        CHECK(Rat(static_cast<long>(i)) <= r.hi);
        Rat err = r.value - Rat(static_cast<long>(i));
        if (err < 0) err = -err;
        CHECK(err <= rat_pow(Rat(2), -30));
    }

    CHECK_THROWS(sturm_isolate(Poly(Var::y0), Rat(0), Rat(1)));
}

TEST_CASE("sturm isolation count matches endpoint sign-variation bound (randomized)") {
    for (int trial = 0; trial < 40; ++trial) {
        Poly p = random_poly(Var::y0, 6);
        if (p.degree() < 1) continue;
        Poly sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        Rat lo(-50), hi(50);
        if (sf.eval(lo) == 0 || sf.eval(hi) == 0) continue;
        SturmChain chain(sf);
        auto roots = sturm_isolate(p, lo, hi);
        CHECK(static_cast<int>(roots.size()) == chain.count(lo, hi));
        // intervals pairwise disjoint
        for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
        // squared-back residual bound
        for (const auto& r : roots) {
            auto ref = refine(r, 48);
            Rat resid = sf.eval(ref.value);
            if (resid < 0) resid = -resid;
            if (!ref.exact()) CHECK(resid < rat_pow(Rat(2), 1 - 32));
        }
    }
}
