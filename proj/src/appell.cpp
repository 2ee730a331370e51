#include "mapenum/appell.hpp"

namespace mapenum {

Poly appell_s(unsigned n) {
    Poly p(Var::zeta);
    if (n % 2 == 0) {
        long nu = n / 2;
        for (long mu = 0; mu <= nu; ++mu)
            p.set_coeff(2 * mu, Rat(multinomial3(2 * nu, 2 * mu, nu - mu, nu - mu)));
    } else {
        long nu = (n - 1) / 2;
        for (long mu = 0; mu <= nu; ++mu)
            p.set_coeff(2 * mu + 1, Rat(multinomial3(2 * nu + 1, 2 * mu + 1, nu - mu, nu - mu)));
    }
    return p;
}

Poly appell_r(unsigned n) {
    // R_n = (I_1(2d)/d) zeta^n: convolve with the Catalan-number coefficient
    // sequence [t^(2u)] I_1(2t)/t = Cat_u / ... ; concretely
    // R_n = sum_u C(n, 2u) * (2u)!/(u!(u+1)!) * zeta^(n-2u).
    Poly p(Var::zeta);
    for (long u = 0; 2 * u <= static_cast<long>(n); ++u) {
        Int cat = factorial(static_cast<unsigned>(2 * u)) /
                  (factorial(static_cast<unsigned>(u)) * factorial(static_cast<unsigned>(u + 1)));
        p.set_coeff(n - 2 * u, Rat(binomial(n, 2 * u) * cat));
    }
    return p;
}

Poly appell_b12(unsigned nu) { return appell_s(2 * nu).even_part_in_square(Var::y0); }

Poly appell_b11s(unsigned nu) {
    Poly dr = appell_r(2 * nu).derivative();           // odd in zeta
    Poly scaled = Poly::identity(Var::zeta) * dr;      // zeta * dR_2v, even
    return scaled.even_part_in_square(Var::y0);
}

Poly appell_f1hat(unsigned nu) {
    return (appell_r(2 * nu) / Rat(2 * nu + 1)).even_part_in_square(Var::y0);
}

AppellFamily build_appell(unsigned nmax) {
    if (nmax < 1) throw std::invalid_argument("build_appell: nmax must be >= 1");
    AppellFamily fam;
    fam.nmax = nmax;
    for (unsigned n = 0; n <= nmax; ++n) {
        fam.S.push_back(appell_s(n));
        fam.R.push_back(appell_r(n));
    }
    for (unsigned nu = 0; 2 * nu <= nmax; ++nu) {
        fam.b12.push_back(appell_b12(nu));
        fam.b11s.push_back(appell_b11s(nu));
        fam.f1hat.push_back(appell_f1hat(nu));
    }
    return fam;
}

CheckReport appell_derivative_check(const AppellFamily& fam) {
    CheckReport rep;
    for (unsigned n = 1; n <= fam.nmax; ++n) {
        if (fam.S[n].derivative() != Rat(n) * fam.S[n - 1])
            rep.fail("dS_" + std::to_string(n) + " != " + std::to_string(n) + " S_" + std::to_string(n - 1));
        if (fam.R[n].derivative() != Rat(n) * fam.R[n - 1])
            rep.fail("dR_" + std::to_string(n) + " != " + std::to_string(n) + " R_" + std::to_string(n - 1));
    }
    return rep;
}

CheckReport appell_generating_check(unsigned kmax) {
    CheckReport rep;
    // Expand I_0(2s) e^{s zeta} as a series in s with Poly-in-zeta
    // coefficients: coefficient of s^k is sum_{2u<=k} 1/(u!)^2 zeta^(k-2u)/(k-2u)!.
    for (unsigned k = 0; k <= kmax; ++k) {
        Poly coeff(Var::zeta);
        for (unsigned u = 0; 2 * u <= k; ++u) {
            Rat term = Rat(1) / Rat(factorial(u) * factorial(u)) / Rat(factorial(k - 2 * u));
            coeff.set_coeff(k - 2 * u, coeff[k - 2 * u] + term);
        }
        if (coeff * Rat(factorial(k)) != appell_s(k))
            rep.fail("generating-function coefficient k=" + std::to_string(k));
    }
    return rep;
}

CheckReport appell_binomial_check(unsigned nmax, const Rat& sigma) {
    CheckReport rep;
    Poly shift(Var::zeta, {sigma, Rat(1)});  // zeta + sigma
    for (unsigned n = 0; n <= nmax; ++n) {
        Poly lhs = appell_s(n).compose(shift);
        Poly rhs(Var::zeta);
        for (unsigned k = 0; k <= n; ++k) {
            Rat sk = appell_s(k).eval(sigma);
            rhs = rhs + Poly::monomial(Var::zeta, Rat(binomial(n, k)) * sk, n - k);
        }
        if (lhs != rhs) rep.fail("binomial identity at n=" + std::to_string(n));
    }
    return rep;
}

CheckReport appell_recursion_check(unsigned numax) {
    CheckReport rep;
    for (unsigned nu = 1; nu <= numax; ++nu) {
        // d^2 S_2v = 2v(2v-1) S_2v-2, so S_2v rebuilds from the double
        // antiderivative; parity kills the linear constant and the additive
        // constant is the central binomial.
        Poly anti2 =
            (Rat(2 * nu) * Rat(2 * nu - 1) * appell_s(2 * nu - 2)).antiderivative().antiderivative();
        Poly rec = anti2 + Poly::constant(Var::zeta, Rat(binomial(2 * nu, nu)));
        if (rec.even_part_in_square(Var::y0) != appell_b12(nu))
            rep.fail("b12 recursion at nu=" + std::to_string(nu));
        // b11 route: dR_2v = antiderivative' trick -- dR_2v equals the
        // antiderivative of dR'_2v = (2v)(2v-1) R_{2v-2}; with zero constant.
        Poly dr = appell_r(2 * nu).derivative();
        Poly rebuilt = (Rat(2 * nu) * Rat(2 * nu - 1) * appell_r(2 * nu - 2)).antiderivative();
        if (dr != rebuilt) rep.fail("b11 recursion at nu=" + std::to_string(nu));
    }
    return rep;
}

Poly divisibility_quotient(unsigned nu) {
    if (nu < 1) throw std::invalid_argument("divisibility_quotient: nu must be >= 1");
    long j = 2 * static_cast<long>(nu) + 1;
    Poly lhs = Rat(2 * j - 2) * appell_b12(nu) - Rat(j) * appell_b11s(nu);
    Poly four_minus(Var::y0, {Rat(4), Rat(-1)});
    return exact_div(lhs, four_minus);  // throws on nonzero remainder
}

Poly rotate_to_real_axis(const Poly& p) {
    // p has fixed parity; p(i z) = i^deg * q(z) with q real.  Coefficient of
    // z^k picks up i^k; dividing by i^(parity) leaves signs (-1)^((k-parity)/2).
    Poly q(p.var());
    int parity = -1;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p[static_cast<size_t>(k)] == 0) continue;
        if (parity < 0) parity = k % 2;
        if (k % 2 != parity) throw std::domain_error("rotate_to_real_axis: mixed parity");
        int half = (k - parity) / 2;
        Rat sign = (half % 2 == 0) ? Rat(1) : Rat(-1);
        q.set_coeff(static_cast<size_t>(k), sign * p[static_cast<size_t>(k)]);
    }
    return q;
}

namespace {

// Is root a strictly below root b?  Refines both until the intervals
// separate; distinct simple roots always separate.
bool strictly_below(IsolatedRoot& a, IsolatedRoot& b) {
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        if (a.hi < b.lo) return true;
        if (b.hi < a.lo) return false;
        if (a.exact() && b.exact()) return a.lo < b.lo;
        a = refine(a, bits);
        b = refine(b, bits);
    }
    throw std::runtime_error("could not separate two isolated roots");
}

}  // namespace

CheckReport interlacing_check(unsigned nmax) {
    CheckReport rep;
    if (nmax < 2) {
        rep.fail("interlacing check needs nmax >= 2");
        return rep;
    }
    auto check_family = [&](const char* name, auto member) {
        std::vector<IsolatedRoot> prev;
        for (unsigned n = 1; n <= nmax; ++n) {
            Poly q = rotate_to_real_axis(member(n));
            // symmetry about 0
            if (!(q.reflected() == q || q.reflected() == -q))
                rep.fail(std::string(name) + std::to_string(n) + ": not symmetric about 0");
            auto roots = sturm_isolate_all(q);
            for (auto& r : roots) r = refine(r, 64);
            // Sturm counts distinct roots, so count == degree forces simplicity.
            if (static_cast<int>(roots.size()) != member(n).degree()) {
                rep.fail(std::string(name) + std::to_string(n) + ": expected " +
                         std::to_string(member(n).degree()) + " simple real roots, found " +
                         std::to_string(roots.size()));
                prev.clear();
                continue;
            }
            if (!prev.empty() && prev.size() + 1 == roots.size()) {
                bool inter = true;
                for (size_t i = 0; inter && i < prev.size(); ++i)
                    inter = strictly_below(roots[i], prev[i]) && strictly_below(prev[i], roots[i + 1]);
                if (!inter)
                    rep.fail(std::string(name) + std::to_string(n) + ": interlacing violated");
            }
            prev = std::move(roots);
        }
    };
    check_family("S", [](unsigned n) { return appell_s(n); });
    check_family("R", [](unsigned n) { return appell_r(n); });
    return rep;
}

}  // namespace mapenum
