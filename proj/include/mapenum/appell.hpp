// Appell polynomial families generated by inverse modified Bessel functions.
//
// S_n(zeta) = I_0(2 d/dzeta) zeta^n and R_n(zeta) = (I_1(2 d/dzeta)/d) zeta^n
// are the polynomial families behind all string data.  Closed multinomial
// sums give them directly:
//
//   S_2v(z)   = sum_u  C(2v;   2u,   v-u, v-u)     z^(2u)
//   S_2v+1(z) = sum_u  C(2v+1; 2u+1, v-u, v-u)     z^(2u+1)
//   dR_2v(z)  = sum_u  C(2v;   2u-1, v-u, v-u+1)   z^(2u-1)   = 2v R_2v-1
//   dR_2v+1   = sum_u  C(2v+1; 2u,   v-u, v-u+1)   z^(2u)     = (2v+1) R_2v
//
// with C(n; a,b,c) the trinomial coefficient.  The derived square-root-free
// packages in y0 = zeta^2:
//
//   b12(v)      = S_2v(sqrt y0)                   (degree v, constant C(2v,v))
//   b11s(v)     = sqrt(y0) * dR_2v(sqrt y0)       (degree v, zero constant)
//   f1hat(v)    = R_2v(sqrt y0) / (2v+1)

#pragma once

#include "mapenum/poly.hpp"
#include "mapenum/roots.hpp"
#include "mapenum/series.hpp"

#include <string>
#include <vector>

namespace mapenum {

struct AppellFamily {
    unsigned nmax = 0;
    std::vector<Poly> S;       // S_0 .. S_nmax in zeta
    std::vector<Poly> R;       // R_0 .. R_nmax in zeta
    std::vector<Poly> b12;     // index v: S_2v as polynomial in y0 (needs 2v <= nmax)
    std::vector<Poly> b11s;    // index v: sqrt(y0)*dR_2v as polynomial in y0
    std::vector<Poly> f1hat;   // index v: R_2v/(2v+1) as polynomial in y0
};

// Construct the family up to S_nmax / R_nmax (nmax >= 1).
AppellFamily build_appell(unsigned nmax);

// Single members (used where a whole family is overkill).
Poly appell_s(unsigned n);          // S_n(zeta)
Poly appell_r(unsigned n);          // R_n(zeta)
Poly appell_b12(unsigned nu);       // in y0
Poly appell_b11s(unsigned nu);      // sqrt(y0)*B11 in y0
Poly appell_f1hat(unsigned nu);     // in y0

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

// dS_n = n S_{n-1} and dR_{2v+1} = (2v+1) R_2v across the family.
CheckReport appell_derivative_check(const AppellFamily& fam);

// Coefficient of s^k in I_0(2s) e^{s zeta} equals S_k(zeta)/k! for k <= kmax.
CheckReport appell_generating_check(unsigned kmax);

// Binomial convolution S_n(zeta + sigma) = sum C(n,k) S_k(sigma) zeta^(n-k).
CheckReport appell_binomial_check(unsigned nmax, const Rat& sigma);

// The antiderivative recursions reproduce b12 / b11s exactly.
CheckReport appell_recursion_check(unsigned numax);

// Exact quotient of (2j-2)*b12 - j*b11s by (4 - y0), j = 2nu+1.
// Throws if the division leaves a remainder (it never does).
Poly divisibility_quotient(unsigned nu);

// Root reality, symmetry and interlacing of S_n(i zeta) and R_n(i zeta)
// for all 2 <= n <= nmax, via Sturm isolation.
CheckReport interlacing_check(unsigned nmax);

// Helper shared with the curve module: S_n(i*zeta) as a real polynomial
// (the i^n prefactor stripped).
Poly rotate_to_real_axis(const Poly& p);

}  // namespace mapenum
