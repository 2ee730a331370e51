// String polynomials: eta-coefficients of powers of the tridiagonal symbol
//    L0 = sqrt(f0) eta + h0 + sqrt(f0) eta^{-1},
//
//   phi_m = (j)_{m+1} [eta^0]              L0^(j-m-1)
//   psi_m = (j)_{m+1} [eta^-1] sqrt(f0) *  L0^(j-m-1)
//
// Half-integer powers of f0 ride on the parity-tagged variable r with
// r^2 = f0; phi/psi always come out polynomial in (h0, r).  No symbolic eta
// is used: powers of the symbol are Laurent vectors convolved exactly.

#pragma once

#include "mapenum/appell.hpp"
#include "mapenum/poly.hpp"
#include "mapenum/series.hpp"

#include <vector>

namespace mapenum {

// Polynomial in h (= h0) and r (= sqrt f0): coeff(a,b) * h^a r^b.
class Poly2 {
public:
    Poly2() = default;

    static Poly2 constant(const Rat& v) {
        Poly2 p;
        p.set(0, 0, v);
        return p;
    }
    static Poly2 h_var() {
        Poly2 p;
        p.set(1, 0, Rat(1));
        return p;
    }
    static Poly2 r_var() {
        Poly2 p;
        p.set(0, 1, Rat(1));
        return p;
    }

    const Rat& coeff(size_t a, size_t b) const {
        static const Rat zero(0);
        if (a >= c_.size() || b >= c_[a].size()) return zero;
        return c_[a][b];
    }
    void set(size_t a, size_t b, const Rat& v) {
        if (a >= c_.size()) c_.resize(a + 1);
        if (b >= c_[a].size()) c_[a].resize(b + 1, Rat(0));
        c_[a][b] = v;
    }
    void add(size_t a, size_t b, const Rat& v) { set(a, b, coeff(a, b) + v); }

    size_t h_size() const { return c_.size(); }
    size_t r_size(size_t a) const { return a < c_.size() ? c_[a].size() : 0; }

    bool is_zero() const;
    bool even_in_r() const;  // true iff a polynomial in f0 = r^2
    bool even_in_h() const;

    // Divide by f0 = r^2 exactly; throws when some r-exponent is < 2.
    Poly2 div_f0() const;

    friend Poly2 operator+(const Poly2& x, const Poly2& y);
    friend Poly2 operator-(const Poly2& x, const Poly2& y);
    Poly2 operator-() const;
    friend Poly2 operator*(const Poly2& x, const Poly2& y);
    friend Poly2 operator*(const Rat& s, const Poly2& x);
    friend bool operator==(const Poly2& x, const Poly2& y);
    friend bool operator!=(const Poly2& x, const Poly2& y) { return !(x == y); }

    // Substitute series: h -> hs, r -> rs (exact truncated arithmetic).
    Series eval_series(const Series& hs, const Series& rs) const;

    // Substitute exact rationals.
    Rat eval(const Rat& h, const Rat& r) const;

    std::string str() const;

private:
    std::vector<std::vector<Rat>> c_;  // c_[a][b] : h^a r^b
};

struct StringPoly {
    unsigned j = 0;
    int m = 0;
    Poly2 value;
};

// Laurent vector of Poly2 coefficients of L0^power (eta-exponents
// -power..power stored shifted by +power).
std::vector<Poly2> symbol_power(unsigned power);

// The pair (phi_m, psi_m) for valence j >= 3 and -1 <= m <= j-1.
std::pair<StringPoly, StringPoly> string_phi_psi(unsigned j, int m);

// Independent construction through the Appell route: for odd j = 2v+1,
// phi_m = (j)_{m+1} f0^((2v-m)/2) S_{2v-m}(sqrt y0),
// psi_m = (j)_{m+1} f0^((2v-m+1)/2) dR_{2v-m}(sqrt y0),
// written out as Poly2 with y0 = h0^2/f0 cleared.
std::pair<Poly2, Poly2> string_phi_psi_appell(unsigned j, int m);

// Mixed-valence string polynomial sum_j j t_j phi_m^(j) (and psi); t[k] is
// the coupling of valence k+1.
std::pair<Poly2, Poly2> general_potential_phi_psi(const std::vector<Rat>& t, int m);

// Unwinding identity residual through the order of the supplied series:
// with f0 = x z0(xi), h0 = x^(1/2) u0(xi), xi = t x^((j-2)/2), checks
//   d/dx (phi_{m-1}, psi_{m-1})^T = [[h0', f0'/f0], [f0', h0']] (phi_m, psi_m)^T
// at x = 1 as identities between xi-series.  Returns per-component residuals.
struct UnwindingResidual {
    Series phi_residual;
    Series psi_residual;
    bool zero() const { return phi_residual.is_zero() && psi_residual.is_zero(); }
    int first_failing_order() const;
};
UnwindingResidual unwinding_check(unsigned j, int m, const Series& u0, const Series& z0);

}  // namespace mapenum
