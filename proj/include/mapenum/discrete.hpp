// Finite-n orthogonal-polynomial oracle.
//
// Moments of exp(-N(lambda^2/2 + t lambda^j)) expand formally in t into
// Gaussian moments; with eps = 1/N carried symbolically each t-coefficient
// is an exact polynomial in eps.  The Stieltjes recursion then produces the
// recurrence coefficients a_n(t), b_n^2(t) as t-series over Q(eps); their
// constant terms are the Gaussian values a_n = 0, b_n^2 = n eps, and the
// norms reproduce the Hankel determinant ratios d_n = det H_{n+1}/det H_n.

#pragma once

#include "mapenum/appell.hpp"   // CheckReport
#include "mapenum/ratfn.hpp"

#include <vector>

namespace mapenum {

// Truncated t-series with rational-function-in-eps coefficients.
class ESeries {
public:
    ESeries() = default;
    explicit ESeries(unsigned order) : c_(order + 1, zero_fn()) {}

    static RatFn zero_fn() { return RatFn(Poly(Var::eps)); }
    static ESeries constant(unsigned order, const RatFn& v) {
        ESeries s(order);
        s.c_[0] = v;
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const RatFn& operator[](size_t i) const { return c_[i]; }
    RatFn& at(size_t i) { return c_[i]; }

    bool is_zero() const;
    friend ESeries operator+(const ESeries& a, const ESeries& b);
    friend ESeries operator-(const ESeries& a, const ESeries& b);
    friend ESeries operator*(const ESeries& a, const ESeries& b);
    friend ESeries operator*(const RatFn& s, const ESeries& a);
    friend ESeries operator*(const Rat& s, const ESeries& a);
    ESeries operator-() const;
    ESeries inverse() const;             // needs invertible constant term
    ESeries dt() const;                  // d/dt, order drops by one
    ESeries truncated(unsigned order) const;

    // substitute eps -> value and read the coefficient of t^k
    Rat coeff_at(unsigned k, const Rat& eps_value) const;

private:
    std::vector<RatFn> c_;
};

struct TSeriesCoeff {
    unsigned j = 0;
    unsigned nmax = 0;
    unsigned K = 0;                 // t-truncation order
    std::vector<ESeries> a;         // a[0..nmax]
    std::vector<ESeries> b2;        // b2[0..nmax], b2[0] = 0
    std::vector<ESeries> norms;     // <pi_n, pi_n>, n = 0..nmax
};

// Formal moment m_k(t) through t^K (the sqrt(2 pi / N) prefactor is dropped;
// it cancels in every ratio).
ESeries formal_moment(unsigned j, unsigned k, unsigned K);

// Integration-by-parts identity on the moments themselves:
// eps k m_{k-1} = m_{k+1} + j t m_{k+j-1}, exact through t^K.  This is the
// statement that the rotated odd-j contour reduces to Gaussian moments order
// by order.
CheckReport moment_string_identity(unsigned j, unsigned kmax, unsigned K);

TSeriesCoeff hankel_recurrence(unsigned j, unsigned nmax, unsigned K);

// Gaussian-slice Hankel positivity plus agreement of the Stieltjes norms
// with literal Hankel determinants at a sample eps value.
CheckReport hankel_determinant_check(const TSeriesCoeff& c, unsigned N_sample);

// 0 = V'(L)_{n,n} and n eps = V'(L)_{n,n-1} for all window-interior n.
CheckReport verify_string(const TSeriesCoeff& c);

// Toda and edge-Toda flows for the coupling t = t_j.
CheckReport verify_toda_and_edge(const TSeriesCoeff& c);

// t1-flow sanity on Gaussian-perturbed data: N^-1 d/dt1 a_n = b_n^2 - b_{n+1}^2
// and N^-1 d/dt1 b_n^2 = b_n^2 (a_{n-1} - a_n).
CheckReport verify_t1_toda(unsigned nmax, unsigned K);

// Exact genus-expansion extraction: for each t-order k, the value of
// [t^k] b_n^2 at eps = 1/n is a polynomial in 1/n^2; fit it exactly over the
// sample set and return coefficient tables  z[g][k], u[g][k].
struct GenusExtraction {
    std::vector<std::vector<Rat>> z;  // z[g][k] = [t^k] z_g
    std::vector<std::vector<Rat>> u;  // u[g][k] = [t^k] u_g
    bool consistent = true;
    std::string detail;
};
GenusExtraction extract_genus_coeffs(unsigned j, unsigned K, unsigned n_lo, unsigned n_hi);

}  // namespace mapenum
