// Spectral-curve package for a single valence.
//
// For odd j = 2v+1 the curve in the (xi^2, y0) plane is
//
//     xi^2 = (1/j^2) y0 shat^(j-2) / b12^j,      shat = b12 - b11s,
//
// with z0 = b12/shat, and the discriminant splits through the conjugate
// polynomials Pi_-+(s), s = sqrt(y0):
//
//     (2 b12 - j s b11 -+ (j-2) s b12) = Pi_-+ * (2 +- s)      (exact)
//     dhat_-+ = (2 - j(1 - 1/z0)) -+ (j-2) s = (2 +- s) Pi_-+ / b12
//
// The w-derivatives of the leading generating functions at w = 1 live on
// the curve:  f0w = (b12/2)(1/Pi_- + 1/Pi_+)  and  sqrt(f0) h0w =
// (b12/2)(1/Pi_- - 1/Pi_+) = sqrt(y0) * g_h0w(y0).
//
// For even j the system collapses to the scalar law with
// xi = (x - f0)/(c_j f0^(j/2)), c_j = j C(j-1, j/2-1).

#pragma once

#include "mapenum/appell.hpp"
#include "mapenum/poly.hpp"
#include "mapenum/ratfn.hpp"
#include "mapenum/roots.hpp"

#include <optional>
#include <vector>

namespace mapenum {

struct CurveModel {
    unsigned j = 0;
    bool odd = true;
    unsigned nu = 0;  // (j-1)/2 for odd j, j/2 for even j

    // odd-valence data; polynomials in y0 unless tagged otherwise
    Poly b12;          // S_2v(sqrt y0)
    Poly b11s;         // sqrt(y0) * dR_2v(sqrt y0)
    Poly b11_s;        // dR_2v(s), odd polynomial in s
    Poly b12_s;        // S_2v(s)
    Poly shat;         // b12 - b11s
    RatFn xi2;         // in y0
    RatFn z0;          // in y0
    RatFn dhat_minus, dhat_plus;  // in s
    Poly pi_minus, pi_plus;       // in s
    Poly pi;                      // Pi_- Pi_+ in y0
    std::optional<Poly> q;        // rational real-root quadratic factor (exists for j=3)
    RatFn dhat;        // dhat_- dhat_+ in y0
    RatFn f0w;         // in y0 (value at w = 1)
    RatFn g_h0w;       // sqrt(f0) h0w = sqrt(y0) g_h0w(y0)

    // even-valence data
    Rat c_j;
    RatFn xi_of_z0;    // (1 - z0)/(c_j z0^(j/2)) in z0, at x = 1
};

CurveModel build_curve(unsigned j);

// Exact rational-function identity suite (throws nothing; reports failures):
//   - d(xi^2)/dy0 = -z0 xi^2 dhat / (y0 (y0 - 4))
//   - f0w^2 - f0 h0w^2 = b12^2/Pi = (4 - y0)/dhat
//   - (2 b12 - j s b11)^2 - (j-2)^2 y0 b12^2 = (4 - y0) Pi
//   - dhat_+ - dhat_- = 2 (j-2) s
//   - (f0w +- sqrt(f0) h0w) dhat_-+ = 2 +- s   (the w-derivative of the
//     Riemann invariants r_+- = r_+-/d_-+ in hatted form)
//   - d(xi^2)/dy0 at 0 equals 1/(j C(2v,v))^2
CheckReport derivative_identities(const CurveModel& m);

struct BranchPoints {
    IsolatedRoot right;  // smallest positive real root of Pi, xi^2 > 0 side
    IsolatedRoot left;   // the other real root
    Rat xi2_right;       // xi^2 evaluated at the refined right root
    Rat xi2_left;
};

// Isolates the two real turning points (roots of Pi over y0 > 0) and
// refines to `bits`.  Hard failure if the real-root count is not 2.
BranchPoints branch_points(const CurveModel& m, unsigned bits);

// Pointwise Riemann-invariant data at a non-pole rational point y0 > 0 on
// the physical branch (w = 1):  r+- = +-sqrt(f0)(2 +- sqrt(y0)),
// lambda+- = f0^(v+1/2) (dR +- S)(sqrt y0), dhat+-.
// sqrt evaluations are numeric doubles; exact parts stay exact.
struct RiemannData {
    double r_plus, r_minus;
    double lambda_plus, lambda_minus;
    double dhat_plus, dhat_minus;
};
RiemannData riemann_data(const CurveModel& m, const Rat& y0);

// Numeric conservation-law residual check.  The implicit string equations
//   0 = h0 + sum_j j t_j [eta^0] L0^(j-1)
//   x = f0 + sum_j j t_j [eta^-1] sqrt(f0) L0^(j-1)
// are solved by damped Newton continuation from the Gaussian point
// (h0, f0) = (0, x) along t = xi * dir, and the residual
//   d/dxi (h0, log f0) + d/dx (F1, F2),   (F1, F2) = sum_j dir_j (psi_-1, phi_-1)
// is formed with centered differences of spacing hx.  Returns the max norm;
// grid points where Newton fails are excluded and counted.
struct ConservationResult {
    double max_residual = 0.0;
    int failed_points = 0;
    int evaluated_points = 0;
};
ConservationResult conservation_residual(const std::vector<Rat>& dir, double xi_max,
                                         double x_lo, double x_hi, int n_xi, int n_x,
                                         double hdiff);

// Exact curve samples (y0, xi^2) for plotting/export, y0 on a uniform
// rational grid over [y_lo, y_hi] with poles skipped.
std::vector<std::pair<Rat, Rat>> sample_curve(const CurveModel& m, const Rat& y_lo,
                                              const Rat& y_hi, unsigned count);

}  // namespace mapenum
