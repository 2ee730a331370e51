// Critical-point data and the singular-coefficient recurrences.
//
// At the right turning point (xi_c^2, y0c) the even generating functions
// behave like powers of tau = (xi - xi_c)^(1/2); the leading Puiseux data
//   f0x ~ gamma / tau,     f_g ~ zeta_g tau^(1-5g),     e_g ~ c_g tau^(5-5g)
// drive the recurrence
//   0 = zeta_{g+1} + C1 C2 z0c^(2g-1) (25 g^2 - 1) zeta_g
//         + 6 C1 sum_{m=1..g} zeta_m zeta_{g+1-m},
// with C1 = j xi_c z0c^(j/2-1) gamma ((1/3)S'' + (1/3)R'' - (1/12)R')|_c and
// C2 = ((j/2-1)^2/4) xi_c^2.  The branch with xi_c < 0 makes C1 < 0 and all
// zeta_g positive.  Algebraic quantities are evaluated at the refined root;
// everything downstream of the square roots is float-grade and tagged with
// the refinement precision.

#pragma once

#include "mapenum/genfun.hpp"

#include <string>
#include <vector>

namespace mapenum {

struct CriticalData {
    unsigned j = 0;
    unsigned precision_bits = 0;
    IsolatedRoot y0c;       // smallest positive real root of Pi
    Rat xi2_c;              // xi^2 at the refined root (exact at the sample point)
    double y0c_value = 0;
    double xi2c_value = 0;
    double z0c = 0;
    double xi_c = 0;        // = -sqrt(xi2_c), the branch used by the recurrence
    double kappa = 0;       // d^2(xi^2)/dy0^2 at y0c (negative)
    double gamma = 0;       // f0x ~ gamma/tau
    double gamma_fd = 0;    // finite-difference cross-check of gamma
    double C1 = 0, C2 = 0;
    double sc = 0, rpp = 0, rp = 0;  // S''(s_c), dR''(s_c), dR'(s_c)
    double zeta1 = 0;       // from the exact f1 rational form
    double c2_direct = 0;   // top Laurent coefficient of e2 at y0c (j=3)
};

CriticalData critical_data(unsigned j, unsigned precision_bits);

// zeta_g for g = 1..gmax; throws when a computed zeta_g fails to be positive.
std::vector<double> zeta_recurrence(const CriticalData& cd, unsigned gmax);

// Exact/asymptotic comparison rows.
struct RatioRow {
    unsigned m = 0;
    Rat exact;
    double asymptotic = 0;
    double ratio = 0;
};

// Two-legged genus-g coefficients against the tau-singularity law
// kappa(2m)/(2m)! ~ (zeta_g / Gamma((5g-1)/2)) t_c^(1/2-5g/2-2m) (2m)^((5g-3)/2).
std::vector<RatioRow> twolegged_vs_asymptotic(unsigned j, unsigned genus, unsigned m_lo,
                                              unsigned m_hi, const CriticalData& cd);

// Genus-2 e_g coefficients at j=3 against
// kappa(2m)/(2m)! ~ (c_2 / Gamma(5/2)) t_c^(1/2-5-2m) (2m)^(3/2),
// with c_2 extracted from the exact e2 rational form.
std::vector<RatioRow> e2_vs_asymptotic(unsigned m_lo, unsigned m_hi, const CriticalData& cd);

// |ratio - 1| or the ratio drift must shrink monotonically over the rows.
bool drift_decreasing(const std::vector<RatioRow>& rows);

}  // namespace mapenum
