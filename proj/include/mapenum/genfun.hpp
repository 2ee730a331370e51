// Closed-form generating functions and their xi-series on the spectral curve.
//
// Odd valence: every function of interest is a rational function of y0 (or
// such a function times the odd unit u0), and the series engine is
//   xi^2 = y0 Psi(y0)  --reversion-->  y0(xi^2)  --composition-->  the rest.
// x-derivatives at x = 1 never leave the curve: for G = x^gamma g(y0(xi^2)),
//   dG/dx|_{x=1} = gamma g + ((j-2)/2) xi dg/dxi,
// and xi d/dxi acts on y0-rational functions as multiplication of d/dy0 by
// the exact rational factor 2 y0 (4 - y0) / (z0 dhat).
//
// Even valence: the scalar law gives z0(xi) by reversion of
// xi = (1 - z0)/(c_j z0^(j/2)); everything is a xi-series directly.

#pragma once

#include "mapenum/curve.hpp"
#include "mapenum/series.hpp"

#include <optional>
#include <string>

namespace mapenum {

struct ClosedForm {
    std::string label;
    RatFn rational;      // rational part, a function of y0
    Rat log_z0_coeff;    // coefficient of log z0
    Rat log_aux_coeff;   // coefficient of log aux(y0); aux(0) must be 1
    RatFn aux;
};

// Exact d/dy0 of a closed form.
RatFn closed_form_dy0(const ClosedForm& cf, const CurveModel& m);

ClosedForm e0_closed(const CurveModel& m);
ClosedForm e1_closed_full(const CurveModel& m);
ClosedForm e1_closed_table(const CurveModel& m);  // the residue-faithful variant
ClosedForm e2_closed_j3();

// x-derivative data on the curve at x = 1 (odd valence).  Quantities tagged
// `W` are x^gamma * val(y0); `H` additionally carry the odd unit
// u0 = -sqrt(y0 z0).
struct CurveJet {
    unsigned j = 0;
    RatFn t_factor;        // xi d/dxi as a y0-operator: d/dy0 times this
    RatFn f0x, f0xx;       // values at x=1 (x-weights 0 and -1)
    RatFn h1_over_h0;      // x-weight -1
    RatFn h2_over_h0;      // x-weight -2
    RatFn z1;              // f1 at x=1, x-weight -1
    RatFn d2;              // f0x^2 - f0 h0x^2 = (4-y0)/dhat
};
CurveJet build_curve_jet(const CurveModel& m);

struct SeriesContext {
    unsigned j = 0;
    bool odd = true;
    unsigned M = 0;  // truncation order in xi^2 (odd) or xi (even)

    // odd valence (var xi2 unless noted)
    Series y0_of_xi2;
    Series z0_of_xi2;
    Series u0_of_xi;     // var xi, odd, order 2M-1
    Series e0;
    Series e1_full;
    Series e1_table;
    std::optional<Series> e2;   // j = 3 only
    Series f1_of_xi2;
    Series h1_of_xi;     // var xi, odd
    Series h2_of_xi;     // var xi, odd

    // even valence (var xi)
    Series z0_of_xi;
    Series e0_of_xi;          // from the even-valence closed form
    Series e0_of_xi_general;  // h0 -> 0 limit of the general form (cross-check)
    Series e1_of_xi;          // -(1/12) log(nu - (nu-1) z0)
    Series e1_of_xi_general;  // h0 -> 0 limit of the general E1
    Series f1_of_xi;
};

SeriesContext build_series_context(unsigned j, unsigned M);

// Residual of the scaled string equations on the series data:
//   1 - z0 - xi psi~_0(u0, z0)  and  -u0 - xi phi~_0(u0, z0),
// both must vanish identically.  (Odd valence.)
std::pair<Series, Series> string_equation_residual(const SeriesContext& ctx);

// Compose a closed form with the context's series; the value at xi = 0 is
// subtracted (no zero-vertex maps).
Series closed_form_series(const ClosedForm& cf, const SeriesContext& ctx);

// The even-valence constants C^(g) for g = 2..gmax by the printed recursion
//   C^(g) = -2 (2g-3)! [ 1/(2g+2)! - 1/((2g)! 12)
//            + (1-delta_{g,2})/(2g-1)! * sum_{k=2}^{g-1} (2-2k)_{2g-2k+2}/(2g-2k+2)! C^(k) ].
// Returned vector is indexed so that [g] = C^(g); entries 0, 1 are zero.
std::vector<Rat> even_cg_constants(unsigned gmax);

}  // namespace mapenum
