// Map-count extraction and adjudication.
//
// Three independent routes to the same numbers:
//   closed-form : n! * [xi^n] e_g from the series engine,
//   residue     : coefficient extraction from the exact rational integrand
//                 (1/m) (de_g/dy0) j^(2m) b12^(jm) / shat^((j-2)m) y0^(-m),
//   oracle      : exhaustive dart matchings.
// The printed tables additionally divide by j once (edge-label removal);
// both raw and table values are carried side by side.

#pragma once

#include "mapenum/genfun.hpp"
#include "mapenum/matching.hpp"

#include <string>
#include <vector>

namespace mapenum {

struct CountRow {
    unsigned j = 0;
    unsigned genus = 0;
    unsigned vertices = 0;
    Rat value;         // raw labelled count (or raw series value; see note)
    std::string mode;  // "closed-form", "residue-faithful", "oracle"
    std::string note;
};

// Closed-form counts for the supported (j, g) pairs:
// odd j: g in {0, 1(full), 1(table), 2 for j=3}; even j: g in {0, 1}.
// Rows carry raw values; for odd j vertices run over 2, 4, ..., 2*mmax.
std::vector<CountRow> kappa_closed(unsigned j, unsigned genus, unsigned mmax);

// Residue-mode value of kappa_g(2m)/(2m)! times (2m)! (the raw labelled
// count), genus 0 or 1, odd j.  The genus-1 integrand is the residue-faithful
// derivative (it omits the log z0 term of the genus-1 closed form).
Rat kappa_residue(unsigned j, unsigned genus, unsigned m);
// Same with the single division by j applied (the printed-table convention).
Rat kappa_residue_table(unsigned j, unsigned genus, unsigned m);

std::vector<CountRow> twolegged_series(unsigned j, unsigned genus, unsigned mmax);

// The genus-1 adjudication at j=3: oracle tallies versus the two genus-1
// series modes.  `winner` names the mode whose raw coefficients match the
// oracle; empty when neither matches.
struct AdjudicationReport {
    std::uint64_t oracle_n2_total = 0, oracle_n2_g0 = 0, oracle_n2_g1 = 0, oracle_n2_disc = 0;
    std::uint64_t oracle_n4_total = 0, oracle_n4_g0 = 0, oracle_n4_g1 = 0, oracle_n4_disc = 0;
    Rat full_n2, full_n4;      // full-mode raw counts (coef * n!)
    Rat table_n2, table_n4;    // residue-faithful raw counts
    std::string winner;
    std::string detail;        // the arithmetic, one line per comparison
};
AdjudicationReport adjudicate_genus1_trivalent();

// Exponential (all-matchings) consistency: exponentiating the connected
// generating series by genus reproduces the full tally; checked for n <= nmax
// vertices of valence j.
CheckReport exp_log_consistency(unsigned j, unsigned nmax, double work_budget = 4.0e8);

}  // namespace mapenum
