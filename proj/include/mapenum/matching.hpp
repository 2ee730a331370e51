// Exhaustive dart-matching oracle.
//
// A labelled map with prescribed vertex valences is a perfect matching of
// darts against the fixed vertex rotations: vertex v owns a block of
// consecutive darts and sigma cycles them in increasing order.  For each
// matching iota the face count is the number of cycles of sigma o iota, and
// Euler's relation V - E + F = 2 - 2g splits connected matchings by genus.
// Disconnected matchings contribute componentwise: V - E + F = 2c - 2G with
// c components and total genus G.

#pragma once

#include "mapenum/rat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mapenum {

struct MatchingTally {
    std::vector<unsigned> valences;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> connected_by_genus;
    std::uint64_t disconnected = 0;
    // all matchings keyed by (component count, total genus); the c = 1 rows
    // duplicate connected_by_genus
    std::map<std::pair<int, int>, std::uint64_t> by_components_genus;

    std::uint64_t connected(unsigned g) const {
        return g < connected_by_genus.size() ? connected_by_genus[g] : 0;
    }
};

// Work estimate: (D-1)!! leaves for D darts.
double matching_work_estimate(const std::vector<unsigned>& valences);

// Enumerate every perfect matching of the darts of the given vertices.
// `sigma` optionally replaces the canonical rotation (a permutation of all
// darts whose cycles must coincide with the vertex blocks); used to verify
// labelling invariance.  Throws when the dart count is odd or the work
// estimate exceeds `work_budget`.
MatchingTally oracle_counts(const std::vector<unsigned>& valences,
                            const std::vector<unsigned>* sigma = nullptr,
                            double work_budget = 4.0e8, unsigned threads = 0);

// n vertices of valence j.
MatchingTally oracle_counts_regular(unsigned j, unsigned n, double work_budget = 4.0e8);

// m vertices of valence j plus two 1-valent leg vertices.
MatchingTally oracle_counts_twolegged(unsigned j, unsigned m, double work_budget = 4.0e8);

}  // namespace mapenum
