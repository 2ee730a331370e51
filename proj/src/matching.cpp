#include "mapenum/matching.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mapenum {

double matching_work_estimate(const std::vector<unsigned>& valences) {
    unsigned darts = std::accumulate(valences.begin(), valences.end(), 0u);
    double est = 1;
    for (unsigned k = darts; k > 1; k -= 2) est *= (k - 1);
    return est;
}

namespace {

struct Enumerator {
    unsigned darts = 0;
    unsigned nv = 0;
    std::vector<int> vertex_of;       // dart -> vertex
    std::vector<unsigned> sigma;      // dart -> next dart in its rotation

    // scratch (one per worker)
    struct Scratch {
        std::vector<int> match;
        std::vector<int> uf;
        std::vector<char> seen;
        std::map<std::pair<int, int>, std::uint64_t> tally;

        int find(int a) {
            while (uf[a] != a) a = uf[a] = uf[uf[a]];
            return a;
        }
    };

    void tally_leaf(Scratch& s) const {
        // components of the vertex graph
        std::iota(s.uf.begin(), s.uf.end(), 0);
        for (unsigned d = 0; d < darts; ++d) {
            int a = s.find(vertex_of[d]);
            int b = s.find(vertex_of[static_cast<unsigned>(s.match[d])]);
            if (a != b) s.uf[a] = b;
        }
        int comps = 0;
        for (unsigned v = 0; v < nv; ++v)
            if (s.find(static_cast<int>(v)) == static_cast<int>(v)) ++comps;
        // faces: cycles of sigma o iota
        std::fill(s.seen.begin(), s.seen.end(), 0);
        int faces = 0;
        for (unsigned d = 0; d < darts; ++d) {
            if (s.seen[d]) continue;
            ++faces;
            unsigned e = d;
            while (!s.seen[e]) {
                s.seen[e] = 1;
                e = sigma[static_cast<unsigned>(s.match[e])];
            }
        }
        // V - E + F = 2c - 2G
        int euler = static_cast<int>(nv) - static_cast<int>(darts / 2) + faces;
        int genus2 = 2 * comps - euler;
        if (genus2 < 0 || genus2 % 2) throw std::logic_error("impossible Euler characteristic");
        ++s.tally[{comps, genus2 / 2}];
    }

    void recurse(Scratch& s, unsigned from) const {
        unsigned d = from;
        while (d < darts && s.match[d] >= 0) ++d;
        if (d == darts) {
            tally_leaf(s);
            return;
        }
        for (unsigned e = d + 1; e < darts; ++e) {
            if (s.match[e] >= 0) continue;
            s.match[d] = static_cast<int>(e);
            s.match[e] = static_cast<int>(d);
            recurse(s, d + 1);
            s.match[d] = s.match[e] = -1;
        }
    }
};

}  // namespace

MatchingTally oracle_counts(const std::vector<unsigned>& valences,
                            const std::vector<unsigned>* sigma_in, double work_budget,
                            unsigned threads) {
    Enumerator en;
    en.nv = static_cast<unsigned>(valences.size());
    for (unsigned v = 0; v < en.nv; ++v)
        for (unsigned k = 0; k < valences[v]; ++k) en.vertex_of.push_back(static_cast<int>(v));
    en.darts = static_cast<unsigned>(en.vertex_of.size());
    if (en.darts % 2) throw std::invalid_argument("oracle_counts: odd dart count has no matchings");
    double work = matching_work_estimate(valences);
    if (work > work_budget)
        throw std::invalid_argument("oracle_counts: over budget, ~" + std::to_string(work) +
                                    " matchings");

    if (sigma_in) {
        if (sigma_in->size() != en.darts)
            throw std::invalid_argument("oracle_counts: sigma size mismatch");
        en.sigma = *sigma_in;
    } else {
        en.sigma.resize(en.darts);
        unsigned base = 0;
        for (unsigned v = 0; v < en.nv; ++v) {
            for (unsigned k = 0; k < valences[v]; ++k)
                en.sigma[base + k] = base + (k + 1) % valences[v];
            base += valences[v];
        }
    }

    MatchingTally out;
    out.valences = valences;
    if (en.darts == 0) {
        out.total = 1;
        out.by_components_genus[{0, 0}] = 1;
        return out;
    }

    // fan out over the partner of dart 0
    unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::map<std::pair<int, int>, std::uint64_t>>> futs;
    std::vector<unsigned> partners;
    for (unsigned e = 1; e < en.darts; ++e) partners.push_back(e);
    unsigned chunk = (static_cast<unsigned>(partners.size()) + nthreads - 1) / nthreads;
    for (unsigned t = 0; t * chunk < partners.size(); ++t) {
        unsigned lo = t * chunk, hi = std::min<unsigned>((t + 1) * chunk, static_cast<unsigned>(partners.size()));
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            Enumerator::Scratch s;
            s.match.assign(en.darts, -1);
            s.uf.resize(en.nv);
            s.seen.resize(en.darts);
            for (unsigned idx = lo; idx < hi; ++idx) {
                unsigned e = partners[idx];
                s.match[0] = static_cast<int>(e);
                s.match[e] = 0;
                en.recurse(s, 1);
                s.match[0] = s.match[e] = -1;
            }
            return s.tally;
        }));
    }
    for (auto& f : futs)
        for (const auto& [key, count] : f.get()) out.by_components_genus[key] += count;

    for (const auto& [key, count] : out.by_components_genus) {
        out.total += count;
        if (key.first == 1) {
            if (out.connected_by_genus.size() <= static_cast<size_t>(key.second))
                out.connected_by_genus.resize(key.second + 1, 0);
            out.connected_by_genus[key.second] += count;
        } else {
            out.disconnected += count;
        }
    }
    return out;
}

MatchingTally oracle_counts_regular(unsigned j, unsigned n, double work_budget) {
    return oracle_counts(std::vector<unsigned>(n, j), nullptr, work_budget);
}

MatchingTally oracle_counts_twolegged(unsigned j, unsigned m, double work_budget) {
    std::vector<unsigned> val(m, j);
    val.push_back(1);
    val.push_back(1);
    return oracle_counts(val, nullptr, work_budget);
}

}  // namespace mapenum
