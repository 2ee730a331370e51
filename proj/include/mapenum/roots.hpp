// Real-root isolation by Sturm sequences and exact bisection refinement.

#pragma once

#include "mapenum/poly.hpp"
#include "mapenum/ratfn.hpp"

#include <optional>
#include <vector>

namespace mapenum {

// One isolated real root of `poly` (squarefree): the open interval (lo, hi)
// contains exactly one root, or lo == hi when the root is rational and hit
// exactly.  `value` is the bisection-refined midpoint, good to `precision`
// bits (interval width <= 2^(1-precision) * initial width).
struct IsolatedRoot {
    Poly poly;
    Rat lo, hi;
    Rat value;
    unsigned precision = 0;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
};

class SturmChain {
public:
    explicit SturmChain(const Poly& squarefree);

    // Number of sign variations of the chain at x.
    int variations(const Rat& x) const;
    // Number of distinct real roots in (a, b]; requires a < b.
    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

    const Poly& polynomial() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

// Isolate every real root of p inside (lo, hi).  p may have repeated roots;
// isolation runs on its squarefree part.  Throws on the zero polynomial.
std::vector<IsolatedRoot> sturm_isolate(const Poly& p, const Rat& lo, const Rat& hi);

// All real roots (search window from Cauchy's bound).
std::vector<IsolatedRoot> sturm_isolate_all(const Poly& p);

// Shrink the isolating interval until its width is <= 2^(1-bits); sets
// value/precision on the returned root.
IsolatedRoot refine(IsolatedRoot root, unsigned bits);

// Exact evaluation of f at the refined root, as a double.  Convenience for
// numeric layers; the interval carries the accuracy statement.
double eval_at_root(const RatFn& f, const IsolatedRoot& root);

}  // namespace mapenum
