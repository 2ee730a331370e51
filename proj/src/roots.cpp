#include "mapenum/roots.hpp"

#include <algorithm>
#include <deque>

namespace mapenum {

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() >= 1) chain_.push_back(p.derivative());
    while (chain_.back().degree() >= 1) {
        Poly r = divrem(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;  // p not squarefree; caller passed squarefree part
        chain_.push_back(-r);
    }
}

int SturmChain::variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& q : chain_) {
        Rat val = q.eval(x);
        int sign = val == 0 ? 0 : (val > 0 ? 1 : -1);
        if (sign != 0) {
            if (last != 0 && sign != last) ++v;
            last = sign;
        }
    }
    return v;
}

std::vector<IsolatedRoot> sturm_isolate(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_isolate: empty interval");
    Poly sf = squarefree_part(p);
    if (sf.degree() < 1) return {};

    std::vector<IsolatedRoot> out;
    SturmChain chain(sf);

    // Work with half-open intervals (a, b]; count() has exactly those
    // semantics, so nothing is ever dropped or double-counted.
    Rat a = lo;
    if (sf.eval(a) == 0) {
        out.push_back({sf, a, a, a, 0});
        Rat step = (hi - lo) / 1024;
        Rat moved = a + step;
        while (chain.count(a, moved) != 0) {
            step /= 2;
            moved = a + step;
        }
        a = moved;
    }
    if (!(a < hi)) return out;

    std::deque<std::pair<Rat, Rat>> work{{a, hi}};
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        int n = chain.count(x, y);
        if (n == 0) continue;
        if (n == 1) {
            if (sf.eval(y) == 0) {
                out.push_back({sf, y, y, y, 0});
                continue;
            }
            // keep the left endpoint off any root so sign bisection works
            if (sf.eval(x) == 0) {
                Rat step = (y - x) / 1024;
                Rat moved = x + step;
                while (chain.count(x, moved) != 0 || sf.eval(moved) == 0) {
                    step /= 2;
                    moved = x + step;
                }
                x = moved;
            }
            out.push_back({sf, x, y, (x + y) / 2, 0});
            continue;
        }
        Rat mid = (x + y) / 2;
        work.emplace_back(x, mid);
        work.emplace_back(mid, y);
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& r, const IsolatedRoot& s) { return r.lo < s.lo; });
    return out;
}

std::vector<IsolatedRoot> sturm_isolate_all(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate_all: zero polynomial");
    if (p.degree() < 1) return {};
    // Cauchy bound: all roots lie in |x| <= 1 + max |a_i / a_n|.
    Rat bound(1);
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = p[static_cast<size_t>(i)] / p.leading();
        if (q < 0) q = -q;
        if (q > bound) bound = q;
    }
    bound += 1;
    return sturm_isolate(p, -bound, bound);
}

IsolatedRoot refine(IsolatedRoot root, unsigned bits) {
    if (root.exact()) {
        root.value = root.lo;
        root.precision = bits;
        return root;
    }
    Rat target = root.width() * rat_pow(Rat(1, 2), static_cast<long>(bits) - 1);
    Rat fa = root.poly.eval(root.lo);
    // The interval contains exactly one simple root, so the signs differ.
    while (root.width() > target) {
        Rat mid = (root.lo + root.hi) / 2;
        Rat fm = root.poly.eval(mid);
        if (fm == 0) {
            root.lo = root.hi = mid;
            break;
        }
        if ((fa > 0) == (fm > 0)) {
            root.lo = mid;
            fa = fm;
        } else {
            root.hi = mid;
        }
    }
    root.value = (root.lo + root.hi) / 2;
    root.precision = bits;
    return root;
}

double eval_at_root(const RatFn& f, const IsolatedRoot& root) {
    return to_double(f.eval(root.value));
}

}  // namespace mapenum
