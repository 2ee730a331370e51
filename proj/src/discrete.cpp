#include "mapenum/discrete.hpp"

namespace mapenum {

bool ESeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

ESeries operator+(const ESeries& a, const ESeries& b) {
    ESeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

ESeries operator-(const ESeries& a, const ESeries& b) { return a + (-b); }

ESeries ESeries::operator-() const {
    ESeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ESeries operator*(const ESeries& a, const ESeries& b) {
    ESeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i)
        for (unsigned k = 0; k + i <= r.order(); ++k)
            if (!a.c_[i].is_zero() && !b.c_[k].is_zero()) r.c_[i + k] = r.c_[i + k] + a.c_[i] * b.c_[k];
    return r;
}

ESeries operator*(const RatFn& s, const ESeries& a) {
    ESeries r = a;
    for (auto& v : r.c_) v = s * v;
    return r;
}

ESeries operator*(const Rat& s, const ESeries& a) {
    return RatFn(Poly::constant(Var::eps, s)) * a;
}

ESeries ESeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("ESeries inverse: zero constant term");
    ESeries r(order());
    RatFn inv0 = RatFn(Poly::constant(Var::eps, 1)) / c_[0];
    r.c_[0] = inv0;
    for (unsigned m = 1; m <= order(); ++m) {
        RatFn acc = zero_fn();
        for (unsigned k = 1; k <= m; ++k) acc = acc + c_[k] * r.c_[m - k];
        r.c_[m] = -(inv0 * acc);
    }
    return r;
}

ESeries ESeries::dt() const {
    if (order() == 0) return ESeries(0);
    ESeries r(order() - 1);
    for (unsigned i = 1; i <= order(); ++i) r.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return r;
}

ESeries ESeries::truncated(unsigned ord) const {
    ESeries r(ord);
    for (unsigned i = 0; i <= std::min(ord, order()); ++i) r.c_[i] = c_[i];
    return r;
}

Rat ESeries::coeff_at(unsigned k, const Rat& eps_value) const {
    return c_[k].eval(eps_value);
}

ESeries formal_moment(unsigned j, unsigned k, unsigned K) {
    ESeries m(K);
    for (unsigned p = 0; p <= K; ++p) {
        unsigned long deg = k + static_cast<unsigned long>(j) * p;
        if (deg % 2) continue;  // odd Gaussian moments vanish
        unsigned q = static_cast<unsigned>(deg / 2);
        // (-N t)^p / p! * (2q-1)!! eps^q  with N^p = eps^{-p}
        Rat coeff = Rat((p % 2) ? -1 : 1) * Rat(double_factorial_odd(q)) / Rat(factorial(p));
        if (q >= p)
            m.at(p) = RatFn(Poly::monomial(Var::eps, coeff, q - p));
        else  // the t1 flow (j = 1) produces genuine negative powers of eps
            m.at(p) = RatFn(Poly::constant(Var::eps, coeff), Poly::monomial(Var::eps, Rat(1), p - q));
    }
    return m;
}

CheckReport moment_string_identity(unsigned j, unsigned kmax, unsigned K) {
    CheckReport rep;
    RatFn eps(Poly::identity(Var::eps));
    for (unsigned k = 1; k <= kmax; ++k) {
        ESeries lhs = (Rat(static_cast<long>(k)) * eps) * formal_moment(j, k - 1, K);
        ESeries rhs = formal_moment(j, k + 1, K);
        // + j t m_{k+j-1}: multiply by t shifts the series
        ESeries tail = formal_moment(j, k + j - 1, K);
        ESeries shifted(K);
        for (unsigned p = 1; p <= K; ++p) shifted.at(p) = Rat(static_cast<long>(j)) * tail[p - 1];
        rhs = rhs + shifted;
        if (!(lhs - rhs).is_zero()) rep.fail("moment identity fails at k=" + std::to_string(k));
    }
    return rep;
}

TSeriesCoeff hankel_recurrence(unsigned j, unsigned nmax, unsigned K) {
    if (nmax > 10 || K > 8)
        throw std::invalid_argument("hankel_recurrence: budget is nmax <= 10, K <= 8");
    TSeriesCoeff out;
    out.j = j;
    out.nmax = nmax;
    out.K = K;

    // orthogonal polynomials pi_n as coefficient vectors over ESeries;
    // inner products via formal moments
    unsigned degmax = 2 * nmax + 2;
    std::vector<ESeries> mom;
    for (unsigned k = 0; k <= degmax; ++k) mom.push_back(formal_moment(j, k, K));

    auto inner = [&](const std::vector<ESeries>& p, const std::vector<ESeries>& q) {
        ESeries acc(K);
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t k = 0; k < q.size(); ++k) {
                if (p[i].is_zero() || q[k].is_zero()) continue;
                acc = acc + p[i] * q[k] * mom[i + k];
            }
        return acc;
    };
    auto shift_up = [&](const std::vector<ESeries>& p) {  // multiply by lambda
        std::vector<ESeries> r(p.size() + 1, ESeries(K));
        for (size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
        return r;
    };

    std::vector<std::vector<ESeries>> pi;
    pi.push_back({ESeries::constant(K, RatFn(Poly::constant(Var::eps, 1)))});
    out.a.assign(nmax + 1, ESeries(K));
    out.b2.assign(nmax + 1, ESeries(K));
    out.norms.assign(nmax + 1, ESeries(K));

    ESeries prev_norm = ESeries::constant(K, RatFn(Poly::constant(Var::eps, 1)));
    for (unsigned n = 0; n <= nmax; ++n) {
        ESeries norm = inner(pi[n], pi[n]);
        if (norm[0].is_zero())
            throw std::runtime_error("hankel_recurrence: vanishing Hankel determinant at n=" +
                                     std::to_string(n));
        out.norms[n] = norm;
        auto lam_pi = shift_up(pi[n]);
        out.a[n] = inner(lam_pi, pi[n]) * norm.inverse();
        out.b2[n] = n == 0 ? ESeries(K) : norm * prev_norm.inverse();
        prev_norm = norm;
        if (n == nmax) break;
        // pi_{n+1} = (lambda - a_n) pi_n - b_n^2 pi_{n-1}
        std::vector<ESeries> next = lam_pi;
        for (size_t i = 0; i < pi[n].size(); ++i) next[i] = next[i] - out.a[n] * pi[n][i];
        if (n >= 1)
            for (size_t i = 0; i < pi[n - 1].size(); ++i)
                next[i] = next[i] - out.b2[n] * pi[n - 1][i];
        pi.push_back(std::move(next));
    }
    return out;
}

CheckReport hankel_determinant_check(const TSeriesCoeff& c, unsigned N_sample) {
    CheckReport rep;
    Rat eps = Rat(1, static_cast<long>(N_sample));
    // Gaussian Hankel matrices at t = 0: H_n = (m_{i+k}(0)); positivity and
    // det H_{n+1}/det H_n = norms
    unsigned nmax = c.nmax;
    std::vector<Rat> m0(2 * nmax + 3, Rat(0));
    for (unsigned k = 0; k < m0.size(); k += 2)
        m0[k] = Rat(double_factorial_odd(k / 2)) * rat_pow(eps, k / 2);
    Rat prev_det(1);
    for (unsigned n = 1; n <= nmax + 1; ++n) {
        // det of the n x n principal Hankel matrix by fraction-free elimination
        std::vector<std::vector<Rat>> H(n, std::vector<Rat>(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) H[i][k] = m0[i + k];
        Rat det(1);
        for (unsigned col = 0; col < n; ++col) {
            unsigned pivot = col;
            while (pivot < n && H[pivot][col] == 0) ++pivot;
            if (pivot == n) {
                det = 0;
                break;
            }
            if (pivot != col) {
                std::swap(H[pivot], H[col]);
                det = -det;
            }
            det *= H[col][col];
            for (unsigned r = col + 1; r < n; ++r) {
                Rat f = H[r][col] / H[col][col];
                for (unsigned cc = col; cc < n; ++cc) H[r][cc] -= f * H[col][cc];
            }
        }
        if (!(det > 0)) rep.fail("Hankel determinant not positive at n=" + std::to_string(n));
        // d_{n-1} = det H_n / det H_{n-1} must equal the Stieltjes norm at t=0
        Rat d = det / prev_det;
        Rat norm0 = c.norms[n - 1].coeff_at(0, eps);
        if (d != norm0) rep.fail("norm vs Hankel ratio mismatch at n=" + std::to_string(n - 1));
        prev_det = det;
    }
    return rep;
}

namespace {

// Motzkin-path sums (L^r)_{from,to} over ESeries: expanding
// lambda^r pi_from = sum_m (L^r)_{from,m} pi_m with the single-step rule
// lambda pi_i = pi_{i+1} + a_i pi_i + b2_i pi_{i-1}.  The height-0 floor is
// exact (b2_0 = 0); results are valid whenever from + r <= nmax so that no
// path can leave the truncated window upward.
struct LPower {
    const TSeriesCoeff& c;
    unsigned K;

    std::vector<ESeries> expand(unsigned from, unsigned r) const {
        if (from + r > c.nmax) throw std::logic_error("LPower: path window exceeds nmax");
        std::vector<ESeries> v(c.nmax + 1, ESeries(K));
        v[from] = ESeries::constant(K, RatFn(Poly::constant(Var::eps, 1)));
        for (unsigned step = 0; step < r; ++step) {
            std::vector<ESeries> w(c.nmax + 1, ESeries(K));
            for (unsigned i = 0; i <= c.nmax; ++i) {
                if (v[i].is_zero()) continue;
                if (i + 1 <= c.nmax) w[i + 1] = w[i + 1] + v[i];
                w[i] = w[i] + c.a[i] * v[i];
                if (i >= 1) w[i - 1] = w[i - 1] + c.b2[i] * v[i];
            }
            v = std::move(w);
        }
        return v;
    }
    ESeries entry(unsigned from, int to, unsigned r) const {
        if (to < 0 || to > static_cast<int>(c.nmax)) return ESeries(K);
        return expand(from, r)[static_cast<unsigned>(to)];
    }
};

ESeries times_t(const ESeries& s) {
    ESeries out(s.order());
    for (unsigned p = 1; p <= s.order(); ++p) out.at(p) = s[p - 1];
    return out;
}

}  // namespace

CheckReport verify_string(const TSeriesCoeff& c) {
    CheckReport rep;
    LPower L{c, c.K};
    unsigned r = c.j - 1;
    RatFn eps(Poly::identity(Var::eps));
    for (unsigned n = r; n + r <= c.nmax; ++n) {
        ESeries diag = L.entry(n, static_cast<int>(n), r);
        ESeries res1 = c.a[n] + Rat(static_cast<long>(c.j)) * times_t(diag);
        if (!res1.is_zero()) rep.fail("string equation (diagonal) fails at n=" + std::to_string(n));
        ESeries sub = L.entry(n, static_cast<int>(n) - 1, r);  // (L^{j-1})_{n,n-1}
        ESeries res2 = c.b2[n] + Rat(static_cast<long>(c.j)) * times_t(sub) -
                       ESeries::constant(c.K, Rat(static_cast<long>(n)) * eps);
        if (!res2.is_zero()) rep.fail("string equation (subdiagonal) fails at n=" + std::to_string(n));
    }
    if (rep.ok && c.nmax < 2 * r) rep.fail("string check window empty");
    return rep;
}

CheckReport verify_toda_and_edge(const TSeriesCoeff& c) {
    CheckReport rep;
    LPower L{c, c.K};
    unsigned r = c.j;
    RatFn eps(Poly::identity(Var::eps));
    for (unsigned n = r; n + r + 1 <= c.nmax; ++n) {
        // Toda: N^-1 da_n/dt = (L^j)_{n,n-1} - (L^j)_{n+1,n}
        ESeries lhs_a = (eps * c.a[n].dt()).truncated(c.K - 1);
        ESeries rhs_a = (L.entry(n, static_cast<int>(n) - 1, r) -
                         L.entry(n + 1, static_cast<int>(n), r))
                            .truncated(c.K - 1);
        if (!(lhs_a - rhs_a).is_zero()) rep.fail("Toda a_n fails at n=" + std::to_string(n));

        // Toda: N^-1 db2_n/dt = (L^j)_{n,n-2} - (L^j)_{n+1,n-1}
        //                       + (a_{n-1} - a_n)(L^j)_{n,n-1}
        ESeries lhs_b = (eps * c.b2[n].dt()).truncated(c.K - 1);
        ESeries rhs_b = (L.entry(n, static_cast<int>(n) - 2, r) -
                         L.entry(n + 1, static_cast<int>(n) - 1, r) +
                         (c.a[n - 1] - c.a[n]) * L.entry(n, static_cast<int>(n) - 1, r))
                            .truncated(c.K - 1);
        if (!(lhs_b - rhs_b).is_zero()) rep.fail("Toda b2_n fails at n=" + std::to_string(n));

        // edge Toda
        ESeries lhs_ea =
            (eps * (c.a[n] + Rat(static_cast<long>(c.j)) * times_t(c.a[n].dt().truncated(c.K - 1))
                                 .truncated(c.K)))
                .truncated(c.K - 1);
        ESeries rhs_ea = (c.a[n + 1] * c.b2[n + 1] - c.a[n] * c.b2[n] + c.a[n] * c.b2[n + 1] -
                          c.a[n - 1] * c.b2[n])
                             .truncated(c.K - 1);
        if (!(lhs_ea - rhs_ea).is_zero()) rep.fail("edge Toda a_n fails at n=" + std::to_string(n));

        ESeries lhs_eb =
            (eps * (Rat(2) * c.b2[n] +
                    Rat(static_cast<long>(c.j)) * times_t(c.b2[n].dt().truncated(c.K - 1)).truncated(c.K)))
                .truncated(c.K - 1);
        ESeries rhs_eb = (c.b2[n] * (c.a[n] * c.a[n] - c.a[n - 1] * c.a[n - 1] + c.b2[n + 1] -
                                     c.b2[n - 1]))
                             .truncated(c.K - 1);
        if (!(lhs_eb - rhs_eb).is_zero()) rep.fail("edge Toda b2_n fails at n=" + std::to_string(n));
    }
    return rep;
}

CheckReport verify_t1_toda(unsigned nmax, unsigned K) {
    CheckReport rep;
    TSeriesCoeff c = hankel_recurrence(1, nmax, K);
    RatFn eps(Poly::identity(Var::eps));
    for (unsigned n = 1; n + 1 <= nmax; ++n) {
        ESeries lhs = (eps * c.a[n].dt()).truncated(K - 1);
        ESeries rhs = (c.b2[n] - c.b2[n + 1]).truncated(K - 1);
        if (!(lhs - rhs).is_zero()) rep.fail("t1 Toda a_n fails at n=" + std::to_string(n));
        ESeries lhs2 = (eps * c.b2[n].dt()).truncated(K - 1);
        ESeries rhs2 = (c.b2[n] * (c.a[n - 1] - c.a[n])).truncated(K - 1);
        if (!(lhs2 - rhs2).is_zero()) rep.fail("t1 Toda b2_n fails at n=" + std::to_string(n));
    }
    return rep;
}

GenusExtraction extract_genus_coeffs(unsigned j, unsigned K, unsigned n_lo, unsigned n_hi) {
    GenusExtraction out;
    if (n_hi > 10) throw std::invalid_argument("extract_genus_coeffs: n_hi <= 10");
    if (n_hi < n_lo + 3) throw std::invalid_argument("extract_genus_coeffs: need >= 4 samples");
    TSeriesCoeff c = hankel_recurrence(j, n_hi, K);

    unsigned samples = n_hi - n_lo + 1;
    // exact polynomial fit of v(n) = sum_g coef_g * n^(-step*g) over the
    // sample values; uses the first `deg+1` samples, verifies on the rest
    auto fit = [&](const std::vector<Rat>& vals, unsigned step, std::vector<Rat>& coefs) {
        unsigned deg = samples - 2;  // leave at least one consistency row
        // Solve V c = v by Gaussian elimination on the Vandermonde in q = n^-step
        std::vector<std::vector<Rat>> A(deg + 1, std::vector<Rat>(deg + 2));
        for (unsigned r = 0; r <= deg; ++r) {
            Rat q = rat_pow(Rat(1, static_cast<long>(n_lo + r)), static_cast<long>(step));
            Rat p(1);
            for (unsigned cidx = 0; cidx <= deg; ++cidx) {
                A[r][cidx] = p;
                p *= q;
            }
            A[r][deg + 1] = vals[r];
        }
        for (unsigned col = 0; col <= deg; ++col) {
            unsigned piv = col;
            while (piv <= deg && A[piv][col] == 0) ++piv;
            if (piv > deg) return false;
            std::swap(A[piv], A[col]);
            for (unsigned rr = 0; rr <= deg; ++rr) {
                if (rr == col || A[rr][col] == 0) continue;
                Rat f = A[rr][col] / A[col][col];
                for (unsigned cc = col; cc <= deg + 1; ++cc) A[rr][cc] -= f * A[col][cc];
            }
        }
        coefs.assign(deg + 1, Rat(0));
        for (unsigned cidx = 0; cidx <= deg; ++cidx) coefs[cidx] = A[cidx][deg + 1] / A[cidx][cidx];
        // consistency on the remaining samples
        for (unsigned r = deg + 1; r < samples; ++r) {
            Rat q = rat_pow(Rat(1, static_cast<long>(n_lo + r)), static_cast<long>(step));
            Rat acc(0), p(1);
            for (unsigned cidx = 0; cidx <= deg; ++cidx) {
                acc += coefs[cidx] * p;
                p *= q;
            }
            if (acc != vals[r]) return false;
        }
        return true;
    };

    unsigned gmax_b = samples - 2, gmax_a = samples - 2;
    out.z.assign(gmax_b + 1, std::vector<Rat>(K + 1, Rat(0)));
    out.u.assign(gmax_a + 1, std::vector<Rat>(K + 1, Rat(0)));
    for (unsigned k = 0; k <= K; ++k) {
        std::vector<Rat> bv, av;
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            Rat eps = Rat(1, static_cast<long>(n));
            bv.push_back(c.b2[n].coeff_at(k, eps));
            av.push_back(c.a[n].coeff_at(k, eps));
        }
        std::vector<Rat> cb, ca;
        if (!fit(bv, 2, cb)) {
            out.consistent = false;
            out.detail += "b2 fit inconsistent at t^" + std::to_string(k) + "\n";
            continue;
        }
        if (!fit(av, 1, ca)) {
            out.consistent = false;
            out.detail += "a fit inconsistent at t^" + std::to_string(k) + "\n";
            continue;
        }
        for (unsigned g = 0; g <= gmax_b; ++g) out.z[g][k] = cb[g];
        for (unsigned g = 0; g <= gmax_a; ++g) out.u[g][k] = ca[g];
    }
    return out;
}

}  // namespace mapenum
