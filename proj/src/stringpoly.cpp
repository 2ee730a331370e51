#include "mapenum/stringpoly.hpp"

namespace mapenum {

bool Poly2::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

bool Poly2::even_in_r() const {
    for (const auto& row : c_)
        for (size_t b = 1; b < row.size(); b += 2)
            if (row[b] != 0) return false;
    return true;
}

bool Poly2::even_in_h() const {
    for (size_t a = 1; a < c_.size(); a += 2)
        for (const auto& v : c_[a])
            if (v != 0) return false;
    return true;
}

Poly2 Poly2::div_f0() const {
    Poly2 out;
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < c_[a].size(); ++b) {
            if (c_[a][b] == 0) continue;
            if (b < 2) throw std::domain_error("Poly2::div_f0: not divisible by f0");
            out.set(a, b - 2, c_[a][b]);
        }
    return out;
}

Poly2 operator+(const Poly2& x, const Poly2& y) {
    Poly2 out = x;
    for (size_t a = 0; a < y.c_.size(); ++a)
        for (size_t b = 0; b < y.c_[a].size(); ++b)
            if (y.c_[a][b] != 0) out.add(a, b, y.c_[a][b]);
    return out;
}

Poly2 Poly2::operator-() const {
    Poly2 out = *this;
    for (auto& row : out.c_)
        for (auto& v : row) v = -v;
    return out;
}

Poly2 operator-(const Poly2& x, const Poly2& y) { return x + (-y); }

Poly2 operator*(const Poly2& x, const Poly2& y) {
    Poly2 out;
    for (size_t a = 0; a < x.c_.size(); ++a)
        for (size_t b = 0; b < x.c_[a].size(); ++b) {
            if (x.c_[a][b] == 0) continue;
            for (size_t c = 0; c < y.c_.size(); ++c)
                for (size_t d = 0; d < y.c_[c].size(); ++d)
                    if (y.c_[c][d] != 0) out.add(a + c, b + d, x.c_[a][b] * y.c_[c][d]);
        }
    return out;
}

Poly2 operator*(const Rat& s, const Poly2& x) {
    Poly2 out = x;
    for (auto& row : out.c_)
        for (auto& v : row) v *= s;
    return out;
}

bool operator==(const Poly2& x, const Poly2& y) { return (x - y).is_zero(); }

Series Poly2::eval_series(const Series& hs, const Series& rs) const {
    Series acc(hs.var(), std::min(hs.order(), rs.order()));
    // Horner in h with precomputed powers of r.
    size_t rmax = 0;
    for (const auto& row : c_) rmax = std::max(rmax, row.size());
    std::vector<Series> rpow{Series::constant(acc.var(), acc.order(), 1)};
    for (size_t b = 1; b < rmax; ++b) rpow.push_back(rpow.back() * rs);
    for (size_t a = c_.size(); a-- > 0;) {
        Series row(acc.var(), acc.order());
        for (size_t b = 0; b < c_[a].size(); ++b)
            if (c_[a][b] != 0) row = row + c_[a][b] * rpow[b];
        acc = acc * hs + row;
    }
    return acc;
}

Rat Poly2::eval(const Rat& h, const Rat& r) const {
    Rat acc(0);
    for (size_t a = c_.size(); a-- > 0;) {
        Rat row(0), rp(1);
        for (size_t b = 0; b < c_[a].size(); ++b) {
            row += c_[a][b] * rp;
            rp *= r;
        }
        acc = acc * h + row;
    }
    return acc;
}

std::string Poly2::str() const {
    std::string out;
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < c_[a].size(); ++b) {
            if (c_[a][b] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_string(c_[a][b]);
            if (a) out += "*h" + (a > 1 ? "^" + std::to_string(a) : "");
            if (b) out += "*r" + (b > 1 ? "^" + std::to_string(b) : "");
        }
    return out.empty() ? "0" : out;
}

std::vector<Poly2> symbol_power(unsigned power) {
    // index k holds the coefficient of eta^(k - power)
    std::vector<Poly2> cur{Poly2::constant(Rat(1))};
    Poly2 h = Poly2::h_var(), r = Poly2::r_var();
    for (unsigned step = 0; step < power; ++step) {
        std::vector<Poly2> next(cur.size() + 2);
        for (size_t k = 0; k < cur.size(); ++k) {
            if (cur[k].is_zero()) continue;
            next[k] = next[k] + r * cur[k];          // eta^{-1} contribution
            next[k + 1] = next[k + 1] + h * cur[k];  // eta^{0}
            next[k + 2] = next[k + 2] + r * cur[k];  // eta^{+1}
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<StringPoly, StringPoly> string_phi_psi(unsigned j, int m) {
    if (j < 3) throw std::invalid_argument("string_phi_psi: valence must be >= 3");
    if (m < -1 || m > static_cast<int>(j) - 1)
        throw std::invalid_argument("string_phi_psi: index m out of range [-1, j-1]");
    unsigned power = static_cast<unsigned>(static_cast<int>(j) - m - 1);
    auto L = symbol_power(power);
    Rat falling_factor = falling(Rat(static_cast<long>(j)), static_cast<unsigned>(m + 1));

    Poly2 eta0 = L[power];  // coefficient of eta^0
    Poly2 etam1 = power >= 1 ? L[power - 1] : Poly2{};  // coefficient of eta^{-1}

    StringPoly phi{j, m, falling_factor * eta0};
    StringPoly psi{j, m, falling_factor * (Poly2::r_var() * etam1)};
    return {phi, psi};
}

std::pair<Poly2, Poly2> string_phi_psi_appell(unsigned j, int m) {
    if (j % 2 == 0) throw std::invalid_argument("appell route defined for odd valence");
    long nu = (static_cast<long>(j) - 1) / 2;
    long n = 2 * nu - m;  // degree index of the Appell member
    if (n < 0) throw std::invalid_argument("appell route: index out of range");
    Rat falling_factor = falling(Rat(static_cast<long>(j)), static_cast<unsigned>(m + 1));

    // phi: f0^((2v-m)/2) S_{2v-m}(sqrt y0): term zeta^k -> h^k r^(n-k)
    Poly2 phi, psi;
    Poly S = appell_s(static_cast<unsigned>(n));
    for (int k = 0; k <= S.degree(); ++k)
        if (S[static_cast<size_t>(k)] != 0)
            phi.add(static_cast<size_t>(k), static_cast<size_t>(n - k), S[static_cast<size_t>(k)]);
    // psi: f0^((2v-m+1)/2) dR_{2v-m}(sqrt y0): term zeta^k -> h^k r^(n+1-k)
    Poly dR = appell_r(static_cast<unsigned>(n)).derivative();
    for (int k = 0; k <= dR.degree(); ++k)
        if (dR[static_cast<size_t>(k)] != 0)
            psi.add(static_cast<size_t>(k), static_cast<size_t>(n + 1 - k), dR[static_cast<size_t>(k)]);
    return {falling_factor * phi, falling_factor * psi};
}

std::pair<Poly2, Poly2> general_potential_phi_psi(const std::vector<Rat>& t, int m) {
    if (t.empty()) throw std::invalid_argument("general_potential_phi_psi: empty coupling vector");
    if (m < -1) throw std::invalid_argument("general_potential_phi_psi: m >= -1 required");
    Poly2 phi, psi;
    // The potential always carries the Gaussian term x^2/2; its (m+1)-st
    // derivative contributes [eta^.] of L0 (m=0) or of 1 (m=1).
    if (m == -1) {
        // (1/2) [eta^0] L0^2 and (1/2) [eta^-1] r L0^2
        auto L2 = symbol_power(2);
        phi = phi + Rat(1, 2) * L2[2];
        psi = psi + Rat(1, 2) * (Poly2::r_var() * L2[1]);
    } else if (m == 0) {
        phi = phi + Poly2::h_var();                       // [eta^0] L0
        psi = psi + Poly2::r_var() * Poly2::r_var();      // [eta^-1] r L0 = f0
    } else if (m == 1) {
        phi = phi + Poly2::constant(Rat(1));
    }
    for (size_t k = 0; k < t.size(); ++k) {
        if (t[k] == 0) continue;
        unsigned j = static_cast<unsigned>(k + 1);
        if (m + 1 > static_cast<int>(j)) continue;  // V^{(m+1)} kills low-degree terms
        unsigned power = static_cast<unsigned>(static_cast<int>(j) - m - 1);
        auto L = symbol_power(power);
        Rat factor = t[k] * falling(Rat(static_cast<long>(j)), static_cast<unsigned>(m + 1));
        phi = phi + factor * L[power];
        if (power >= 1) psi = psi + factor * (Poly2::r_var() * L[power - 1]);
    }
    return {phi, psi};
}

int UnwindingResidual::first_failing_order() const {
    for (unsigned i = 0; i <= phi_residual.order(); ++i)
        if (phi_residual[i] != 0 || (i <= psi_residual.order() && psi_residual[i] != 0))
            return static_cast<int>(i);
    return -1;
}

UnwindingResidual unwinding_check(unsigned j, int m, const Series& u0, const Series& z0) {
    if (m < 0 || m > static_cast<int>(j) - 1)
        throw std::invalid_argument("unwinding_check: need 0 <= m <= j-1");
    auto [phi_lo, psi_lo] = string_phi_psi(j, m - 1);
    auto [phi_hi, psi_hi] = string_phi_psi(j, m);

    Series sqrt_z0 = z0.sqrt();
    Series phi_lo_s = phi_lo.value.eval_series(u0, sqrt_z0);
    Series psi_lo_s = psi_lo.value.eval_series(u0, sqrt_z0);
    Series phi_hi_s = phi_hi.value.eval_series(u0, sqrt_z0);
    Series psi_hi_s = psi_hi.value.eval_series(u0, sqrt_z0);

    // d/dx of x^gamma g(xi) at x=1 is gamma*g + ((j-2)/2) xi g'.
    Rat half_jm2 = Rat(static_cast<long>(j) - 2, 2);
    auto ddx = [&](const Series& g, const Rat& gamma) {
        return gamma * g + half_jm2 * g.euler_derivative();
    };

    // weights on self-similar data: phi_m ~ x^((j-m-1)/2), psi_m ~ x^((j-m)/2)
    Rat gamma_phi_lo = Rat(static_cast<long>(j) - m, 2);       // (j-(m-1)-1)/2
    Rat gamma_psi_lo = Rat(static_cast<long>(j) - m + 1, 2);   // (j-(m-1))/2

    Series lhs_phi = ddx(phi_lo_s, gamma_phi_lo);
    Series lhs_psi = ddx(psi_lo_s, gamma_psi_lo);

    Series h0p = ddx(u0, Rat(1, 2));                            // h0' at x=1
    Series f0p_over_f0 = ddx(z0, Rat(1)) * z0.inverse();        // f0'/f0 at x=1
    Series f0p = f0p_over_f0 * z0;                              // f0' at x=1

    Series rhs_phi = h0p * phi_hi_s + f0p_over_f0 * psi_hi_s;
    Series rhs_psi = f0p * phi_hi_s + h0p * psi_hi_s;

    return {lhs_phi - rhs_phi, lhs_psi - rhs_psi};
}

}  // namespace mapenum
