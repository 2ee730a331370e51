#include "mapenum/curve.hpp"

#include "mapenum/stringpoly.hpp"

#include <cmath>
#include <future>

namespace mapenum {

CurveModel build_curve(unsigned j) {
    if (j < 3) throw std::invalid_argument("build_curve: valence must be >= 3");
    CurveModel m;
    m.j = j;
    m.odd = (j % 2 == 1);

    if (!m.odd) {
        m.nu = j / 2;
        m.c_j = Rat(static_cast<long>(j)) * Rat(binomial(j - 1, j / 2 - 1));
        Poly one_minus = Poly(Var::z0, {Rat(1), Rat(-1)});
        Poly den = m.c_j * Poly::monomial(Var::z0, Rat(1), j / 2);
        m.xi_of_z0 = RatFn(one_minus, den);
        return m;
    }

    m.nu = (j - 1) / 2;
    m.b12_s = appell_s(2 * m.nu).with_var(Var::s);
    m.b11_s = appell_r(2 * m.nu).derivative().with_var(Var::s);
    m.b12 = appell_b12(m.nu);
    m.b11s = appell_b11s(m.nu);
    m.shat = m.b12 - m.b11s;

    Poly y0 = Poly::identity(Var::y0);
    m.xi2 = RatFn(y0 * m.shat.pow(j - 2), Rat(static_cast<long>(j) * j) * m.b12.pow(j));
    m.z0 = RatFn(m.b12, m.shat);

    // Pi_-+ by exact division in s
    Poly s = Poly::identity(Var::s);
    Poly jsb11 = Rat(static_cast<long>(j)) * s * m.b11_s;
    Poly core = Rat(2) * m.b12_s - jsb11;
    Poly wing = Rat(static_cast<long>(j) - 2) * s * m.b12_s;
    m.pi_minus = exact_div(core - wing, Poly(Var::s, {Rat(2), Rat(1)}));
    m.pi_plus = exact_div(core + wing, Poly(Var::s, {Rat(2), Rat(-1)}));
    m.pi = (m.pi_minus * m.pi_plus).even_part_in_square(Var::y0);
    if (m.pi.degree() != static_cast<int>(j) - 1)
        throw std::runtime_error("build_curve: Pi degree is not j-1");
    if (m.pi_minus.reflected() != m.pi_plus)
        throw std::runtime_error("build_curve: Pi_-(-s) != Pi_+(s)");
    if (m.pi.degree() == 2) m.q = m.pi;

    // dhat_-+ = (2 - j(1 - 1/z0)) -+ (j-2) s   with 1 - 1/z0 = s b11/b12
    RatFn z0term(jsb11, m.b12_s);
    RatFn sfn(Poly::identity(Var::s));
    m.dhat_minus = RatFn(Poly::constant(Var::s, 2)) - z0term - Rat(static_cast<long>(j) - 2) * sfn;
    m.dhat_plus = RatFn(Poly::constant(Var::s, 2)) - z0term + Rat(static_cast<long>(j) - 2) * sfn;
    RatFn dprod = m.dhat_minus * m.dhat_plus;
    m.dhat = RatFn(dprod.num().even_part_in_square(Var::y0), dprod.den().even_part_in_square(Var::y0));

    // w-derivatives at w=1 through the Pi representation
    Poly sum = m.pi_minus + m.pi_plus;                       // even in s
    Poly diff = exact_div(m.pi_plus - m.pi_minus, s);        // even in s
    Poly pis = m.pi_minus * m.pi_plus;                       // even in s
    m.f0w = RatFn((m.b12_s * sum).even_part_in_square(Var::y0), Rat(2) * pis.even_part_in_square(Var::y0));
    m.g_h0w = RatFn((m.b12_s * diff).even_part_in_square(Var::y0),
                    Rat(2) * pis.even_part_in_square(Var::y0));
    return m;
}

CheckReport derivative_identities(const CurveModel& m) {
    CheckReport rep;
    if (!m.odd) {
        rep.fail("derivative identities are defined for odd valence");
        return rep;
    }
    Poly y0 = Poly::identity(Var::y0);
    RatFn y0fn(y0);
    RatFn y0m4(Poly(Var::y0, {Rat(-4), Rat(1)}));

    RatFn lhs = m.xi2.derivative();
    RatFn rhs = Rat(-1) * m.z0 * m.xi2 * m.dhat / (y0fn * y0m4);
    if (lhs != rhs) rep.fail("d(xi^2)/dy0 identity");

    // fundamental discriminant relation
    RatFn disc = m.f0w * m.f0w - y0fn * m.g_h0w * m.g_h0w;
    RatFn b12fn(m.b12), pifn(m.pi);
    if (disc != b12fn * b12fn / pifn) rep.fail("f0w^2 - f0 h0w^2 = b12^2/Pi");
    if (disc != (RatFn(Poly(Var::y0, {Rat(4), Rat(-1)}))) / m.dhat)
        rep.fail("f0w^2 - f0 h0w^2 = (4-y0)/dhat");

    // polynomial form: (2 b12 - j s b11)^2 - (j-2)^2 y0 b12^2 = (4-y0) Pi
    Poly s = Poly::identity(Var::s);
    Poly core = Rat(2) * m.b12_s - Rat(static_cast<long>(m.j)) * s * m.b11_s;
    Poly lhs_poly = core * core -
                    Rat((static_cast<long>(m.j) - 2) * (static_cast<long>(m.j) - 2)) * s * s *
                        m.b12_s * m.b12_s;
    Poly rhs_poly = Poly(Var::s, {Rat(4), Rat(0), Rat(-1)}) * m.pi_minus * m.pi_plus;
    if (lhs_poly != rhs_poly) rep.fail("(4 - y0) Pi factorization");

    // crossover: dhat_+ - dhat_- = 2 (j-2) s
    RatFn cross = m.dhat_plus - m.dhat_minus;
    if (cross != RatFn(Rat(2 * (static_cast<long>(m.j) - 2)) * s))
        rep.fail("dhat_+ - dhat_- = 2(j-2) sqrt(y0)");

    // hatted Riemann-invariant derivative: (f0w +- sqrt(f0)h0w) dhat_-+ = 2 +- s
    RatFn f0w_s(m.f0w.num().expand_square_to(Var::s), m.f0w.den().expand_square_to(Var::s));
    RatFn gh_s(m.g_h0w.num().expand_square_to(Var::s), m.g_h0w.den().expand_square_to(Var::s));
    RatFn sfn(s);
    RatFn plus_side = (f0w_s + sfn * gh_s) * m.dhat_minus;
    RatFn minus_side = (f0w_s - sfn * gh_s) * m.dhat_plus;
    if (plus_side != RatFn(Poly(Var::s, {Rat(2), Rat(1)}))) rep.fail("dr_+/dw = r_+/d_-");
    if (minus_side != RatFn(Poly(Var::s, {Rat(2), Rat(-1)}))) rep.fail("dr_-/dw = r_-/d_+");

    // slope at the origin
    Rat slope = m.xi2.derivative().eval(Rat(0));
    Rat expect = Rat(1) / (Rat(static_cast<long>(m.j)) * Rat(binomial(2 * m.nu, m.nu)));
    if (slope != expect * expect) rep.fail("d(xi^2)/dy0 at the origin");
    return rep;
}

BranchPoints branch_points(const CurveModel& m, unsigned bits) {
    if (!m.odd) throw std::invalid_argument("branch_points: odd valence only");
    // simplicity of every root, once and for all
    if (poly_gcd(m.pi, m.pi.derivative()).degree() > 0)
        throw std::runtime_error("branch_points: Pi is not squarefree");
    auto roots = sturm_isolate_all(m.pi);
    std::vector<IsolatedRoot> real_pos;
    for (auto& r : roots) real_pos.push_back(refine(r, bits));
    if (real_pos.size() != 2)
        throw std::runtime_error("branch_points: expected exactly 2 real turning points, found " +
                                 std::to_string(real_pos.size()));
    BranchPoints bp{real_pos[0], real_pos[1], m.xi2.eval(real_pos[0].value),
                    m.xi2.eval(real_pos[1].value)};
    if (!(bp.xi2_right > 0 && bp.xi2_left < 0))
        throw std::runtime_error("branch_points: turning-point signs violate the curve geometry");
    return bp;
}

RiemannData riemann_data(const CurveModel& m, const Rat& y0) {
    if (!m.odd) throw std::invalid_argument("riemann_data: odd valence only");
    Rat z0v = m.z0.eval(y0);  // throws at poles
    double f0 = to_double(z0v);
    double sy = std::sqrt(to_double(y0));
    // past y0* the physical branch has z0 < 0; the invariant factors
    // (2 +- sqrt(y0)) stay real and meaningful, so report with |f0|.
    double sf = std::sqrt(std::abs(f0));
    RiemannData d;
    d.r_plus = sf * (2 + sy);
    d.r_minus = sy == 2.0 ? 0.0 : -sf * (2 - sy);
    double dr = m.b11_s.eval(sy);   // dR_2v(sqrt y0)
    double sv = m.b12_s.eval(sy);   // S_2v(sqrt y0)
    double fpow = std::pow(f0, m.nu + 0.5);
    d.lambda_plus = fpow * (dr + sv);
    d.lambda_minus = fpow * (dr - sv);
    d.dhat_minus = to_double(m.dhat_minus.num().eval(sy)) / to_double(m.dhat_minus.den().eval(sy));
    d.dhat_plus = to_double(m.dhat_plus.num().eval(sy)) / to_double(m.dhat_plus.den().eval(sy));
    return d;
}

namespace {

// Bivariate polynomial in (h, f) with double coefficients plus partials;
// compiled once from the exact Poly2 string data.
struct HFPoly {
    // coeff[a][b] * h^a f^b
    std::vector<std::vector<double>> c;

    static HFPoly from_poly2(const Poly2& p) {
        HFPoly out;
        for (size_t a = 0; a < p.h_size(); ++a)
            for (size_t b = 0; b < p.r_size(a); ++b) {
                if (p.coeff(a, b) == 0) continue;
                if (b % 2) throw std::domain_error("HFPoly: odd power of sqrt(f0)");
                size_t fb = b / 2;
                if (a >= out.c.size()) out.c.resize(a + 1);
                if (fb >= out.c[a].size()) out.c[a].resize(fb + 1, 0.0);
                out.c[a][fb] += to_double(p.coeff(a, b));
            }
        return out;
    }

    double eval(double h, double f) const {
        double acc = 0;
        for (size_t a = c.size(); a-- > 0;) {
            double row = 0;
            for (size_t b = c[a].size(); b-- > 0;) row = row * f + c[a][b];
            acc = acc * h + row;
        }
        return acc;
    }
    double eval_dh(double h, double f) const {
        double acc = 0;
        for (size_t a = c.size(); a-- > 1;) {
            double row = 0;
            for (size_t b = c[a].size(); b-- > 0;) row = row * f + c[a][b];
            acc = acc * h + row * static_cast<double>(a);
        }
        return acc;
    }
    double eval_df(double h, double f) const {
        double acc = 0;
        for (size_t a = c.size(); a-- > 0;) {
            double row = 0;
            for (size_t b = c[a].size(); b-- > 1;) row = row * f + c[a][b] * static_cast<double>(b);
            acc = acc * h + row;
        }
        return acc;
    }
};

struct StringSystem {
    // equations: h + sum_j j t_j P12_j = 0 ; f + sum_j j t_j P11_j = x
    // fluxes:    F1 = sum_j dir_j psi_-1^j ; F2 = sum_j dir_j phi_-1^j
    std::vector<double> dir;
    std::vector<HFPoly> p12, p11, flux1, flux2;

    explicit StringSystem(const std::vector<Rat>& direction) {
        for (const auto& d : direction) dir.push_back(to_double(d));
        for (size_t k = 0; k < direction.size(); ++k) {
            unsigned j = static_cast<unsigned>(k + 1);
            auto L1 = symbol_power(j - 1);
            p12.push_back(HFPoly::from_poly2(L1[j - 1]));
            // [eta^-1] sqrt(f) L0^(j-1); empty for j = 1
            Poly2 p11_poly = j >= 2 ? Poly2::r_var() * L1[j - 2] : Poly2{};
            p11.push_back(HFPoly::from_poly2(p11_poly));
            auto L = symbol_power(j);
            flux2.push_back(HFPoly::from_poly2(L[j]));                         // phi_-1
            flux1.push_back(HFPoly::from_poly2(Poly2::r_var() * L[j - 1]));    // psi_-1
        }
    }

    bool newton(double xi, double x, double& h, double& f) const {
        for (int it = 0; it < 80; ++it) {
            double e1 = h, e2 = f - x;
            double j11 = 1, j12 = 0, j21 = 0, j22 = 1;
            for (size_t k = 0; k < dir.size(); ++k) {
                double tj = xi * dir[k];
                if (tj == 0) continue;
                double scale = static_cast<double>(k + 1) * tj;
                e1 += scale * p12[k].eval(h, f);
                e2 += scale * p11[k].eval(h, f);
                j11 += scale * p12[k].eval_dh(h, f);
                j12 += scale * p12[k].eval_df(h, f);
                j21 += scale * p11[k].eval_dh(h, f);
                j22 += scale * p11[k].eval_df(h, f);
            }
            double res = std::abs(e1) + std::abs(e2);
            if (res < 1e-13 * (1 + std::abs(x))) return true;
            double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-12) return false;  // at/near a caustic
            double dh = (-e1 * j22 + e2 * j12) / det;
            double df = (-e2 * j11 + e1 * j21) / det;
            // damping: keep f positive and steps modest
            double lim = 0.5 * std::max(1.0, std::abs(f));
            double norm = std::abs(dh) + std::abs(df);
            if (norm > lim) {
                dh *= lim / norm;
                df *= lim / norm;
            }
            h += dh;
            f += df;
            if (!(f > 1e-9)) return false;
        }
        return false;
    }

    void fluxes(double h, double f, double& F1, double& F2) const {
        F1 = F2 = 0;
        for (size_t k = 0; k < dir.size(); ++k) {
            if (dir[k] == 0) continue;
            F1 += dir[k] * flux1[k].eval(h, f);
            F2 += dir[k] * flux2[k].eval(h, f);
        }
    }
};

}  // namespace

ConservationResult conservation_residual(const std::vector<Rat>& dir, double xi_max,
                                         double x_lo, double x_hi, int n_xi, int n_x,
                                         double hdiff) {
    StringSystem sys(dir);
    ConservationResult out;
    double dxi = hdiff, dx = hdiff;

    // residual at one interior stencil center (xi, x)
    auto residual_at = [&](double xi, double x, bool& ok) {
        double vals_h[5], vals_f[5], F1[5], F2[5];
        // stencil: 0:center 1:xi- 2:xi+ 3:x- 4:x+
        double pts[5][2] = {{xi, x}, {xi - dxi, x}, {xi + dxi, x}, {xi, x - dx}, {xi, x + dx}};
        for (int p = 0; p < 5; ++p) {
            double h = 0, f = pts[p][1];
            // continuation in xi from the Gaussian point in a few steps
            ok = true;
            int steps = 8;
            for (int s = 1; s <= steps && ok; ++s)
                ok = sys.newton(pts[p][0] * s / steps, pts[p][1], h, f);
            if (!ok) return 0.0;
            vals_h[p] = h;
            vals_f[p] = f;
            sys.fluxes(h, f, F1[p], F2[p]);
        }
        double r1 = (vals_h[2] - vals_h[1]) / (2 * dxi) + (F1[4] - F1[3]) / (2 * dx);
        double r2 = (std::log(vals_f[2]) - std::log(vals_f[1])) / (2 * dxi) +
                    (F2[4] - F2[3]) / (2 * dx);
        return std::max(std::abs(r1), std::abs(r2));
    };

    std::vector<std::future<std::pair<double, int>>> tasks;
    for (int i = 0; i <= n_xi; ++i) {
        tasks.push_back(std::async(std::launch::async, [&, i]() {
            double worst = 0;
            int failed = 0;
            double xi = xi_max * i / std::max(1, n_xi);
            for (int k = 0; k <= n_x; ++k) {
                double x = x_lo + (x_hi - x_lo) * k / std::max(1, n_x);
                bool ok = true;
                double r = residual_at(xi, x, ok);
                if (!ok) {
                    ++failed;
                    continue;
                }
                worst = std::max(worst, r);
            }
            return std::make_pair(worst, failed);
        }));
    }
    for (auto& t : tasks) {
        auto [worst, failed] = t.get();
        out.max_residual = std::max(out.max_residual, worst);
        out.failed_points += failed;
        out.evaluated_points += n_x + 1;
    }
    out.evaluated_points -= out.failed_points;
    return out;
}

std::vector<std::pair<Rat, Rat>> sample_curve(const CurveModel& m, const Rat& y_lo,
                                              const Rat& y_hi, unsigned count) {
    std::vector<std::pair<Rat, Rat>> out;
    if (!(y_lo < y_hi) || count == 0) return out;
    const RatFn& fn = m.odd ? m.xi2 : m.xi_of_z0;
    for (unsigned i = 0; i <= count; ++i) {
        Rat y = y_lo + (y_hi - y_lo) * Rat(static_cast<long>(i), static_cast<long>(count));
        if (fn.den().eval(y) == 0) continue;
        out.emplace_back(y, fn.eval(y));
    }
    return out;
}

}  // namespace mapenum
