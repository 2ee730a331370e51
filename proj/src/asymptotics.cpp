#include "mapenum/asymptotics.hpp"

#include <cmath>

namespace mapenum {

namespace {

// Top Laurent coefficient of f = num/den at a root r of den with exact
// multiplicity k:  lim (y - r)^k f(y) = k! num(r) / den^(k)(r).
double top_laurent(const RatFn& f, const Rat& r, unsigned k) {
    Poly dk = f.den();
    for (unsigned i = 0; i < k; ++i) dk = dk.derivative();
    return to_double(Rat(factorial(k)) * f.num().eval(r) / dk.eval(r));
}

}  // namespace

CriticalData critical_data(unsigned j, unsigned precision_bits) {
    if (j % 2 == 0) throw std::invalid_argument("critical_data: odd valence only");
    CurveModel m = build_curve(j);
    BranchPoints bp = branch_points(m, precision_bits);

    CriticalData cd;
    cd.j = j;
    cd.precision_bits = precision_bits;
    cd.y0c = bp.right;
    cd.xi2_c = bp.xi2_right;
    cd.y0c_value = to_double(bp.right.value);
    cd.xi2c_value = to_double(bp.xi2_right);
    cd.z0c = to_double(m.z0.eval(bp.right.value));
    cd.xi_c = -std::sqrt(cd.xi2c_value);

    RatFn d2xi2 = m.xi2.derivative().derivative();
    cd.kappa = to_double(d2xi2.eval(bp.right.value));

    // residue of f0x at the simple turning-point pole
    double A = top_laurent(m.f0w, bp.right.value, 1);
    double s_branch = -2 * std::sqrt(cd.xi_c / cd.kappa);  // y - y0c = s_branch * tau
    cd.gamma = A / s_branch;

    // finite-difference cross-check at two resolutions with sqrt-Richardson
    auto gamma_est = [&](double d) {
        Rat y = bp.right.value - Rat(Int(static_cast<long long>(d * 1e15)), Int(1000000000000000LL));
        double f0x = to_double(m.f0w.eval(y));
        double xi = -std::sqrt(to_double(m.xi2.eval(y)));
        double tau = std::sqrt(xi - cd.xi_c);
        return f0x * tau;
    };
    double e1 = gamma_est(1e-5), e2 = gamma_est(5e-6);
    double r2 = std::sqrt(2.0);
    cd.gamma_fd = (r2 * e2 - e1) / (r2 - 1);

    double sc = std::sqrt(cd.y0c_value);
    cd.sc = m.b12_s.derivative().derivative().eval(sc);
    cd.rp = m.b11_s.derivative().eval(sc);
    cd.rpp = m.b11_s.derivative().derivative().eval(sc);
    cd.C1 = j * cd.xi_c * std::pow(cd.z0c, j / 2.0 - 1) * cd.gamma *
            (cd.sc / 3 + cd.rpp / 3 - cd.rp / 12);
    double half = j / 2.0 - 1;
    cd.C2 = half * half / 4 * cd.xi2c_value;

    CurveJet jet = build_curve_jet(m);
    double B = top_laurent(jet.z1, bp.right.value, 4);
    double scale = cd.kappa / (4 * cd.xi_c);
    cd.zeta1 = B * scale * scale;

    if (j == 3) {
        double B2 = top_laurent(e2_closed_j3().rational, bp.right.value, 5);
        cd.c2_direct = B2 / std::pow(s_branch, 5);
    }
    return cd;
}

std::vector<double> zeta_recurrence(const CriticalData& cd, unsigned gmax) {
    std::vector<double> zeta(gmax + 1, 0.0);
    zeta[1] = cd.zeta1;
    if (!(zeta[1] > 0)) throw std::runtime_error("zeta_1 is not positive");
    for (unsigned g = 1; g < gmax; ++g) {
        double sum = 0;
        for (unsigned mm = 1; mm <= g; ++mm) sum += zeta[mm] * zeta[g + 1 - mm];
        double znext = -cd.C1 * cd.C2 * std::pow(cd.z0c, 2.0 * g - 1) * (25.0 * g * g - 1) * zeta[g] -
                       6 * cd.C1 * sum;
        if (!(znext > 0))
            throw std::runtime_error("zeta recurrence produced a nonpositive value at g=" +
                                     std::to_string(g + 1));
        zeta[g + 1] = znext;
    }
    return zeta;
}

namespace {

// Coefficient asymptotics constant for a tau^(1-5g) singularity of an even
// series in xi, transferred in the variable u = xi^2:
//   [u^m] ~ (zeta_g / Gamma((5g-1)/2)) (t_c/2)^((1-5g)/2) t_c^(-2m) m^((5g-3)/2).
double tau_law(double zeta_g, unsigned g, double t_c, unsigned m) {
    double beta = (1.0 - 5.0 * g) / 2;
    return zeta_g / std::tgamma((5.0 * g - 1) / 2) * std::pow(t_c / 2, beta) *
           std::pow(t_c, -2.0 * m) * std::pow(static_cast<double>(m), -beta - 1);
}

}  // namespace

std::vector<RatioRow> twolegged_vs_asymptotic(unsigned j, unsigned genus, unsigned m_lo,
                                              unsigned m_hi, const CriticalData& cd) {
    if (genus > 1) throw std::invalid_argument("twolegged_vs_asymptotic: g in {0,1}");
    SeriesContext ctx = build_series_context(j, m_hi + 1);
    CurveModel m = build_curve(j);
    double t_c = -cd.xi_c;

    double zeta_g;
    if (genus == 1) {
        zeta_g = cd.zeta1;
    } else {
        // f0 - f0c ~ zeta_0 tau: zeta_0 = z0'(y0c) * s_branch
        double s_branch = -2 * std::sqrt(cd.xi_c / cd.kappa);
        zeta_g = to_double(m.z0.derivative().eval(cd.y0c.value)) * s_branch;
    }

    std::vector<RatioRow> rows;
    for (unsigned mm = m_lo; mm <= m_hi; ++mm) {
        Rat exact = genus == 0 ? ctx.z0_of_xi2[mm] : ctx.f1_of_xi2[mm];
        double asym = tau_law(zeta_g, genus, t_c, mm);
        rows.push_back({mm, exact, asym, to_double(exact) / asym});
    }
    return rows;
}

std::vector<RatioRow> e2_vs_asymptotic(unsigned m_lo, unsigned m_hi, const CriticalData& cd) {
    if (cd.j != 3) throw std::invalid_argument("e2_vs_asymptotic: j = 3 only");
    SeriesContext ctx = build_series_context(3, m_hi + 1);
    double t_c = -cd.xi_c;
    std::vector<RatioRow> rows;
    for (unsigned mm = m_lo; mm <= m_hi; ++mm) {
        Rat exact = (*ctx.e2)[mm];
        // e2 ~ c2 tau^(-5): same transfer with 1-5g -> -5, Gamma(5/2), m^(3/2)
        double asym = cd.c2_direct / std::tgamma(2.5) * std::pow(t_c / 2, -2.5) *
                      std::pow(t_c, -2.0 * mm) * std::pow(static_cast<double>(mm), 1.5);
        rows.push_back({mm, exact, asym, to_double(exact) / asym});
    }
    return rows;
}

bool drift_decreasing(const std::vector<RatioRow>& rows) {
    for (size_t i = 1; i < rows.size(); ++i)
        if (!(std::abs(rows[i].ratio - 1) < std::abs(rows[i - 1].ratio - 1))) return false;
    return true;
}

}  // namespace mapenum
