// Dense univariate polynomials over Q with a variable tag.
//
// The tag tracks which formal variable a polynomial lives in (the curve
// uniformizer y0, its square root s, the coupling t, 1/N, ...).  Mixing tags
// in arithmetic is a programming error and throws.  Degrees stay small
// (tens, occasionally a few hundred), so the dense representation and plain
// Euclidean gcd over Q are the right tools.

#pragma once

#include "mapenum/rat.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapenum {

enum class Var : uint8_t { zeta, y0, s, z0, eps, t, xi2, xi, x, generic };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::zeta: return "zeta";
        case Var::y0: return "y0";
        case Var::s: return "s";
        case Var::z0: return "z0";
        case Var::eps: return "eps";
        case Var::t: return "t";
        case Var::xi2: return "xi2";
        case Var::xi: return "xi";
        case Var::x: return "x";
        default: return "u";
    }
}

class Poly {
public:
    Poly() : var_(Var::generic) {}
    explicit Poly(Var v) : var_(v) {}
    Poly(Var v, std::initializer_list<Rat> coeffs) : c_(coeffs), var_(v) { normalize(); }
    Poly(Var v, std::vector<Rat> coeffs) : c_(std::move(coeffs)), var_(v) { normalize(); }

    static Poly constant(Var v, const Rat& a) { return Poly(v, {a}); }
    static Poly identity(Var v) { return Poly(v, {Rat(0), Rat(1)}); }
    static Poly monomial(Var v, const Rat& a, unsigned deg) {
        std::vector<Rat> c(deg + 1);
        c[deg] = a;
        return Poly(v, std::move(c));
    }

    Var var() const { return var_; }
    void set_var(Var v) { var_ = v; }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is the sentinel -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& operator[](size_t i) const {
        static const Rat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    void set_coeff(size_t i, const Rat& a) {
        if (i >= c_.size()) c_.resize(i + 1);
        c_[i] = a;
        normalize();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_vars(a, b);
        Poly r(a.var_ == Var::generic ? b.var_ : a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] + b[i];
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_vars(a, b);
        Poly r(a.var_ == Var::generic ? b.var_ : a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        r.normalize();
        return r;
    }
    friend Poly operator*(const Poly& a, const Rat& s) { return s * a; }
    friend Poly operator/(const Poly& a, const Rat& s) {
        if (s == 0) throw std::domain_error("division of polynomial by zero scalar");
        return Rat(1) / s * a;
    }

    Poly pow(unsigned e) const {
        Poly acc = constant(var_, 1), b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            if (e >>= 1) b = b * b;
        }
        return acc;
    }

    Rat eval(const Rat& x) const {  // Horner
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    Poly derivative() const {
        Poly r(var_);
        if (degree() < 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        r.normalize();
        return r;
    }
    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        Poly r(var_);
        if (is_zero()) return r;
        r.c_.resize(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
        r.normalize();
        return r;
    }

    Poly compose(const Poly& inner) const {
        Poly acc(inner.var());
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(inner.var(), c_[i]);
        return acc;
    }

    // p(-x): flips the sign of odd coefficients.
    Poly reflected() const {
        Poly r = *this;
        for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    bool is_even() const {
        for (size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_odd() const {
        for (size_t i = 0; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    // Lossless s^2 -> y0 repackaging of an even polynomial (and its inverse).
    Poly even_part_in_square(Var target) const {
        if (!is_even()) throw std::domain_error("even_part_in_square: polynomial has odd terms");
        Poly r(target);
        r.c_.resize(c_.size() / 2 + 1);
        for (size_t i = 0; i < c_.size(); i += 2) r.c_[i / 2] = c_[i];
        r.normalize();
        return r;
    }
    Poly expand_square_to(Var target) const {
        Poly r(target);
        if (is_zero()) return r;
        r.c_.assign(2 * c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
        r.normalize();
        return r;
    }

    Poly with_var(Var v) const {
        Poly r = *this;
        r.var_ = v;
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        const char* v = var_name(var_);
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            Rat a = c_[i] < 0 ? Rat(-c_[i]) : c_[i];
            bool unit = a == 1 && i > 0;
            if (!unit) out += rat_string(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += v;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    static void check_vars(const Poly& a, const Poly& b) {
        if (a.var_ != b.var_ && a.var_ != Var::generic && b.var_ != Var::generic &&
            !a.is_zero() && !b.is_zero())
            throw std::invalid_argument(std::string("polynomial variable mismatch: ") +
                                        var_name(a.var_) + " vs " + var_name(b.var_));
    }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
    Var var_;
};

// Quotient and remainder of a by b over Q; b must be nonzero.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(a.var()), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
        Rat coeff = r.leading() / b.leading();
        Poly term = Poly::monomial(a.var(), coeff, shift);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

// Exact quotient; throws if the division leaves a remainder.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

// Monic gcd over Q (gcd of anything with 0 is the other argument made monic).
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        a = divrem(a, b).second;
        std::swap(a, b);
        if (!b.is_zero()) b = b / b.leading();  // keep coefficient growth down
    }
    if (!a.is_zero()) a = a / a.leading();
    return a;
}

inline Poly squarefree_part(const Poly& p) {
    if (p.degree() < 1) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return exact_div(p, g);
}

}  // namespace mapenum
