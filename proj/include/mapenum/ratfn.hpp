// Reduced rational functions num/den over Q in one tagged variable.
//
// Canonical form: gcd(num, den) = 1 and den monic (so its leading
// coefficient is positive).  Construction always normalizes, so equality of
// values is equality of representations.

#pragma once

#include "mapenum/poly.hpp"
#include "mapenum/series.hpp"

namespace mapenum {

class RatFn {
public:
    RatFn() : num_(Var::generic), den_(Poly::constant(Var::generic, 1)) {}
    explicit RatFn(const Poly& num) : num_(num), den_(Poly::constant(num.var(), 1)) {}
    RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFn constant(Var v, const Rat& a) { return RatFn(Poly::constant(v, a)); }
    static RatFn identity(Var v) { return RatFn(Poly::identity(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Value preserved at all non-pole points; poles are rejected loudly.
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_.eval(x) / d;
    }
    double eval(double x) const { return num_.eval(x) / den_.eval(x); }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator*(const Rat& s, const RatFn& a) { return RatFn(s * a.num_, a.den_); }
    friend RatFn operator*(const RatFn& a, const Rat& s) { return s * a; }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFn pow(long e) const {
        if (e < 0) return RatFn(den_, num_).pow(-e);
        RatFn acc = constant(var(), 1), b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * b;
            if (k >>= 1) b = b * b;
        }
        return acc;
    }

    RatFn derivative() const {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Substitute another rational function for the variable.
    RatFn compose(const RatFn& inner) const {
        RatFn acc = constant(inner.var(), 0);
        int dn = num_.degree(), dd = den_.degree();
        int top = std::max(dn, dd);
        RatFn n = constant(inner.var(), 0), d = constant(inner.var(), 0);
        for (int i = top; i >= 0; --i) {
            n = n * inner + constant(inner.var(), num_[static_cast<size_t>(i)]);
            d = d * inner + constant(inner.var(), den_[static_cast<size_t>(i)]);
        }
        // Horner above ran both to degree `top`; excess powers of `inner`
        // cancel between numerator and denominator.
        (void)acc;
        return n / d;
    }

    // Taylor expansion at the origin (requires den(0) != 0).
    Series series_at_origin(unsigned order) const {
        if (den_.eval(Rat(0)) == 0)
            throw std::domain_error("series expansion at a pole of the denominator");
        Series n = Series::from_poly(num_, order);
        Series d = Series::from_poly(den_, order);
        return n * d.inverse();
    }

    RatFn with_var(Var v) const { return RatFn(num_.with_var(v), den_.with_var(v)); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.var() == Var::generic ? den_.var() : num_.var(), 1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Poly num_, den_;
};

}  // namespace mapenum
