// Truncated power series over Q: exact coefficients 0..M in a tagged variable.
//
// Every operation is exact through the stated order.  Binary operations
// truncate to the smaller of the two orders; that is the only way orders
// ever shrink.  Reversion is the per-order triangular solve (the fixed-point
// form of Lagrange inversion): with f(0)=0, f'(0) invertible, the m-th
// coefficient of the inverse is forced by [y^m] sum_k g_k f^k = delta_{m,1}.

#pragma once

#include "mapenum/poly.hpp"

#include <vector>

namespace mapenum {

class Series {
public:
    Series() : var_(Var::generic), order_(0) { c_.assign(1, Rat(0)); }
    Series(Var v, unsigned order) : var_(v), order_(order) { c_.assign(order + 1, Rat(0)); }
    Series(Var v, unsigned order, std::vector<Rat> coeffs) : c_(std::move(coeffs)), var_(v), order_(order) {
        c_.resize(order + 1);
    }

    static Series constant(Var v, unsigned order, const Rat& a) {
        Series r(v, order);
        r.c_[0] = a;
        return r;
    }
    static Series identity(Var v, unsigned order) {
        Series r(v, order);
        if (order >= 1) r.c_[1] = 1;
        return r;
    }
    static Series from_poly(const Poly& p, unsigned order) {
        Series r(p.var(), order);
        for (unsigned i = 0; i <= order; ++i) r.c_[i] = p[i];
        return r;
    }

    Var var() const { return var_; }
    unsigned order() const { return order_; }
    const Rat& operator[](size_t i) const {
        static const Rat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    void set_coeff(size_t i, const Rat& a) {
        if (i > order_) throw std::out_of_range("series coefficient beyond truncation order");
        c_[i] = a;
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (a != 0) return false;
        return true;
    }

    Series truncated(unsigned order) const {
        Series r(var_, order);
        for (unsigned i = 0; i <= std::min(order, order_); ++i) r.c_[i] = c_[i];
        return r;
    }
    Series with_var(Var v) const {
        Series r = *this;
        r.var_ = v;
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    friend Series operator+(const Series& a, const Series& b) {
        check(a, b);
        Series r(pick(a, b), std::min(a.order_, b.order_));
        for (unsigned i = 0; i <= r.order_; ++i) r.c_[i] = a[i] + b[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        check(a, b);
        Series r(pick(a, b), std::min(a.order_, b.order_));
        for (unsigned i = 0; i <= r.order_; ++i)
            for (unsigned j = 0; j + i <= r.order_; ++j) r.c_[i + j] += a[i] * b[j];
        return r;
    }
    friend Series operator*(const Rat& s, const Series& a) {
        Series r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend Series operator*(const Series& a, const Rat& s) { return s * a; }
    friend Series operator/(const Series& a, const Rat& s) { return Rat(1) / s * a; }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    // Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const {
        if (c_[0] == 0) throw std::domain_error("series inverse: zero constant term");
        Series r(var_, order_);
        r.c_[0] = Rat(1) / c_[0];
        for (unsigned m = 1; m <= order_; ++m) {
            Rat acc(0);
            for (unsigned k = 1; k <= m; ++k) acc += c_[k] * r.c_[m - k];
            r.c_[m] = -acc / c_[0];
        }
        return r;
    }

    Series pow(unsigned e) const {
        Series acc = constant(var_, order_, 1), b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            if (e >>= 1) b = b * b;
        }
        return acc;
    }

    Series derivative() const {
        if (order_ == 0) return Series(var_, 0);
        Series r(var_, order_ - 1);
        for (unsigned i = 1; i <= order_; ++i) r.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return r;
    }
    // x d/dx, order-preserving.
    Series euler_derivative() const {
        Series r(var_, order_);
        for (unsigned i = 1; i <= order_; ++i) r.c_[i] = Rat(static_cast<long>(i)) * c_[i];
        return r;
    }
    Series antiderivative() const {  // zero constant term; top coefficient is lost
        Series r(var_, order_);
        for (unsigned i = 1; i <= order_; ++i) r.c_[i] = c_[i - 1] / Rat(static_cast<long>(i));
        return r;
    }

    // log(f) for f with constant term 1:  (log f)' = f'/f, integrated.
    Series log() const {
        if (c_[0] != 1) throw std::domain_error("series log: constant term must be 1");
        Series d = derivative().truncated(order_ == 0 ? 0 : order_ - 1);
        Series quot = d * inverse().truncated(d.order());
        Series r(var_, order_);
        for (unsigned i = 1; i <= order_; ++i) r.c_[i] = quot[i - 1] / Rat(static_cast<long>(i));
        return r;
    }
    // exp(f) for f with zero constant term:  g' = f' g, solved order by order.
    Series exp() const {
        if (c_[0] != 0) throw std::domain_error("series exp: constant term must be 0");
        Series r(var_, order_);
        r.c_[0] = 1;
        for (unsigned m = 1; m <= order_; ++m) {
            Rat acc(0);
            for (unsigned k = 1; k <= m; ++k)
                acc += Rat(static_cast<long>(k)) * c_[k] * r.c_[m - k];
            r.c_[m] = acc / Rat(static_cast<long>(m));
        }
        return r;
    }
    // sqrt(f) for f with constant term 1.
    Series sqrt() const {
        if (c_[0] != 1) throw std::domain_error("series sqrt: constant term must be 1");
        Series r(var_, order_);
        r.c_[0] = 1;
        for (unsigned m = 1; m <= order_; ++m) {
            Rat acc(0);
            for (unsigned k = 1; k < m; ++k) acc += r.c_[k] * r.c_[m - k];
            r.c_[m] = (c_[m] - acc) / Rat(2);
        }
        return r;
    }

    // this(inner) for inner with zero constant term.
    Series compose(const Series& inner) const {
        if (inner[0] != 0) throw std::domain_error("series compose: inner constant term must be 0");
        unsigned ord = std::min(order_, inner.order());
        Series acc = constant(inner.var(), ord, 0);
        for (size_t i = order_ + 1; i-- > 0;) {
            acc = acc * inner.truncated(ord);
            acc.c_[0] += c_[i];
        }
        return acc;
    }

    // Compositional inverse g with g(this) = identity through the order.
    Series revert() const {
        if (c_[0] != 0)
            throw std::domain_error("series revert: constant term must be 0");
        if (order_ < 1 || c_[1] == 0)
            throw std::domain_error("series revert: linear coefficient must be invertible");
        Series g(var_, order_);
        // powers[k] = (this)^k truncated, updated incrementally
        std::vector<Series> powers;
        powers.push_back(constant(var_, order_, 1));
        for (unsigned k = 1; k <= order_; ++k) powers.push_back(powers.back() * *this);
        for (unsigned m = 1; m <= order_; ++m) {
            Rat acc(0);
            for (unsigned k = 1; k < m; ++k) acc += g.c_[k] * powers[k][m];
            Rat target = (m == 1) ? Rat(1) : Rat(0);
            g.c_[m] = (target - acc) / powers[m][m];  // powers[m][m] = c1^m != 0
        }
        return g;
    }

    // Keep only even/odd coefficients.
    Series even_coeffs() const {
        Series r = *this;
        for (unsigned i = 1; i <= order_; i += 2) r.c_[i] = 0;
        return r;
    }
    Series odd_coeffs() const {
        Series r = *this;
        for (unsigned i = 0; i <= order_; i += 2) r.c_[i] = 0;
        return r;
    }
    bool is_even() const {
        for (unsigned i = 1; i <= order_; i += 2)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_odd() const {
        for (unsigned i = 0; i <= order_; i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    // Reinterpret a series in v^2 (tag xi2 style) as a series in v: spreads
    // coefficient k to position 2k.  Order doubles.
    Series inflate(Var v) const {
        Series r(v, 2 * order_ + 1);
        for (unsigned i = 0; i <= order_; ++i) r.c_[2 * i] = c_[i];
        return r;
    }
    // Inverse of inflate: requires even support; order halves.
    Series deflate(Var v) const {
        if (!is_even()) throw std::domain_error("series deflate: odd terms present");
        Series r(v, order_ / 2);
        for (unsigned i = 0; i <= r.order_; ++i) r.c_[i] = c_[2 * i];
        return r;
    }

    std::string str() const {
        std::string out;
        for (unsigned i = 0; i <= order_; ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_string(c_[i]);
            if (i > 0) out += std::string("*") + var_name(var_) + "^" + std::to_string(i);
        }
        if (out.empty()) out = "0";
        return out + " + O(" + var_name(var_) + "^" + std::to_string(order_ + 1) + ")";
    }

private:
    static void check(const Series& a, const Series& b) {
        if (a.var_ != b.var_ && a.var_ != Var::generic && b.var_ != Var::generic)
            throw std::invalid_argument(std::string("series variable mismatch: ") +
                                        var_name(a.var_) + " vs " + var_name(b.var_));
    }
    static Var pick(const Series& a, const Series& b) {
        return a.var_ == Var::generic ? b.var_ : a.var_;
    }

    std::vector<Rat> c_;
    Var var_;
    unsigned order_;
};

}  // namespace mapenum
