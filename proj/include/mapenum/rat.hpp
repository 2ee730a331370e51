// Exact rational scalars and small number-theory helpers used everywhere.
//
// Rat is an arbitrary-precision rational kept in lowest terms with positive
// denominator; boost::multiprecision guarantees that canonical form, so the
// wrapper here is a typedef plus the handful of free functions the rest of
// the code needs (powers, factorials, decimal rendering).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mapenum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

// Safe two-integer constructor (the backend rejects negative denominators).
inline Rat make_rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("make_rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (inv) {
        if (acc == 0) throw std::domain_error("rat_pow: zero to negative power");
        acc = Rat(1) / acc;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// (2n-1)!! ; double_factorial(0) = 1.
inline Int double_factorial_odd(unsigned n) {
    Int f = 1;
    for (unsigned k = 1; k <= n; ++k) f *= 2 * k - 1;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// n! / (a! b! c!) with a+b+c = n; zero if any part is negative.
inline Int multinomial3(long n, long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) return 0;
    return binomial(n, a) * binomial(n - a, b);
}

// Falling factorial r(r-1)...(r-m+1); handles negative r exactly.
inline Rat falling(const Rat& r, unsigned m) {
    Rat acc(1);
    for (unsigned i = 0; i < m; ++i) acc *= (r - Rat(i));
    return acc;
}

// Exact decimal rendering of q to `digits` places after the point,
// rounded half away from zero.  Deterministic, used for CSV/SVG output.
inline std::string decimal_string(const Rat& q, unsigned digits) {
    Int n = num(q), d = den(q);
    bool neg = n < 0;
    if (neg) n = -n;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = n * scale;
    Int quot = scaled / d;
    Int rem = scaled % d;
    if (2 * rem >= d) ++quot;  // round half away from zero (sign applied below)
    Int ip = quot / scale, fp = quot % scale;
    std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

// "p/q" (or just "p" for integers); the exact interchange format.
inline std::string rat_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace mapenum
