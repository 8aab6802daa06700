#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cutspec {

/// Exact rational over 64-bit integers. Denominator is kept positive and the
/// fraction reduced, so equality is structural. Intermediate products go
/// through 128-bit arithmetic and overflow of the reduced result throws
/// instead of wrapping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline long long narrow128(__int128 v, const char* op) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(std::string("Rational overflow in ") + op);
    return static_cast<long long>(v);
}
inline Rational make_reduced(__int128 n, __int128 d, const char* op) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num = narrow128(n, op);
    r.den = narrow128(d, op);
    if (r.num == 0) r.den = 1;
    return r;
}
} // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return detail::make_reduced(n, d, "+");
}
inline Rational operator-(const Rational& a) { Rational r = a; r.num = -r.num; return r; }
inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
inline Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num) * b.num;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return detail::make_reduced(n, d, "*");
}
inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    __int128 n = static_cast<__int128>(a.num) * b.den;
    __int128 d = static_cast<__int128>(a.den) * b.num;
    return detail::make_reduced(n, d, "/");
}

} // namespace cutspec
