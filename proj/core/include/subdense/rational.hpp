#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subdense {

// Exact rational with int64 components. A zero denominator encodes +infinity,
// which several density statistics need (edgeless graphs, starved terminals).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    static Rational infinity() {
        Rational r;
        r.num = 1;
        r.den = 0;
        return r;
    }

    bool is_infinite() const { return den == 0; }

    void normalize() {
        if (den == 0) {
            num = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double to_double() const {
        if (is_infinite()) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num) / static_cast<double>(den);
    }

    long long floor() const {
        if (is_infinite()) throw std::domain_error("floor of infinite rational");
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    long long ceil() const {
        if (is_infinite()) throw std::domain_error("ceil of infinite rational");
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline int compare(const Rational& a, const Rational& b) {
    if (a.is_infinite() && b.is_infinite()) return 0;
    if (a.is_infinite()) return 1;
    if (b.is_infinite()) return -1;
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

namespace detail {
inline Rational reduced(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = 1;
    {
        __int128 x = an, y = d;
        while (y != 0) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        g = x == 0 ? 1 : x;
    }
    n /= g;
    d /= g;
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim)
        throw std::overflow_error("rational overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    if (r.num == 0) r.den = 1;
    return r;
}
}  // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
    return detail::reduced(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                           static_cast<__int128>(a.den) * b.den);
}

inline Rational operator-(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return Rational::infinity();
    if (b.is_infinite()) throw std::domain_error("subtracting infinite rational");
    return detail::reduced(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                           static_cast<__int128>(a.den) * b.den);
}

inline Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
    return detail::reduced(static_cast<__int128>(a.num) * b.num,
                           static_cast<__int128>(a.den) * b.den);
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_infinite()) return Rational(0);
    if (b.num == 0) return Rational::infinity();
    if (a.is_infinite()) return Rational::infinity();
    return detail::reduced(static_cast<__int128>(a.num) * b.den,
                           static_cast<__int128>(a.den) * b.num);
}

}  // namespace subdense
