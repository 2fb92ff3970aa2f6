#pragma once

// Exact rational arithmetic. Per-pair distances fit comfortably in an int64
// fraction (numerator and denominator are bounded by 2n); comparisons go
// through __int128 so cross-multiplication cannot overflow. Unbounded sums
// (fractional costs, parameter derivations) use cpp_rational instead.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mmcc {

using BigRat = boost::multiprecision::cpp_rational;

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;  // both reduced
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

inline bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

// Safe for small operands (sums over a handful of terms); larger
// accumulations should use BigRat.
inline Rational operator+(const Rational& a, const Rational& b) {
    __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 den = static_cast<__int128>(a.den) * b.den;
    __int128 g = den;
    __int128 x = num < 0 ? -num : num;
    while (x != 0) {
        __int128 t = g % x;
        g = x;
        x = t;
    }
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
        throw std::overflow_error("rational sum overflow; use BigRat");
    return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}
inline Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational{-b.num, b.den};
}

inline double to_double(const Rational& a) {
    return static_cast<double>(a.num) / static_cast<double>(a.den);
}

inline BigRat to_bigrat(const Rational& a) {
    return BigRat(a.num, a.den);
}

inline std::string to_string(const Rational& a) {
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

// Parses "p/q" or a decimal literal like "0.7" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = std::stoll(text.substr(0, slash));
        std::int64_t q = std::stoll(text.substr(slash + 1));
        return make_rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return make_rational(std::stoll(text), 1);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len > 18) throw std::invalid_argument("decimal literal too long: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(std::stoll(digits), den);
}

}  // namespace mmcc
