#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "degstab/error.hpp"

namespace degstab {

/// Small exact rational used for degree thresholds. Comparisons go through
/// 128-bit cross multiplication so boundary cases never depend on rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d == 0) throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    /// floor(this * scale) for a nonnegative integer scale.
    std::int64_t floor_times(std::uint64_t scale) const {
        __int128 p = static_cast<__int128>(num) * static_cast<__int128>(scale);
        __int128 q = p / den;
        if (p % den != 0 && p < 0) --q;
        return static_cast<std::int64_t>(q);
    }

    friend int compare(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
};

}  // namespace degstab
