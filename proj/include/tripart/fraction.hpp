#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tripart {

namespace detail {

inline long long narrow128(__int128 v, const char* what) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error(what);
    return static_cast<long long>(v);
}

} // namespace detail

/// Exact rational, kept in lowest terms with a positive denominator.
/// Comparisons cross-multiply in 128 bits, so values built from
/// coordinates below 2^31 never overflow.
class Fraction {
public:
    Fraction() = default;
    Fraction(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
        __int128 d = __int128(a.den_) * b.den_;
        return reduced(n, d);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        __int128 n = __int128(a.num_) * b.den_ - __int128(b.num_) * a.den_;
        __int128 d = __int128(a.den_) * b.den_;
        return reduced(n, d);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return reduced(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
    }

    /// Midpoint of two fractions, exact.
    static Fraction midpoint(const Fraction& a, const Fraction& b) {
        __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
        __int128 d = __int128(a.den_) * b.den_ * 2;
        return reduced(n, d);
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Fraction reduced(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Fraction f;
        f.num_ = detail::narrow128(n, "fraction numerator overflow");
        f.den_ = detail::narrow128(d, "fraction denominator overflow");
        if (f.den_ == 0) throw std::invalid_argument("fraction with zero denominator");
        return f;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::invalid_argument("fraction with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace tripart
