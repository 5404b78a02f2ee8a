#pragma once

#include <cstdint>
#include <string>

namespace gog {

// Exact rational number on checked 64-bit integers.
//
// Invariants: den >= 1, gcd(|num|, den) = 1, zero is 0/1.  Every operation
// reduces through 128-bit intermediates and throws gog::overflow_error if the
// reduced result does not fit the 64-bit representation.  There is no floating
// point anywhere in this class.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws domain_error on 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }

    // Largest integer <= value (true floor, also for negatives).
    long long floor() const;

    // Integer exponents; negative exponents invert (zero base then throws).
    Rational pow(long long e) const;

    // "p/q" with gcd 1, or just "p" when q = 1.
    std::string str() const;

    // Inverse of str(); accepts "p" and "p/q", q > 0 after sign normalization.
    static Rational parse(const std::string& text);

private:
    static Rational make_reduced(__int128 num, __int128 den);

    long long num_;
    long long den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace gog
