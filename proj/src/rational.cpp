#include "gog/rational.hpp"

#include <cctype>
#include <limits>

#include "gog/errors.hpp"

namespace gog {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMin = std::numeric_limits<long long>::min();
constexpr __int128 kMax = std::numeric_limits<long long>::max();

}  // namespace

Rational Rational::make_reduced(__int128 num, __int128 den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num < kMin || num > kMax || den > kMax)
        throw overflow_error("rational out of 64-bit range after reduction");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = make_reduced(num, den);
}

Rational Rational::operator-() const {
    return make_reduced(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.num_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw domain_error("division by zero rational");
    return make_reduced(static_cast<__int128>(num_) * o.den_,
                        static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::pow(long long e) const {
    if (e < 0) {
        if (num_ == 0) throw domain_error("zero to a negative power");
        return Rational(den_, num_).pow(-e);
    }
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base = (e > 1) ? base * base : base;
        e >>= 1;
    }
    return result;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    size_t start = 0;
    bool neg = false;
    if (start < text.size() && (text[start] == '-' || text[start] == '+')) {
        neg = text[start] == '-';
        ++start;
    }
    size_t slash = text.find('/');
    long long num = 0;
    long long den = 1;
    try {
        if (slash == std::string::npos) {
            if (!digits(text, start, text.size()))
                throw parse_error(0, "bad rational \"" + text + "\"");
            num = std::stoll(text.substr(start));
        } else {
            if (!digits(text, start, slash) || !digits(text, slash + 1, text.size()))
                throw parse_error(0, "bad rational \"" + text + "\"");
            num = std::stoll(text.substr(start, slash - start));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::out_of_range&) {
        throw overflow_error("rational literal out of 64-bit range: \"" + text + "\"");
    }
    if (den == 0) throw parse_error(0, "bad rational \"" + text + "\": zero denominator");
    return Rational(neg ? -num : num, den);
}

}  // namespace gog
