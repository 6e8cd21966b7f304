#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.
//
// Every value is kept reduced (gcd(|num|, den) = 1, den >= 1, zero is 0/1).
// Intermediate products are computed in 128 bits and reduced before being
// narrowed back; anything that still does not fit throws std::overflow_error
// instead of silently wrapping. There is no floating point anywhere.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace montesinos {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow128(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const { return Rational(-num_, den_, reduced_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return from128(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        detail::int128 l = detail::int128(a.num_) * b.den_;
        detail::int128 r = detail::int128(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (num_ == 0)
            throw std::domain_error("reciprocal of zero");
        return from128(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Always "num/den", so values round-trip exactly through text.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "num/den" and bare integers.
    static Rational parse(const std::string& s);

private:
    struct reduced_tag {};
    Rational(std::int64_t n, std::int64_t d, reduced_tag) : num_(n), den_(d) {}

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        *this = from128(n, d);
    }

    static Rational from128(detail::int128 n, detail::int128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (n == 0)
            return Rational();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::gcd128(n, d);
        n /= g;
        d /= g;
        return Rational(detail::narrow128(n), detail::narrow128(d), reduced_tag{});
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto to_int = [](const std::string& part) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal: " + part);
        }
        if (pos != part.size())
            throw std::invalid_argument("bad rational literal: " + part);
        return static_cast<std::int64_t>(v);
    };
    if (slash == std::string::npos)
        return Rational(to_int(s));
    return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
}

} // namespace montesinos
