#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace seatstorm {

/// Exact rational number over int64 with the usual invariants:
/// denominator positive, always reduced, zero stored as 0/1.
/// All allocation logic in this library compares fractions through this
/// type (or through the same int128 cross-multiplication it uses);
/// floating point never decides a seat.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // floor(num/den) with sign handled for negative values
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make_checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    /// Parses "3", "13/400" or a plain decimal like "0.0325" exactly.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            std::int64_t n = parse_int(text.substr(0, slash));
            std::int64_t d = parse_int(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_int(text));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty()) return Rational(parse_int(whole));
        bool negative = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        std::int64_t scale = 1;
        for (char c : frac) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: " + text);
            if (scale > INT64_MAX / 10) throw std::overflow_error("rational literal too precise");
            scale *= 10;
        }
        std::int64_t f = parse_int(frac);
        std::int64_t mag = (w < 0 ? -w : w);
        if (mag > (INT64_MAX - f) / scale) throw std::overflow_error("rational literal overflow");
        std::int64_t n = mag * scale + f;
        return Rational(negative ? -n : n, scale);
    }

private:
    using i128 = __int128;

    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer literal: " + s);
        return v;
    }

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static Rational make_checked(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = n < 0 ? -n : n;
        i128 b = d;
        while (b != 0) {
            i128 t = g % b;
            g = b;
            b = t;
        }
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d == 0 ? 1 : d);
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Compares a/da against b/db without building intermediates that could
/// overflow: returns <0, 0, >0. Supports up to ~1e9 votes against rational
/// divisors with components up to ~1e9.
inline int compare_fractions(std::int64_t a, const Rational& da,
                             std::int64_t b, const Rational& db) {
    // a/da ? b/db  <=>  a*da.den*db.num ? b*db.den*da.num  (divisors positive)
    __int128 lhs = static_cast<__int128>(a) * da.den() * db.num();
    __int128 rhs = static_cast<__int128>(b) * db.den() * da.num();
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace seatstorm
