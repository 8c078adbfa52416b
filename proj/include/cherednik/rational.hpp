#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cherednik {

// Exact rational arithmetic on 64-bit integers. Always reduced, denominator
// positive. Every parameter, charged content and residue computation in this
// library goes through this type; there is no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    long long as_integer() const {
        if (den_ != 1) throw std::invalid_argument("rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return make(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(w(num_) * o.den_ - w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(w(num_) * o.num_, w(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return make(w(num_) * o.den_, w(den_) * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 l = w(num_) * o.den_, r = w(o.num_) * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Largest integer <= value.
    long long floor_int() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Canonical representative of the class mod 1, in [0, 1).
    Rational mod1() const { return *this - Rational(floor_int()); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "k", "-k", "p/q", "-p/q".
    static Rational parse(std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("malformed rational '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        size_t slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(s)));
            long long p = std::stoll(std::string(s.substr(0, slash)));
            long long q = std::stoll(std::string(s.substr(slash + 1)));
            return Rational(p, q);
        } catch (const std::invalid_argument&) {
            bad();
        } catch (const std::out_of_range&) {
            bad();
        }
        return Rational();
    }

private:
    long long num_;
    long long den_;

    static __int128 w(long long x) { return static_cast<__int128>(x); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void reduce() {
        Rational r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }
};

} // namespace cherednik
