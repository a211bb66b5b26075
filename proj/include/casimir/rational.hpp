#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace casimir {

/// Exact rational number on 128-bit integers. Wide enough for every Bernoulli
/// number up to B_40 (whose numerator, ~2.6e20, no longer fits in 64 bits) and
/// for the von Staudt-Clausen arithmetic the tests perform on them.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den) : num_(num), den_(den) { normalize(); }

    /// Parse a (possibly signed) decimal integer numerator.
    Rational(const std::string& num, Int den) : num_(parse(num)), den_(den) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const {
        if (den_ == 1) return int_to_string(num_);
        return int_to_string(num_) + "/" + int_to_string(den_);
    }

private:
    static Int gcd(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Int parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty numerator string");
        bool neg = s[0] == '-';
        Int v = 0;
        for (std::size_t i = neg ? 1 : 0; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("Rational: bad digit");
            v = v * 10 + (c - '0');
        }
        return neg ? -v : v;
    }

    static std::string int_to_string(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        std::string digits;
        while (v != 0) {
            int d = static_cast<int>(neg ? -(v % 10) : v % 10);
            digits.push_back(static_cast<char>('0' + d));
            v /= 10;
        }
        if (neg) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

} // namespace casimir
