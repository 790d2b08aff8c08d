//
// pschur : exact rational scalar. Always lowest terms, positive denominator.
//
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pschur/bigint.hpp"

namespace pschur {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    // accepts "p", "p/q", "-3.25" and "1.5e-3" forms; decimals convert exactly
    static Rational from_string(std::string_view text) {
        auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            return Rational(BigInt::from_string(text.substr(0, slash)),
                            BigInt::from_string(text.substr(slash + 1)));
        }
        std::string digits;
        digits.reserve(text.size());
        long long frac_digits = 0, exponent = 0;
        std::size_t i = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) digits.push_back(text[i++]);
        bool seen_digit = false, seen_point = false;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c >= '0' && c <= '9') {
                digits.push_back(c);
                seen_digit = true;
                if (seen_point) ++frac_digits;
            } else if (c == '.' && !seen_point) {
                seen_point = true;
            } else if ((c == 'e' || c == 'E') && seen_digit) {
                std::size_t pos = 0;
                exponent = std::stoll(std::string(text.substr(i + 1)), &pos);
                if (pos != text.size() - i - 1)
                    throw std::invalid_argument("Rational: bad exponent");
                break;
            } else {
                throw std::invalid_argument("Rational: cannot parse numeral");
            }
        }
        if (!seen_digit) throw std::invalid_argument("Rational: cannot parse numeral");
        BigInt num = BigInt::from_string(digits);
        BigInt den(1);
        long long shift = exponent - frac_digits;
        BigInt ten(10);
        for (long long k = 0; k < shift; ++k) num = num * ten;
        for (long long k = 0; k < -shift; ++k) den = den * ten;
        return Rational(std::move(num), std::move(den));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational abs() const { return signum() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    double to_double() const {
        if (num_.is_zero()) return 0.0;
        // balance exponents so huge num/den pairs stay finite
        auto nb = static_cast<long long>(num_.bit_length());
        auto db = static_cast<long long>(den_.bit_length());
        double n = num_.to_double(), d = den_.to_double();
        if (nb < 1000 && db < 1000) return n / d;
        return std::ldexp((n / std::ldexp(1.0, static_cast<int>(nb))) /
                              (d / std::ldexp(1.0, static_cast<int>(db))),
                          static_cast<int>(nb - db));
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.signum() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace pschur
