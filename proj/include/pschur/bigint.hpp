//
// pschur : arbitrary-precision signed integers for the exact scalar backend.
// Sign-magnitude representation, base 2^32 limbs, little-endian.
//
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pschur {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // careful with LLONG_MIN: negate in unsigned space
        std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        push_u64(mag);
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view text) {
        std::size_t i = 0;
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
        }
        if (i == text.size())
            throw std::invalid_argument("BigInt: empty numeral");
        BigInt out;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            out.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
        }
        if (!out.mag_.empty()) out.sign_ = sign;
        return out;
    }

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    bool is_one() const {
        return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        if (a.mag_.size() == 1 && b.mag_.size() == 1) {
            std::uint64_t p = static_cast<std::uint64_t>(a.mag_[0]) * b.mag_[0];
            r.push_u64(p);
        } else {
            r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
            for (std::size_t i = 0; i < a.mag_.size(); ++i) {
                std::uint64_t carry = 0;
                for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                    std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                        r.mag_[i + j] + carry;
                    r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                    carry = cur >> 32;
                }
                r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
            }
            r.trim();
        }
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // truncated toward zero, like built-in integer division
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        return divmod(a, b).first;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        return divmod(a, b).second;
    }

    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt{}, BigInt{}};
        if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt{}, a};

        BigInt q, r;
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            std::uint64_t ua = to_u64(a.mag_), ub = to_u64(b.mag_);
            q.push_u64(ua / ub);
            r.push_u64(ua % ub);
        } else {
            // bitwise long division on magnitudes
            q.mag_.assign(a.mag_.size(), 0);
            std::size_t nbits = bit_length_mag(a.mag_);
            for (std::size_t k = nbits; k-- > 0;) {
                shl1(r.mag_);
                if ((a.mag_[k / 32] >> (k % 32)) & 1u) {
                    if (r.mag_.empty()) r.mag_.push_back(1);
                    else r.mag_[0] |= 1u;
                }
                if (cmp_mag(r.mag_, b.mag_) >= 0) {
                    r.mag_ = sub_mag(r.mag_, b.mag_);
                    q.mag_[k / 32] |= (1u << (k % 32));
                }
            }
            q.trim();
            r.trim();
        }
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.mag_.empty()) r.sign_ = a.sign_;
        return {q, r};
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            std::uint64_t x = to_u64(a.mag_), y = to_u64(b.mag_);
            while (y != 0) {
                std::uint64_t t = x % y;
                x = y;
                y = t;
            }
            BigInt g;
            g.push_u64(x);
            g.sign_ = 1;
            return g;
        }
        // binary gcd on magnitudes
        std::vector<std::uint32_t> x = a.mag_, y = b.mag_;
        std::size_t shift = std::min(tz_count(x), tz_count(y));
        shr_bits(x, tz_count(x));
        while (!y.empty()) {
            shr_bits(y, tz_count(y));
            if (cmp_mag(x, y) > 0) std::swap(x, y);
            y = sub_mag(y, x);
        }
        shl_bits(x, shift);
        BigInt g;
        g.mag_ = std::move(x);
        g.sign_ = 1;
        return g;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    std::size_t bit_length() const { return bit_length_mag(mag_); }

    bool fits_int64() const {
        return bit_length() <= 62;  // comfortable margin for products of pairs
    }

    std::int64_t as_int64() const {
        std::int64_t v = static_cast<std::int64_t>(to_u64(mag_));
        return sign_ < 0 ? -v : v;
    }

    double to_double() const {
        if (sign_ == 0) return 0.0;
        std::size_t bits = bit_length();
        double d;
        if (bits <= 64) {
            d = static_cast<double>(to_u64(mag_));
        } else {
            // top 64 bits as mantissa, rest as exponent
            std::uint64_t top = 0;
            std::size_t need = 64, pos = bits;
            while (need > 0) {
                std::size_t limb_idx = (pos - 1) / 32;
                std::uint32_t limb = mag_[limb_idx];
                std::size_t avail = pos - limb_idx * 32;   // bits of this limb at/below pos
                std::size_t take = std::min(need, avail);
                top = (top << take) | ((limb >> (avail - take)) & mask(take));
                need -= take;
                pos -= take;
            }
            d = std::ldexp(static_cast<double>(top), static_cast<int>(bits - 64));
        }
        return sign_ < 0 ? -d : d;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static constexpr std::uint64_t mask(std::size_t n) {
        return n >= 64 ? ~0ull : (1ull << n) - 1;
    }

    void push_u64(std::uint64_t v) {
        if (v == 0) { sign_ = 0; mag_.clear(); return; }
        mag_.clear();
        mag_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) mag_.push_back(static_cast<std::uint32_t>(v >> 32));
        if (sign_ == 0) sign_ = 1;
    }

    static std::uint64_t to_u64(const std::vector<std::uint32_t>& m) {
        std::uint64_t v = 0;
        if (m.size() > 1) v = static_cast<std::uint64_t>(m[1]) << 32;
        if (!m.empty()) v |= m[0];
        return v;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::size_t bit_length_mag(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        return (m.size() - 1) * 32 + (32 - std::countl_zero(m.back()));
    }

    static std::size_t tz_count(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) { n += 32; continue; }
            return n + std::countr_zero(m[i]);
        }
        return n;
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    static void shl_bits(std::vector<std::uint32_t>& m, std::size_t n) {
        if (m.empty() || n == 0) return;
        std::size_t limbs = n / 32, bits = n % 32;
        if (bits) {
            std::uint32_t carry = 0;
            for (auto& limb : m) {
                std::uint32_t next = limb >> (32 - bits);
                limb = (limb << bits) | carry;
                carry = next;
            }
            if (carry) m.push_back(carry);
        }
        m.insert(m.begin(), limbs, 0u);
    }

    static void shr_bits(std::vector<std::uint32_t>& m, std::size_t n) {
        if (m.empty() || n == 0) return;
        std::size_t limbs = n / 32, bits = n % 32;
        if (limbs >= m.size()) { m.clear(); return; }
        m.erase(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(limbs));
        if (bits) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint32_t high = i + 1 < m.size() ? m[i + 1] << (32 - bits) : 0u;
                m[i] = (m[i] >> bits) | high;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
        }
    }
};

}  // namespace pschur
