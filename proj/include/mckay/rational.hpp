// Arbitrary-precision integers and rationals.
//
// Values in this project are small (numerators bounded by group orders and
// character dimensions), but intermediate products must never overflow, so
// everything sits on an exact bignum. Rationals are always reduced and keep
// a positive denominator.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated quotient and remainder (remainder has the dividend's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        q.mag_ = std::move(qm);
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = BigInt();
        r.mag_ = std::move(rm);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.sign_ = b.mag_.empty() ? 0 : 1;
        }
        return a;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_u64();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
        unsigned long long u = to_u64();
        if (sign_ < 0) return -static_cast<long long>(u - 1) - 1;
        return static_cast<long long>(u);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide by 10^9 in place
            unsigned long long rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(sign_ + 2);
        for (std::uint32_t w : mag_) h = h * 1000003u + w;
        return h;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros

    unsigned long long to_u64() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& hi = a.size() >= b.size() ? a : b;
        const auto& lo = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        unsigned long long carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        long long borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            long long s = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (s < 0) {
                s += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned long long carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned long long cur = static_cast<unsigned long long>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                unsigned long long cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // binary long division on magnitudes; |a| >= |b| > 0
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t bit = a.size() * 32; bit-- > 0;) {
            // r = r*2 + bit of a
            std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::uint32_t next = r[i] >> 31;
                r[i] = (r[i] << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[bit / 32] |= 1u << (bit % 32);
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

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
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    long long to_int64() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        return num_.to_int64();
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        auto parse_int = [](const std::string& t) {
            if (t.empty()) throw std::invalid_argument("Rational: empty integer");
            std::size_t i = 0;
            bool neg = false;
            if (t[0] == '-' || t[0] == '+') {
                neg = t[0] == '-';
                i = 1;
            }
            if (i == t.size()) throw std::invalid_argument("Rational: bad integer '" + t + "'");
            BigInt v(0);
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9')
                    throw std::invalid_argument("Rational: bad integer '" + t + "'");
                v = v * BigInt(10) + BigInt(t[i] - '0');
            }
            return neg ? -v : v;
        };
        if (slash == std::string::npos) return Rational(parse_int(s), BigInt(1));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace mckay
