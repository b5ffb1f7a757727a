#pragma once

// Arbitrary-precision signed integers and exact rationals.
// All arithmetic in the library is exact; there is no floating point anywhere.

#include <algorithm>
#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace overlapk {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long m = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
        while (m) { mag_.push_back(uint32_t(m % kBase)); m /= kBase; }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        size_t pos = 0;
        int sign = 1;
        if (s[0] == '-') { sign = -1; pos = 1; }
        else if (s[0] == '+') { pos = 1; }
        if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r.mul_small(10);
            r = r.add_small(uint32_t(s[pos] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_ll() const {
        static const std::vector<uint32_t> kMaxLL = {854775807u, 223372036u, 9u};  // 2^63 - 1
        return cmp_mag(mag_, kMaxLL) <= 0;
    }
    long long to_ll() const {
        long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * kBase + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
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
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = uint64_t(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = uint32_t(cur % kBase);
                carry = cur / kBase;
            }
            size_t j = i + b.mag_.size();
            while (carry) { uint64_t cur = r.mag_[j] + carry; r.mag_[j] = uint32_t(cur % kBase); carry = cur / kBase; ++j; }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated quotient (rounds toward zero), matching C++ integer division.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.mag_.size() == 1) {
            uint64_t rem = 0;
            q.mag_.assign(a.mag_.size(), 0);
            for (size_t i = a.mag_.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + a.mag_[i];
                q.mag_[i] = uint32_t(cur / b.mag_[0]);
                rem = cur % b.mag_[0];
            }
            q.trim();
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt((long long)rem);
            if (a.sign_ < 0) r.sign_ = -r.sign_;
            return;
        }
        // Schoolbook long division, limb-by-limb with a binary-searched digit.
        BigInt rem;
        q.mag_.assign(a.mag_.size(), 0);
        for (size_t i = a.mag_.size(); i-- > 0;) {
            rem.mag_.insert(rem.mag_.begin(), a.mag_[i]);
            rem.trim();
            rem.sign_ = rem.mag_.empty() ? 0 : 1;
            uint32_t lo = 0, hi = kBase - 1, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                BigInt t = b.abs().mul_small(mid);
                if (cmp_mag(t.mag_, rem.mag_) <= 0) { digit = mid; lo = mid + 1; }
                else { if (mid == 0) break; hi = mid - 1; }
            }
            q.mag_[i] = digit;
            if (digit) {
                BigInt t = b.abs().mul_small(digit);
                rem.mag_ = sub_mag(rem.mag_, t.mag_);
                rem.trim();
                rem.sign_ = rem.mag_.empty() ? 0 : 1;
            }
        }
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = rem;
        if (!r.mag_.empty()) r.sign_ = a.sign_;
        else r.sign_ = 0;
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

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt factorial(int n) {
        BigInt r(1);
        for (int i = 2; i <= n; ++i) r = r.mul_small(uint32_t(i));
        return r;
    }
    static BigInt binomial(int n, int m) {
        if (m < 0 || m > n) return BigInt(0);
        BigInt r(1);
        for (int i = 0; i < m; ++i) {
            r = r.mul_small(uint32_t(n - i));
            BigInt q, rest;
            divmod(r, BigInt(i + 1), q, rest);
            r = q;
        }
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        for (size_t i = mag_.size() - 1; i-- > 0;) {
            std::string limb = std::to_string(mag_[i]);
            s += std::string(9 - limb.size(), '0') + limb;
        }
        return s;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // little-endian base-1e9 limbs, no leading zeros

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    BigInt mul_small(uint32_t m) const {
        BigInt r;
        if (sign_ == 0 || m == 0) return r;
        uint64_t carry = 0;
        r.mag_.reserve(mag_.size() + 1);
        for (uint32_t limb : mag_) {
            uint64_t cur = uint64_t(limb) * m + carry;
            r.mag_.push_back(uint32_t(cur % kBase));
            carry = cur / kBase;
        }
        while (carry) { r.mag_.push_back(uint32_t(carry % kBase)); carry /= kBase; }
        r.sign_ = sign_;
        return r;
    }
    BigInt add_small(uint32_t v) const {
        return *this + BigInt((long long)v);
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(uint32_t(cur % kBase));
            carry = cur / kBase;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = int64_t(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += kBase; borrow = 1; }
            else borrow = 0;
            r[i] = uint32_t(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    // Magnitude proxy for pivot selection: compares |a| vs |b| crudely by num/den sizes.
    friend bool simpler_than(const Rational& a, const Rational& b) {
        auto w = [](const Rational& x) {
            return x.num_.to_string().size() + x.den_.to_string().size();
        };
        return w(a) < w(b);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

}  // namespace overlapk
