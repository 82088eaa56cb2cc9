#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace kodaira {

// Signed arbitrary-precision integer, limbs in base 10^9.
// Division truncates toward zero, like built-in integers.
class BigInt {
public:
    BigInt() = default;
    template <class T, class = std::enable_if_t<std::is_integral_v<T>>>
    BigInt(T v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u;
        if constexpr (std::is_signed_v<T>) {
            long long s = static_cast<long long>(v);
            u = s < 0 ? 0ULL - static_cast<unsigned long long>(s)
                      : static_cast<unsigned long long>(s);
        } else {
            u = static_cast<unsigned long long>(v);
        }
        while (u) {
            limbs_.push_back(static_cast<uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        std::size_t pos = 0;
        int sign = 1;
        if (s[0] == '-') { sign = -1; pos = 1; }
        else if (s[0] == '+') { pos = 1; }
        if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            char ch = s[pos];
            if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(ch - '0');
        }
        if (sign < 0) r.negate();
        return r;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    void negate() { sign_ = -sign_; }
    BigInt operator-() const { BigInt r = *this; r.negate(); return r; }
    BigInt abs() const { BigInt r = *this; if (r.sign_ < 0) r.sign_ = 1; return r; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.sign_ = a.sign_; }
            else       { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Quotient and remainder with |r| < |b| and sign(r) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) { q = BigInt(); r = a; return; }
        BigInt qq, rr;
        divmod_mag(a.limbs_, b.limbs_, qq.limbs_, rr.limbs_);
        qq.sign_ = qq.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        rr.sign_ = rr.limbs_.empty() ? 0 : a.sign_;
        q = std::move(qq);
        r = std::move(rr);
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
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }
    BigInt& operator%=(const BigInt& o) { *this = *this % o; return *this; }

    bool divisible_by(const BigInt& b) const { return (*this % b).is_zero(); }

    // Throws if the quotient is not exact.
    BigInt exact_div(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    long long to_int64() const {
        long long r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (r > (INT64_MAX - static_cast<long long>(limbs_[i])) / kBase)
                throw std::overflow_error("BigInt: does not fit in int64");
            r = r * kBase + limbs_[i];
        }
        return sign_ < 0 ? -r : r;
    }
    bool fits_int64() const {
        // 18 digits always fit; beyond that compare against INT64_MAX.
        if (limbs_.size() < 3) return true;
        if (limbs_.size() > 3) return false;
        BigInt bound(INT64_MAX);
        return cmp_mag(limbs_, bound.limbs_) <= 0;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros, empty iff zero

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += kBase; borrow = 1; } else { borrow = 0; }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook long division on magnitudes, |a| >= |b| > 0.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& rem) {
        if (b.size() == 1) {
            uint64_t d = b[0], r = 0;
            q.assign(a.size(), 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                uint64_t cur = r * kBase + a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                r = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            rem.clear();
            if (r) rem.push_back(static_cast<uint32_t>(r));
            return;
        }

        // Knuth algorithm D with a normalization factor making the top
        // divisor limb at least kBase/2.
        uint32_t d = static_cast<uint32_t>(kBase / (static_cast<uint64_t>(b.back()) + 1));
        std::vector<uint32_t> u = scale_mag(a, d);
        std::vector<uint32_t> v = scale_mag(b, d);
        u.push_back(0);
        std::size_t n = v.size(), m = u.size() - n;
        q.assign(m, 0);
        for (std::size_t j = m; j-- > 0;) {
            unsigned __int128 top =
                (static_cast<unsigned __int128>(u[j + n]) * kBase + u[j + n - 1]);
            uint64_t qhat = static_cast<uint64_t>(top / v[n - 1]);
            uint64_t rhat = static_cast<uint64_t>(top % v[n - 1]);
            if (qhat >= kBase) { qhat = kBase - 1; rhat = static_cast<uint64_t>(top - static_cast<unsigned __int128>(qhat) * v[n - 1]); }
            while (rhat < kBase &&
                   static_cast<unsigned __int128>(qhat) * v[n - 2] >
                       static_cast<unsigned __int128>(rhat) * kBase + u[j + n - 2]) {
                --qhat;
                rhat += v[n - 1];
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p / kBase;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p % kBase) - borrow;
                if (t < 0) { t += kBase; borrow = 1; } else { borrow = 0; }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add v back
                --qhat;
                uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur % kBase);
                    c2 = cur / kBase;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        // undo normalization
        uint64_t r = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            uint64_t cur = r * kBase + u[i];
            u[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
        rem = std::move(u);
    }

    static std::vector<uint32_t> scale_mag(const std::vector<uint32_t>& a, uint32_t d) {
        std::vector<uint32_t> r(a.size() + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * d + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a * b).abs().exact_div(gcd(a, b));
}

inline BigInt pow(BigInt base, unsigned long long e) {
    BigInt r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const BigInt& v) { return v.to_string(); }

template <class Stream>
Stream& operator<<(Stream& os, const BigInt& v) {
    os << v.to_string();
    return os;
}

}  // namespace kodaira
