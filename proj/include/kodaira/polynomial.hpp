#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/bigint.hpp"
#include "kodaira/int_matrix.hpp"

namespace kodaira {

// Integer polynomial, coefficient of x^i at index i, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }
    // x^d - 1
    static IntPolynomial x_pow_minus_one(std::size_t d) {
        std::vector<BigInt> v(d + 1);
        v[0] = BigInt(-1);
        v[d] = BigInt(1);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const {
        if (c_.empty()) throw std::domain_error("IntPolynomial: degree of zero polynomial");
        return c_.size() - 1;
    }
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(r));
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial r = constant(BigInt(1));
        IntPolynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    // Exact division; throws when the remainder is nonzero.
    IntPolynomial exact_div(const IntPolynomial& b) const {
        if (b.is_zero()) throw std::domain_error("IntPolynomial: division by zero");
        if (is_zero()) return IntPolynomial();
        if (degree() < b.degree()) throw std::domain_error("IntPolynomial: inexact division");
        std::vector<BigInt> rem = c_;
        std::vector<BigInt> q(degree() - b.degree() + 1);
        const BigInt& lead = b.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            BigInt qk = rem[k + b.degree()].exact_div(lead);
            q[k] = qk;
            if (qk.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= qk * b.c_[j];
        }
        for (const BigInt& v : rem)
            if (!v.is_zero()) throw std::domain_error("IntPolynomial: inexact division");
        return IntPolynomial(std::move(q));
    }

    BigInt eval(const BigInt& x) const {
        BigInt r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& a = c_[i];
            if (a.is_zero()) continue;
            BigInt mag = a.abs();
            if (s.empty()) {
                if (a.sign() < 0) s += "-";
            } else {
                s += a.sign() < 0 ? " - " : " + ";
            }
            bool unit = mag.is_one();
            if (i == 0 || !unit) s += mag.to_string();
            if (i > 0) {
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion;
// the divisions by k are exact over the integers.
inline IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = BigInt(1);
    IntMatrix a = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = a;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs[n - k + 1];
            a = m * shifted;
        }
        BigInt tr;
        for (std::size_t i = 0; i < n; ++i) tr += a.at(i, i);
        coeffs[n - k] = (-tr).exact_div(BigInt(static_cast<long long>(k)));
    }
    return IntPolynomial(std::move(coeffs));
}

inline std::string to_string(const IntPolynomial& p) { return p.to_string(); }

}  // namespace kodaira
