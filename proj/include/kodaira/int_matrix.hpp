#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/bigint.hpp"

namespace kodaira {

// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
            for (long long v : row) entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    static IntMatrix from_rows(std::size_t rows, std::size_t cols,
                               const std::vector<long long>& flat) {
        if (flat.size() != rows * cols)
            throw std::invalid_argument("IntMatrix: wrong entry count");
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < flat.size(); ++i) m.entries_[i] = BigInt(flat[i]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<BigInt>& entries() const { return entries_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b);
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b);
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const BigInt& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend IntMatrix operator*(const BigInt& c, const IntMatrix& a) {
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = c * a.entries_[i];
        return r;
    }
    IntMatrix operator-() const { return BigInt(-1) * *this; }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
        std::vector<BigInt> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    IntMatrix columns(const std::vector<std::size_t>& which) const {
        IntMatrix r(rows_, which.size());
        for (std::size_t j = 0; j < which.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, which[j]);
        return r;
    }

    IntMatrix top_rows(std::size_t n) const {
        IntMatrix r(n, cols_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    // Fraction-free Bareiss determinant.
    BigInt det() const {
        if (!is_square()) throw std::invalid_argument("IntMatrix: det of non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return BigInt(1);
        IntMatrix a = *this;
        BigInt prev(1);
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a.at(k, k).is_zero()) {
                std::size_t p = k + 1;
                while (p < n && a.at(p, k).is_zero()) ++p;
                if (p == n) return BigInt(0);
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).exact_div(prev);
            prev = a.at(k, k);
        }
        BigInt d = a.at(n - 1, n - 1);
        if (sign < 0) d.negate();
        return d;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += at(i, j).to_string();
                if (j + 1 < cols_) s += " ";
            }
            s += i + 1 < rows_ ? "\n" : "]";
        }
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> entries_;

    void require_same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
    }
};

}  // namespace kodaira
