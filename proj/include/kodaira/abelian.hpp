#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/bigint.hpp"
#include "kodaira/int_matrix.hpp"
#include "kodaira/smith.hpp"

namespace kodaira {

inline long long mod_nonneg(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

// Finite abelian group presented as Z/n_1 + ... + Z/n_k. The moduli are
// kept in the order given (they need not form a divisibility chain);
// invariant_factors() returns the normalized chain.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
        for (long long n : moduli_)
            if (n < 2) throw std::invalid_argument("FiniteAbelianGroup: moduli must be >= 2");
    }

    const std::vector<long long>& moduli() const { return moduli_; }
    std::size_t factor_count() const { return moduli_.size(); }
    bool is_trivial() const { return moduli_.empty(); }

    BigInt order() const {
        BigInt o(1);
        for (long long n : moduli_) o *= BigInt(n);
        return o;
    }

    // Invariant factors n_1 | n_2 | ... via the Smith form of diag(moduli).
    std::vector<long long> invariant_factors() const {
        IntMatrix diag(moduli_.size(), moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i) diag.at(i, i) = BigInt(moduli_[i]);
        SmithDecomposition d = snf(diag);
        std::vector<long long> out;
        for (const BigInt& v : d.diagonal)
            if (!v.is_one()) out.push_back(v.to_int64());
        return out;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.moduli_ == b.moduli_;
    }

private:
    std::vector<long long> moduli_;
};

// Element of a FiniteAbelianGroup, coordinate j reduced mod n_j.
struct AbelianElement {
    FiniteAbelianGroup group;
    std::vector<long long> coords;

    AbelianElement() = default;
    AbelianElement(FiniteAbelianGroup g, std::vector<long long> c)
        : group(std::move(g)), coords(std::move(c)) {
        if (coords.size() != group.factor_count())
            throw std::invalid_argument("AbelianElement: coordinate count mismatch");
        reduce();
    }

    static AbelianElement zero(const FiniteAbelianGroup& g) {
        return AbelianElement(g, std::vector<long long>(g.factor_count(), 0));
    }

    bool is_zero() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }

    void reduce() {
        for (std::size_t j = 0; j < coords.size(); ++j)
            coords[j] = mod_nonneg(coords[j], group.moduli()[j]);
    }

    friend AbelianElement operator+(const AbelianElement& a, const AbelianElement& b) {
        a.require_same_group(b);
        AbelianElement r = a;
        for (std::size_t j = 0; j < r.coords.size(); ++j)
            r.coords[j] = mod_nonneg(r.coords[j] + b.coords[j], r.group.moduli()[j]);
        return r;
    }
    friend AbelianElement operator-(const AbelianElement& a) {
        AbelianElement r = a;
        for (std::size_t j = 0; j < r.coords.size(); ++j)
            r.coords[j] = mod_nonneg(-r.coords[j], r.group.moduli()[j]);
        return r;
    }
    friend AbelianElement operator*(long long k, const AbelianElement& a) {
        AbelianElement r = a;
        for (std::size_t j = 0; j < r.coords.size(); ++j) {
            long long n = r.group.moduli()[j];
            r.coords[j] = mod_nonneg((k % n) * r.coords[j], n);
        }
        return r;
    }
    friend bool operator==(const AbelianElement& a, const AbelianElement& b) {
        return a.group == b.group && a.coords == b.coords;
    }
    friend bool operator!=(const AbelianElement& a, const AbelianElement& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(coords[j]);
        }
        return s + ")";
    }

private:
    void require_same_group(const AbelianElement& o) const {
        if (!(group == o.group))
            throw std::invalid_argument("AbelianElement: mixed groups");
    }
};

// Least k >= 1 with k*g = 0: lcm over j of n_j / gcd(n_j, c_j).
inline long long element_order(const AbelianElement& g) {
    BigInt ord(1);
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
        BigInt n(g.group.moduli()[j]);
        BigInt per = n.exact_div(gcd(n, BigInt(g.coords[j])));
        ord = lcm(ord, per);
    }
    return ord.to_int64();
}

// One block of a map Z^c -> (Z/modulus)^{rows(matrix)}.
struct ModularBlock {
    IntMatrix matrix;
    long long modulus;
};

// Cardinality of the image of x |-> (A_j x mod n_j)_j. The stabilizer
// lattice L = { x : A_j x = 0 mod n_j for all j } always has finite index
// in Z^c; the index equals the image size. L is obtained by projecting the
// integer kernel of the stacked system [A | -N] to the x coordinates.
inline BigInt image_cardinality(const std::vector<ModularBlock>& blocks) {
    std::size_t c = 0;
    bool have_cols = false;
    std::size_t total_rows = 0;
    for (const auto& b : blocks) {
        if (b.modulus < 1) throw std::invalid_argument("image_cardinality: modulus must be >= 1");
        if (!have_cols) {
            c = b.matrix.cols();
            have_cols = true;
        } else if (b.matrix.cols() != c) {
            throw std::invalid_argument("image_cardinality: column counts differ");
        }
        total_rows += b.matrix.rows();
    }
    if (!have_cols || c == 0) return BigInt(1);

    IntMatrix stacked(total_rows, c + total_rows);
    std::size_t row = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.matrix.rows(); ++i, ++row) {
            for (std::size_t j = 0; j < c; ++j) stacked.at(row, j) = b.matrix.at(i, j);
            stacked.at(row, c + row) = BigInt(-b.modulus);
        }
    }
    IntMatrix ker = kernel_basis(stacked);
    return full_lattice_index(ker.top_rows(c));
}

// Basis (as matrix columns, c x c) of { x in Z^c : A_j x = 0 mod n_j }.
inline IntMatrix congruence_kernel_basis(const std::vector<ModularBlock>& blocks, std::size_t c) {
    std::size_t total_rows = 0;
    for (const auto& b : blocks) {
        if (b.matrix.cols() != c)
            throw std::invalid_argument("congruence_kernel_basis: column counts differ");
        total_rows += b.matrix.rows();
    }
    IntMatrix stacked(total_rows, c + total_rows);
    std::size_t row = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.matrix.rows(); ++i, ++row) {
            for (std::size_t j = 0; j < c; ++j) stacked.at(row, j) = b.matrix.at(i, j);
            stacked.at(row, c + row) = BigInt(-b.modulus);
        }
    }
    IntMatrix ker = kernel_basis(stacked);
    IntMatrix basis = column_lattice_basis(ker.top_rows(c));
    if (basis.cols() != c)
        throw std::domain_error("congruence_kernel_basis: lattice not of full rank");
    return basis;
}

}  // namespace kodaira
