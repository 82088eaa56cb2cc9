#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/abelian.hpp"

namespace kodaira {

// Finite group as an explicit multiplication table. Abelian groups come in
// through their moduli; a handful of small non-abelian groups are built by
// closure from generators. Associativity, identity and inverses are checked
// on construction.
class FiniteGroupModel {
    struct RawTag {};
    explicit FiniteGroupModel(RawTag) {}

public:
    FiniteGroupModel() { *this = abelian({}); }

    static FiniteGroupModel from_table(std::vector<std::vector<int>> table, int identity,
                                       std::vector<std::string> labels, std::string name = "") {
        FiniteGroupModel g{RawTag{}};
        g.table_ = std::move(table);
        g.identity_ = identity;
        g.labels_ = std::move(labels);
        g.name_ = std::move(name);
        g.finish_and_check();
        return g;
    }

    static FiniteGroupModel abelian(const std::vector<long long>& moduli) {
        std::size_t n = 1;
        for (long long m : moduli) {
            if (m < 2) throw std::invalid_argument("FiniteGroupModel: moduli must be >= 2");
            n *= static_cast<std::size_t>(m);
        }
        auto decode = [&](std::size_t id) {
            std::vector<long long> c(moduli.size());
            for (std::size_t j = 0; j < moduli.size(); ++j) {
                c[j] = static_cast<long long>(id % moduli[j]);
                id /= moduli[j];
            }
            return c;
        };
        auto encode = [&](const std::vector<long long>& c) {
            std::size_t id = 0;
            for (std::size_t j = moduli.size(); j-- > 0;)
                id = id * moduli[j] + static_cast<std::size_t>(c[j]);
            return id;
        };
        FiniteGroupModel g{RawTag{}};
        g.table_.assign(n, std::vector<int>(n));
        g.labels_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            auto ca = decode(a);
            std::string lab;
            for (std::size_t j = 0; j < ca.size(); ++j)
                lab += (j ? "," : "") + std::to_string(ca[j]);
            g.labels_[a] = moduli.size() == 1 ? lab : "(" + lab + ")";
            for (std::size_t b = 0; b < n; ++b) {
                auto cb = decode(b);
                std::vector<long long> cc(moduli.size());
                for (std::size_t j = 0; j < moduli.size(); ++j)
                    cc[j] = (ca[j] + cb[j]) % moduli[j];
                g.table_[a][b] = static_cast<int>(encode(cc));
            }
        }
        if (n == 1) g.labels_ = {"e"};
        g.identity_ = 0;
        g.abelian_moduli_ = moduli;
        g.is_abelian_descriptor_ = true;
        g.name_ = "abelian";
        g.finish_and_check();
        return g;
    }

    static FiniteGroupModel cyclic(long long n) { return abelian({n}); }

    // Dihedral group of order 2k: r^i s^j with r^k = s^2 = 1, s r s = r^-1.
    static FiniteGroupModel dihedral(long long k) {
        if (k < 2) throw std::invalid_argument("dihedral: k must be >= 2");
        std::size_t n = static_cast<std::size_t>(2 * k);
        auto id_of = [&](long long i, long long j) {
            return static_cast<int>(j * k + ((i % k) + k) % k);
        };
        FiniteGroupModel g{RawTag{}};
        g.table_.assign(n, std::vector<int>(n));
        g.labels_.resize(n);
        for (long long j = 0; j < 2; ++j)
            for (long long i = 0; i < k; ++i) {
                std::string lab = j ? "s" : "";
                if (i) lab += "r" + std::to_string(i);
                if (lab.empty()) lab = "e";
                g.labels_[id_of(i, j)] = lab;
                for (long long j2 = 0; j2 < 2; ++j2)
                    for (long long i2 = 0; i2 < k; ++i2) {
                        // (r^i s^j)(r^i2 s^j2) = r^(i + (-1)^j i2) s^(j+j2)
                        long long i3 = j ? i - i2 : i + i2;
                        g.table_[id_of(i, j)][id_of(i2, j2)] = id_of(i3, (j + j2) % 2);
                    }
            }
        g.identity_ = 0;
        g.name_ = "dihedral" + std::to_string(n);
        g.finish_and_check();
        return g;
    }

    // Quaternion group {±1, ±i, ±j, ±k}.
    static FiniteGroupModel quaternion8() {
        // encode q = s * b with s in {+,-} (0,1) and b in {1,i,j,k} (0..3)
        auto mul_base = [](int a, int b, int& sign) {
            static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
            sign = sgn[a][b];
            return prod[a][b];
        };
        std::size_t n = 8;
        FiniteGroupModel g{RawTag{}};
        g.table_.assign(n, std::vector<int>(n));
        g.labels_ = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                int s;
                int base = mul_base(a % 4, b % 4, s);
                int sign = (a / 4 + b / 4) % 2;
                if (s < 0) sign ^= 1;
                g.table_[a][b] = base + 4 * sign;
            }
        g.identity_ = 0;
        g.name_ = "quaternion8";
        g.finish_and_check();
        return g;
    }

    // SL_2 over the field with three elements, order 24, generated by closure.
    static FiniteGroupModel sl2_f3() {
        using Mat = std::array<int, 4>;  // row-major 2x2 mod 3
        auto mul = [](const Mat& a, const Mat& b) {
            Mat c;
            c[0] = (a[0] * b[0] + a[1] * b[2]) % 3;
            c[1] = (a[0] * b[1] + a[1] * b[3]) % 3;
            c[2] = (a[2] * b[0] + a[3] * b[2]) % 3;
            c[3] = (a[2] * b[1] + a[3] * b[3]) % 3;
            return c;
        };
        std::vector<Mat> elems;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        if ((a * d - b * c) % 3 == 1 || (a * d - b * c) % 3 == -2)
                            elems.push_back({a, b, c, d});
        if (elems.size() != 24) throw std::logic_error("sl2_f3: element count");
        auto index_of = [&](const Mat& m) {
            for (std::size_t i = 0; i < elems.size(); ++i)
                if (elems[i] == m) return static_cast<int>(i);
            throw std::logic_error("sl2_f3: element not found");
        };
        FiniteGroupModel g{RawTag{}};
        g.table_.assign(24, std::vector<int>(24));
        g.labels_.resize(24);
        int identity = -1;
        for (int i = 0; i < 24; ++i) {
            const Mat& m = elems[i];
            g.labels_[i] = std::to_string(m[0]) + std::to_string(m[1]) +
                           std::to_string(m[2]) + std::to_string(m[3]);
            if (m == Mat{1, 0, 0, 1}) identity = i;
            for (int j = 0; j < 24; ++j) g.table_[i][j] = index_of(mul(m, elems[j]));
        }
        g.identity_ = identity;
        g.name_ = "sl2_f3";
        g.finish_and_check();
        return g;
    }

    std::size_t size() const { return table_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    bool is_abelian() const { return abelian_; }
    bool has_abelian_descriptor() const { return is_abelian_descriptor_; }
    const std::vector<long long>& abelian_moduli() const { return abelian_moduli_; }

    long long element_order(int a) const {
        long long k = 1;
        int x = a;
        while (x != identity_) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    int element_by_label(const std::string& lab) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == lab) return static_cast<int>(i);
        throw std::invalid_argument("FiniteGroupModel: unknown element label '" + lab + "'");
    }

    bool generates(const std::vector<int>& gens) const {
        std::vector<char> seen(size(), 0);
        std::vector<int> stack = {identity_};
        seen[identity_] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int g : gens) {
                int y = mul(x, g);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        return count == size();
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::vector<long long> abelian_moduli_;
    std::string name_;
    int identity_ = 0;
    bool abelian_ = false;
    bool is_abelian_descriptor_ = false;

    void finish_and_check() {
        const std::size_t n = table_.size();
        if (n == 0) throw std::invalid_argument("FiniteGroupModel: empty table");
        if (labels_.size() != n) throw std::invalid_argument("FiniteGroupModel: label count");
        if (identity_ < 0 || static_cast<std::size_t>(identity_) >= n)
            throw std::invalid_argument("FiniteGroupModel: bad identity index");
        for (const auto& row : table_) {
            if (row.size() != n) throw std::invalid_argument("FiniteGroupModel: ragged table");
            for (int v : row)
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    throw std::invalid_argument("FiniteGroupModel: entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a)
            if (table_[identity_][a] != static_cast<int>(a) ||
                table_[a][identity_] != static_cast<int>(a))
                throw std::invalid_argument("FiniteGroupModel: identity law fails");
        inverse_.assign(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                    inverse_[a] = static_cast<int>(b);
                    break;
                }
            if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroupModel: missing inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument("FiniteGroupModel: not associative");
        abelian_ = true;
        for (std::size_t a = 0; a < n && abelian_; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] != table_[b][a]) {
                    abelian_ = false;
                    break;
                }
    }
};

}  // namespace kodaira
