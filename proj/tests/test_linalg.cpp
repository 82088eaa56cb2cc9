#include <random>

#include "doctest.h"
#include "kodaira/int_matrix.hpp"
#include "kodaira/polynomial.hpp"
#include "kodaira/smith.hpp"

using namespace kodaira;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = BigInt(dist(rng));
    return m;
}

void check_snf_postconditions(const IntMatrix& m) {
    SmithDecomposition d = snf(m);
    CHECK(d.u * m * d.v == d.s);
    CHECK((d.u * d.u_inv).is_identity());
    CHECK((d.v * d.v_inv).is_identity());
    CHECK(d.u.det().abs().is_one());
    CHECK(d.v.det().abs().is_one());
    // diagonal, divisibility chain, trailing zeros
    for (std::size_t i = 0; i < d.s.rows(); ++i)
        for (std::size_t j = 0; j < d.s.cols(); ++j)
            if (i != j) CHECK(d.s.at(i, j).is_zero());
    for (std::size_t i = 0; i + 1 < d.diagonal.size(); ++i) {
        if (d.diagonal[i].is_zero())
            CHECK(d.diagonal[i + 1].is_zero());
        else
            CHECK(d.diagonal[i + 1].divisible_by(d.diagonal[i]));
        CHECK(d.diagonal[i].sign() >= 0);
    }
}

}  // namespace

TEST_CASE("snf frozen examples") {
    SUBCASE("identity") {
        SmithDecomposition d = snf(IntMatrix::identity(2));
        CHECK(d.diagonal == std::vector<BigInt>{BigInt(1), BigInt(1)});
        CHECK(d.u.is_identity());
        CHECK(d.v.is_identity());
    }
    SUBCASE("2x2 with invariant factors 2,4") {
        // gcd of entries is 2 and |det| = 8, so the chain is (2,4)
        SmithDecomposition d = snf(IntMatrix{{2, 4}, {6, 8}});
        CHECK(d.diagonal == std::vector<BigInt>{BigInt(2), BigInt(4)});
        CHECK(d.rank == 2);
    }
    SUBCASE("1x1 zero") {
        SmithDecomposition d = snf(IntMatrix{{0}});
        CHECK(d.diagonal == std::vector<BigInt>{BigInt(0)});
        CHECK(d.rank == 0);
    }
    SUBCASE("empty") {
        SmithDecomposition d = snf(IntMatrix());
        CHECK(d.diagonal.empty());
        CHECK(d.rank == 0);
    }
    SUBCASE("rectangular rank deficient") {
        SmithDecomposition d = snf(IntMatrix{{2, 4, 6}, {4, 8, 12}});
        CHECK(d.diagonal == std::vector<BigInt>{BigInt(2), BigInt(0)});
        CHECK(d.rank == 1);
    }
}

TEST_CASE("snf randomized postconditions") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 250; ++iter) {
        check_snf_postconditions(random_matrix(rng, dim(rng), dim(rng), 30));
    }
}

TEST_CASE("snf determinism") {
    IntMatrix m{{6, 4, -2}, {9, 0, 5}, {3, 3, 3}};
    SmithDecomposition a = snf(m), b = snf(m);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.s == b.s);
}

TEST_CASE("kernel and lattice helpers") {
    // kernel of (1 2 3) is rank 2
    IntMatrix k = kernel_basis(IntMatrix{{1, 2, 3}});
    CHECK(k.cols() == 2);
    IntMatrix prod = IntMatrix{{1, 2, 3}} * k;
    for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(0, j).is_zero());

    // the lattice spanned by (2,0),(0,3),(2,3) has index 6
    CHECK(full_lattice_index(IntMatrix{{2, 0, 2}, {0, 3, 3}}) == BigInt(6));
    IntMatrix basis = column_lattice_basis(IntMatrix{{2, 0, 2}, {0, 3, 3}});
    CHECK(basis.cols() == 2);
    CHECK(basis.det().abs() == BigInt(6));
}

TEST_CASE("det via Bareiss matches charpoly constant term") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix m = random_matrix(rng, 4, 4, 9);
        BigInt d = m.det();
        IntPolynomial p = char_poly(m);
        // det(xI - M) at x = 0 equals (-1)^n det M
        CHECK(p.coeff(0) == d);  // n = 4 even
    }
}

TEST_CASE("char_poly frozen examples") {
    // (x-1)^2
    CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});

    // order-6 action on the first homology of a genus-2 curve: (x^2-x+1)^2
    IntMatrix phi{{0, 0, 0, -1}, {0, 1, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 1}};
    CHECK(char_poly(phi) == IntPolynomial{1, -2, 3, -2, 1});

    // 3x3 blocks of the order-4 action on a genus-3 curve: (x-1)(x^2+1)
    IntMatrix b1{{0, 0, -1}, {1, 1, 1}, {0, -1, 0}};
    IntMatrix b2{{1, 0, -1}, {1, 0, 0}, {1, -1, 0}};
    CHECK(char_poly(b1) == IntPolynomial{-1, 1, -1, 1});
    CHECK(char_poly(b2) == IntPolynomial{-1, 1, -1, 1});
}

TEST_CASE("char_poly against cofactor expansion") {
    // expand det(xI - M) recursively along the first row, with polynomial
    // entries, as an independent route
    struct Cofactor {
        static IntPolynomial det(const std::vector<std::vector<IntPolynomial>>& a) {
            std::size_t n = a.size();
            if (n == 1) return a[0][0];
            IntPolynomial total;
            for (std::size_t j = 0; j < n; ++j) {
                if (a[0][j].is_zero()) continue;
                std::vector<std::vector<IntPolynomial>> minor;
                for (std::size_t i = 1; i < n; ++i) {
                    std::vector<IntPolynomial> row;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != j) row.push_back(a[i][k]);
                    minor.push_back(std::move(row));
                }
                IntPolynomial term = a[0][j] * det(minor);
                total = j % 2 == 0 ? total + term : total - term;
            }
            return total;
        }
    };
    std::mt19937_64 rng(4096);
    std::uniform_int_distribution<long long> ent(-7, 7);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix m(n, n);
        std::vector<std::vector<IntPolynomial>> xi_minus_m(n, std::vector<IntPolynomial>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = BigInt(ent(rng));
                std::vector<BigInt> coeffs = {-m.at(i, j)};
                if (i == j) coeffs.push_back(BigInt(1));
                xi_minus_m[i][j] = IntPolynomial(std::move(coeffs));
            }
        CHECK(char_poly(m) == Cofactor::det(xi_minus_m));
    }
}

TEST_CASE("char_poly of block diagonal is product of blocks") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix a = random_matrix(rng, 3, 3, 6), b = random_matrix(rng, 2, 2, 6);
        IntMatrix blk(5, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) blk.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) blk.at(3 + i, 3 + j) = b.at(i, j);
        CHECK(char_poly(blk) == char_poly(a) * char_poly(b));
    }
}

TEST_CASE("char_poly rejects non-square") {
    CHECK_THROWS(char_poly(IntMatrix{{1, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial p{-1, 0, 0, 1};  // x^3 - 1
    IntPolynomial q{-1, 1};        // x - 1
    CHECK(p.exact_div(q) == IntPolynomial{1, 1, 1});
    CHECK_THROWS(p.exact_div(IntPolynomial{1, 1}));
    CHECK(IntPolynomial::x_pow_minus_one(6).exact_div(IntPolynomial::x_pow_minus_one(3)) ==
          IntPolynomial{1, 0, 0, 1});
    CHECK((q * q).to_string() == "x^2 - 2x + 1");
    CHECK(IntPolynomial{1, -2, 3, -2, 1}.to_string() == "x^4 - 2x^3 + 3x^2 - 2x + 1");
    CHECK(q.pow(3) == IntPolynomial{-1, 3, -3, 1});
    CHECK(p.eval(BigInt(2)) == BigInt(7));
}
