#include <random>
#include <set>

#include "doctest.h"
#include "kodaira/abelian.hpp"

using namespace kodaira;

namespace {

// Direct enumeration of the image of x |-> (A_j x mod n_j); x only matters
// mod lcm of the moduli.
BigInt brute_force_image_size(const std::vector<ModularBlock>& blocks) {
    std::size_t c = blocks.front().matrix.cols();
    long long period = 1;
    for (const auto& b : blocks) period = std::lcm(period, b.modulus);
    std::set<std::vector<long long>> image;
    std::vector<long long> x(c, 0);
    for (;;) {
        std::vector<long long> val;
        for (const auto& b : blocks)
            for (std::size_t i = 0; i < b.matrix.rows(); ++i) {
                long long acc = 0;
                for (std::size_t j = 0; j < c; ++j)
                    acc += b.matrix.at(i, j).to_int64() % b.modulus * x[j];
                val.push_back(mod_nonneg(acc, b.modulus));
            }
        image.insert(val);
        std::size_t k = 0;
        while (k < c && ++x[k] == period) x[k++] = 0;
        if (k == c) break;
    }
    return BigInt(image.size());
}

}  // namespace

TEST_CASE("invariant factor normalization") {
    FiniteAbelianGroup g({4, 6});
    CHECK(g.order() == BigInt(24));
    CHECK(g.invariant_factors() == std::vector<long long>{2, 12});
    CHECK(FiniteAbelianGroup({2, 3}).invariant_factors() == std::vector<long long>{6});
    CHECK(FiniteAbelianGroup(std::vector<long long>{}).order() == BigInt(1));
    CHECK(FiniteAbelianGroup(std::vector<long long>{}).invariant_factors().empty());
    CHECK_THROWS(FiniteAbelianGroup({1, 4}));
}

TEST_CASE("element_order") {
    FiniteAbelianGroup z6({6});
    CHECK(element_order(AbelianElement::zero(z6)) == 1);
    CHECK(element_order(AbelianElement(z6, {1})) == 6);
    CHECK(element_order(AbelianElement(z6, {2})) == 3);

    FiniteAbelianGroup g({4, 6});
    AbelianElement e(g, {2, 3});
    CHECK(element_order(e) == 2);

    // brute force oracle: repeated addition until zero
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<long long> mods = {2 + (long long)(rng() % 7), 2 + (long long)(rng() % 7)};
        FiniteAbelianGroup gg(mods);
        AbelianElement a(gg, {(long long)(rng() % mods[0]), (long long)(rng() % mods[1])});
        AbelianElement acc = a;
        long long k = 1;
        while (!acc.is_zero()) {
            acc = acc + a;
            ++k;
        }
        CHECK(element_order(a) == k);
    }
}

TEST_CASE("image_cardinality frozen examples") {
    // zero matrix: image is the zero subgroup
    CHECK(image_cardinality({{IntMatrix(3, 3), 5}}) == BigInt(1));

    // order-6 graph pair on a genus-2 curve: full rank mod 2 on 4 generators
    IntMatrix phi{{0, 0, 0, -1}, {0, 1, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 1}};
    IntMatrix iota = IntMatrix::identity(4) + phi;
    CHECK(image_cardinality({{iota, 2}}) == BigInt(16));

    // same matrix doubled, modulus 4: image is the kernel of reduction mod 2
    CHECK(image_cardinality({{BigInt(2) * iota, 4}}) == BigInt(16));

    // triple-graph configuration: rank 2 mod 3
    IntMatrix g1{{-1, 0, 0, -1}, {-1, 0, 1, -1}, {1, -1, -1, 0}, {1, 0, 0, 0}};
    IntMatrix g2{{-1, -1, 0, -1}, {0, 0, 1, -1}, {1, -1, -2, 2}, {1, 0, -1, 1}};
    IntMatrix sl = IntMatrix::identity(4) - g1 - g2;
    CHECK(sl == IntMatrix{{3, 1, 0, 2}, {1, 1, -2, 2}, {-2, 2, 4, -2}, {-2, 0, 1, 0}});
    CHECK(image_cardinality({{sl, 3}}) == BigInt(9));
}

TEST_CASE("image_cardinality against brute force") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> ent(-4, 4);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t c = 1 + rng() % 4;
        std::vector<ModularBlock> blocks;
        std::size_t nblocks = 1 + rng() % 2;
        for (std::size_t b = 0; b < nblocks; ++b) {
            std::size_t rows = 1 + rng() % 3;
            IntMatrix m(rows, c);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(ent(rng));
            blocks.push_back({m, (long long)(2 + rng() % 2)});  // moduli 2 or 3
        }
        CHECK(image_cardinality(blocks) == brute_force_image_size(blocks));
    }
}

TEST_CASE("image_cardinality is p^rank for prime modulus") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long long> ent(-6, 6);
    for (long long p : {2LL, 3LL}) {
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t c = 1 + rng() % 4, r = 1 + rng() % 4;
            IntMatrix m(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(ent(rng));
            // rank over F_p by Gaussian elimination
            std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) a[i][j] = mod_nonneg(m.at(i, j).to_int64(), p);
            std::size_t rank = 0;
            for (std::size_t col = 0; col < c && rank < r; ++col) {
                std::size_t piv = rank;
                while (piv < r && a[piv][col] == 0) ++piv;
                if (piv == r) continue;
                std::swap(a[piv], a[rank]);
                long long inv = 1;
                while (a[rank][col] * inv % p != 1) ++inv;
                for (std::size_t i = 0; i < r; ++i) {
                    if (i == rank || a[i][col] == 0) continue;
                    long long f = a[i][col] * inv % p;
                    for (std::size_t j = 0; j < c; ++j)
                        a[i][j] = mod_nonneg(a[i][j] - f * a[rank][j], p);
                }
                ++rank;
            }
            CHECK(image_cardinality({{m, p}}) == pow(BigInt(p), rank));
        }
    }
}

TEST_CASE("image_cardinality unimodular invariance") {
    IntMatrix a{{1, 2, 0}, {0, 3, 1}};
    IntMatrix b{{2, 0, 1}, {1, 1, 1}};
    std::vector<ModularBlock> blocks = {{a, 4}, {b, 6}};
    BigInt base = image_cardinality(blocks);

    // common right multiplication by a unimodular matrix
    IntMatrix r{{1, 1, 0}, {0, 1, 0}, {2, 0, 1}};
    CHECK(r.det().abs().is_one());
    CHECK(image_cardinality({{a * r, 4}, {b * r, 6}}) == base);

    // left multiplication by unimodular matrices changes coordinates of the
    // targets independently; the stabilizer index is unchanged
    IntMatrix l{{1, 0}, {3, 1}};
    CHECK(image_cardinality({{l * a, 4}, {l * b, 6}}) == base);
}

TEST_CASE("congruence kernel basis") {
    IntMatrix phi{{0, 0, 0, -1}, {0, 1, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 1}};
    IntMatrix iota = IntMatrix::identity(4) + phi;
    IntMatrix basis = congruence_kernel_basis({{iota, 2}}, 4);
    CHECK(basis.det().abs() == BigInt(16));
    // every basis column solves the congruence
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<BigInt> x(4);
        for (std::size_t i = 0; i < 4; ++i) x[i] = basis.at(i, j);
        auto y = iota.apply(x);
        for (const BigInt& v : y) CHECK(v.divisible_by(BigInt(2)));
    }
}
