#include <random>

#include "doctest.h"
#include "kodaira/monodromy.hpp"

using namespace kodaira;

namespace {

MonodromyProblem free_involution_b3() {
    // two disjoint automorphism graphs on a genus-3 curve, double cover
    // branched at both punctures; the involution is a rotation permuting
    // two handles and fixing the middle one
    MonodromyProblem p;
    p.b = 3;
    p.f = 3;
    p.group = FiniteAbelianGroup({2});
    AbelianElement one(p.group, {1});
    IntMatrix sigma{{1, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 1},
                    {0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0}};
    p.components.push_back({IntMatrix::identity(6), one, 1, 1, 2});
    p.components.push_back({sigma, one, 1, 1, 2});
    return p;
}

MonodromyProblem random_problem(std::mt19937_64& rng) {
    MonodromyProblem p;
    p.b = 2;
    p.f = 2;
    std::vector<long long> moduli;
    moduli.push_back(2 + (long long)(rng() % 3));  // 2..4
    if (rng() % 2) moduli.push_back(2);
    p.group = FiniteAbelianGroup(moduli);
    std::size_t m = 1 + rng() % 3;
    std::uniform_int_distribution<long long> ent(-2, 2);
    for (std::size_t i = 0; i < m; ++i) {
        ComponentAction c;
        c.transfer_push = IntMatrix(4, 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) c.transfer_push.at(a, b) = BigInt(ent(rng));
        std::vector<long long> w(moduli.size());
        bool zero = true;
        while (zero) {
            for (std::size_t j = 0; j < moduli.size(); ++j) {
                w[j] = (long long)(rng() % moduli[j]);
                if (w[j]) zero = false;
            }
        }
        c.weight = AbelianElement(p.group, w);
        c.e = 1 + (long long)(rng() % 3);
        c.d = 1 + (long long)(rng() % 3);
        c.r = element_order(c.weight);
        p.components.push_back(std::move(c));
    }
    return p;
}

}  // namespace

TEST_CASE("obstruction") {
    FiniteAbelianGroup z2({2}), z3({3});
    MonodromyProblem p;
    p.b = p.f = 2;
    p.group = z2;
    p.components.push_back({IntMatrix::identity(4), AbelianElement(z2, {1}), 1, 1, 2});
    p.components.push_back({IntMatrix::identity(4), AbelianElement(z2, {1}), 1, 1, 2});
    CHECK(obstruction(p).is_zero());

    MonodromyProblem q;
    q.b = q.f = 2;
    q.group = z3;
    for (int i = 0; i < 3; ++i)
        q.components.push_back({IntMatrix::identity(4), AbelianElement(z3, {1}), 1, 1, 3});
    CHECK(obstruction(q).is_zero());

    MonodromyProblem single;
    single.b = single.f = 2;
    single.group = z2;
    single.components.push_back({IntMatrix::identity(4), AbelianElement(z2, {1}), 1, 1, 2});
    AbelianElement o = obstruction(single);
    CHECK(o == AbelianElement(z2, {1}));
    CHECK(element_order(o) == 2);
}

TEST_CASE("stabilizer index and realization for the free involution") {
    MonodromyProblem p = free_involution_b3();
    CHECK(obstruction(p).is_zero());
    CHECK(stabilizer_index(p) == BigInt(4));
    CHECK(minimal_pullback_degree(p) == BigInt(4));

    RealizationReport rep = realize(p);
    CHECK(rep.minimal_degree == BigInt(4));
    CHECK(rep.realized.g_b1 == BigInt(9));
    CHECK(rep.realized.g_f1 == BigInt(6));
    CHECK(rep.realized.g_b2 == BigInt(3));
    CHECK(rep.realized.g_f2 == BigInt(21));
    CHECK(rep.realized.c2 == Rational(160));
    CHECK(rep.realized.c1_sq == Rational(368));
    CHECK(rep.realized.sigma == Rational(16));
    CHECK(rep.realized.slope == Rational(23, 10));
}

TEST_CASE("minimal degree with trivial monodromy is the obstruction order") {
    FiniteAbelianGroup z3({3});
    MonodromyProblem p;
    p.b = p.f = 2;
    p.group = z3;
    p.components.push_back({IntMatrix(4, 4), AbelianElement(z3, {1}), 1, 1, 3});
    CHECK(stabilizer_index(p) == BigInt(1));
    CHECK(minimal_pullback_degree(p) == BigInt(3));
}

TEST_CASE("apply_monodromy basics") {
    MonodromyProblem p = free_involution_b3();
    RelativeClass theta;
    theta.free_part.assign(6, AbelianElement::zero(p.group));
    theta.boundary = {p.components[0].weight, p.components[1].weight};

    // boundary-free class is monodromy invariant
    RelativeClass flat = theta;
    flat.boundary = {AbelianElement::zero(p.group), AbelianElement::zero(p.group)};
    std::vector<BigInt> alpha = {BigInt(1), BigInt(0), BigInt(2), BigInt(-1), BigInt(0), BigInt(3)};
    CHECK(apply_monodromy(p, flat, alpha) == flat);

    // alpha in the kernel of iota fixes theta: (1,1,0,0,0,0) maps to
    // (2,2,0,0,0,0) = 0 mod 2
    std::vector<BigInt> in_kernel = {BigInt(1), BigInt(1), BigInt(0),
                                     BigInt(0), BigInt(0), BigInt(0)};
    CHECK(apply_monodromy(p, theta, in_kernel) == theta);

    // applying alpha then -alpha is the identity
    std::vector<BigInt> neg_alpha;
    for (const BigInt& v : alpha) neg_alpha.push_back(-v);
    CHECK(apply_monodromy(p, apply_monodromy(p, theta, alpha), neg_alpha) == theta);

    // mismatched boundary weight is rejected
    RelativeClass bad = theta;
    bad.boundary[0] = AbelianElement(p.group, {1});
    CHECK_NOTHROW(apply_monodromy(p, bad, alpha));  // {1} equals the weight
    MonodromyProblem q = p;
    q.group = FiniteAbelianGroup({2, 2});
    CHECK_THROWS(apply_monodromy(q, theta, alpha));
}

TEST_CASE("fixed set of the monodromy action is the kernel of iota") {
    std::mt19937_64 rng(616);
    for (int iter = 0; iter < 40; ++iter) {
        MonodromyProblem p = random_problem(rng);
        auto blocks = monodromy_blocks(p);
        long long period = 1;
        for (long long n : p.group.moduli()) period = std::lcm(period, n);

        RelativeClass theta;
        theta.free_part.assign(4, AbelianElement::zero(p.group));
        for (const auto& c : p.components) theta.boundary.push_back(c.weight);

        long long fixed = 0, total = 0;
        std::vector<long long> a(4, 0);
        for (;;) {
            std::vector<BigInt> alpha;
            for (long long v : a) alpha.emplace_back(v);
            bool is_fixed = apply_monodromy(p, theta, alpha) == theta;
            bool in_kernel = true;
            for (const auto& blk : blocks) {
                for (const BigInt& v : blk.matrix.apply(alpha))
                    if (!v.divisible_by(BigInt(blk.modulus))) {
                        in_kernel = false;
                        break;
                    }
                if (!in_kernel) break;
            }
            CHECK(is_fixed == in_kernel);
            if (is_fixed) ++fixed;
            ++total;
            std::size_t k = 0;
            while (k < 4 && ++a[k] == period) a[k++] = 0;
            if (k == 4) break;
        }
        CHECK(BigInt(total) == BigInt(fixed) * stabilizer_index(p));
    }
}

TEST_CASE("realization is idempotent and the minimal degree is bounded") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        MonodromyProblem p = random_problem(rng);
        BigInt deg = minimal_pullback_degree(p);
        // the image of iota sits inside H_1(F; G), so the degree divides |G|^2f
        CHECK(pow(p.group.order(), 2 * p.f).divisible_by(deg));
        MonodromyProblem pulled = problem_pullback(p, deg);
        CHECK(obstruction(pulled).is_zero());
        CHECK(stabilizer_index(pulled) == BigInt(1));
    }
    MonodromyProblem p = free_involution_b3();
    MonodromyProblem pulled = problem_pullback(p, BigInt(4));
    CHECK(obstruction(pulled).is_zero());
    CHECK(stabilizer_index(pulled) == BigInt(1));
    CHECK_THROWS(problem_pullback(p, BigInt(3)));  // not a multiple of the index
}

TEST_CASE("stabilizer index is invariant under unimodular basis changes") {
    MonodromyProblem p = free_involution_b3();
    BigInt base = stabilizer_index(p);
    IntMatrix right{{1, 0, 0, 0, 2, 0},
                    {0, 1, 0, 0, 0, 0},
                    {1, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 3},
                    {0, 0, 0, 0, 1, 0},
                    {0, -1, 0, 0, 0, 1}};
    IntMatrix left{{1, 0, 0, 0, 0, 0},
                   {4, 1, 0, 0, 0, 0},
                   {0, 0, 1, 0, 0, 2},
                   {0, 0, 0, 1, 0, 0},
                   {0, 1, 0, 0, 1, 0},
                   {0, 0, 0, 0, 0, 1}};
    REQUIRE(right.det().abs().is_one());
    REQUIRE(left.det().abs().is_one());
    MonodromyProblem q = p;
    for (auto& c : q.components) c.transfer_push = left * c.transfer_push * right;
    CHECK(stabilizer_index(q) == base);
}
