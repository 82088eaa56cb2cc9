#include <random>

#include "doctest.h"
#include "kodaira/enumerate_tables.hpp"

using namespace kodaira;

namespace {

// Dumb oracle: try every tuple of group elements.
bool feasible_by_full_enumeration(const std::vector<long long>& moduli,
                                  const std::vector<long long>& r) {
    long long n = 1;
    for (long long m : moduli) n *= m;
    auto order_of = [&](long long id) {
        long long o = 1;
        for (long long m : moduli) {
            long long c = id % m;
            id /= m;
            o = std::lcm(o, m / std::gcd(m, c));
        }
        return o;
    };
    auto add = [&](long long a, long long b) {
        long long id = 0, mult = 1;
        for (long long m : moduli) {
            id += ((a % m) + (b % m)) % m * mult;
            a /= m;
            b /= m;
            mult *= m;
        }
        return id;
    };
    std::vector<long long> pick(r.size(), 0);
    for (;;) {
        bool orders_ok = true;
        long long sum = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (order_of(pick[i]) != r[i]) {
                orders_ok = false;
                break;
            }
            sum = add(sum, pick[i]);
        }
        if (orders_ok && sum == 0) return true;
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == n) pick[k++] = 0;
        if (k == pick.size()) return false;
    }
}

}  // namespace

TEST_CASE("abelian groups of an order") {
    CHECK(abelian_groups_of_order(8) ==
          std::vector<std::vector<long long>>{{2, 2, 2}, {2, 4}, {8}});
    CHECK(abelian_groups_of_order(12) == std::vector<std::vector<long long>>{{2, 2, 3}, {3, 4}});
    CHECK(abelian_groups_of_order(1) == std::vector<std::vector<long long>>{{}});
    CHECK(abelian_group_name({2, 4}) == "Z/2 x Z/4");
}

TEST_CASE("abelian_feasible spot values") {
    CHECK(abelian_feasible(2, {2, 2}).kind == AbelianFeasibility::all_groups);

    auto f4 = abelian_feasible(4, {2, 2, 2});
    CHECK(f4.kind == AbelianFeasibility::subset);
    CHECK(f4.annotation() == "Z/2 x Z/2");

    auto f8 = abelian_feasible(8, {2, 2, 2});
    CHECK(f8.kind == AbelianFeasibility::subset);
    CHECK(f8.annotation() == "non-cyclic");

    CHECK(abelian_feasible(2, {2, 2, 2}).kind == AbelianFeasibility::infeasible);
    // order 5 never appears in a group of order 8
    CHECK(abelian_feasible(8, {5, 5}).kind == AbelianFeasibility::infeasible);
}

TEST_CASE("abelian_feasible against full enumeration") {
    std::mt19937_64 rng(808);
    for (long long d = 2; d <= 16; ++d) {
        auto groups = abelian_groups_of_order(d);
        for (int iter = 0; iter < 30; ++iter) {
            std::size_t m = 1 + rng() % 4;
            std::vector<long long> divs = divisors_at_least_two(d);
            std::vector<long long> r;
            for (std::size_t i = 0; i < m; ++i) r.push_back(divs[rng() % divs.size()]);
            std::sort(r.begin(), r.end());
            auto res = abelian_feasible(d, r);
            for (const auto& g : groups) {
                bool expect = feasible_by_full_enumeration(g, r);
                bool got = std::find(res.qualifying.begin(), res.qualifying.end(), g) !=
                           res.qualifying.end();
                CHECK(expect == got);
            }
        }
    }
}

TEST_CASE("nonabelian_order and the single-puncture rule") {
    CHECK(nonabelian_order(8));
    CHECK(nonabelian_order(21));
    CHECK_FALSE(nonabelian_order(9));
    CHECK_FALSE(nonabelian_order(15));
    CHECK_FALSE(nonabelian_order(25));
    CHECK_THROWS(nonabelian_order(33));
    CHECK_THROWS(nonabelian_order(1));

    CHECK(m1_commutator_feasible(8, 2));
    CHECK_FALSE(m1_commutator_feasible(6, 2));
    CHECK(m1_commutator_feasible(6, 3));
    CHECK_FALSE(m1_commutator_feasible(4, 2));
}

TEST_CASE("max_disjoint_graphs") {
    CHECK(max_disjoint_graphs(2) == 3);
    CHECK(max_disjoint_graphs(3) == 6);
    CHECK_FALSE(max_disjoint_graphs(5).has_value());
    CHECK_THROWS(max_disjoint_graphs(1));
}

TEST_CASE("graph-type table sigma <= 16") {
    auto rows = enumerate_graph_rows(16);
    REQUIRE(rows.size() == 32);

    // per-block counts 3 / 6 / 11 / 12
    std::map<long long, int> per_sigma;
    for (const auto& r : rows) per_sigma[r.sigma]++;
    CHECK(per_sigma[4] == 3);
    CHECK(per_sigma[8] == 6);
    CHECK(per_sigma[12] == 11);
    CHECK(per_sigma[16] == 12);

    auto expect = [](long long sigma, long long b, long long d, std::vector<long long> r,
                     std::string annotation) {
        GraphTypeRow row;
        row.sigma = sigma;
        row.b = b;
        row.order = d;
        row.r = std::move(r);
        row.annotation = std::move(annotation);
        return row;
    };
    std::vector<GraphTypeRow> table = {
        expect(4, 2, 8, {2}, "non-abelian"),
        expect(4, 3, 2, {2, 2}, ""),
        expect(4, 2, 4, {2, 2}, ""),
        expect(8, 3, 8, {2}, "non-abelian"),
        expect(8, 2, 16, {2}, "non-abelian"),
        expect(8, 5, 2, {2, 2}, ""),
        expect(8, 3, 4, {2, 2}, ""),
        expect(8, 2, 8, {2, 2}, ""),
        expect(8, 3, 2, {2, 2, 2, 2}, ""),
        expect(12, 4, 8, {2}, "non-abelian"),
        expect(12, 3, 12, {2}, "non-abelian"),
        expect(12, 2, 24, {2}, "non-abelian"),
        expect(12, 7, 2, {2, 2}, ""),
        expect(12, 4, 4, {2, 2}, ""),
        expect(12, 3, 6, {2, 2}, ""),
        expect(12, 2, 12, {2, 2}, ""),
        expect(12, 3, 4, {2, 2, 2}, "Z/2 x Z/2"),
        expect(12, 2, 8, {2, 2, 2}, "non-cyclic"),
        expect(12, 4, 2, {2, 2, 2, 2}, ""),
        expect(12, 3, 2, {2, 2, 2, 2, 2, 2}, ""),
        expect(16, 5, 8, {2}, "non-abelian"),
        expect(16, 3, 16, {2}, "non-abelian"),
        expect(16, 2, 32, {2}, "non-abelian"),
        expect(16, 2, 27, {3}, "non-abelian"),
        expect(16, 9, 2, {2, 2}, ""),
        expect(16, 5, 4, {2, 2}, ""),
        expect(16, 3, 8, {2, 2}, ""),
        expect(16, 2, 16, {2, 2}, ""),
        expect(16, 4, 3, {3, 3, 3}, ""),
        expect(16, 2, 9, {3, 3, 3}, ""),
        expect(16, 5, 2, {2, 2, 2, 2}, ""),
        expect(16, 3, 4, {2, 2, 2, 2}, ""),
    };
    REQUIRE(table.size() == 32);
    for (std::size_t i = 0; i < 32; ++i) {
        CAPTURE(i);
        CHECK(rows[i] == table[i]);
    }

    // the signature formula holds exactly on every emitted row
    for (const auto& r : rows) {
        Rational sum(0);
        for (long long rr : r.r) sum += Rational(rr * rr - 1, rr * rr);
        CHECK(Rational(2 * (r.b - 1) * r.order, 3) * sum == Rational(r.sigma));
        VirtualFibration vf;
        vf.b = r.b;
        vf.f = 2;
        vf.group_order = r.order;
        for (long long rr : r.r) vf.components.push_back({1, 1, rr, {}});
        CHECK(virtual_invariants(vf).sigma == Rational(r.sigma));
    }
}

TEST_CASE("graph-type table edge cases and monotonicity") {
    CHECK(enumerate_graph_rows(0).empty());
    auto four = enumerate_graph_rows(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0].order == 8);
    CHECK(four[1].b == 3);
    CHECK(four[2].order == 4);
    CHECK_THROWS(enumerate_graph_rows(10));

    auto r16 = enumerate_graph_rows(16), r20 = enumerate_graph_rows(20);
    for (const auto& row : r16)
        CHECK(std::find(r20.begin(), r20.end(), row) != r20.end());
}

TEST_CASE("signature-4 table") {
    auto rows = enumerate_sig4_rows();
    REQUIRE(rows.size() == 16);

    auto expect = [](long long b, long long f, long long order,
                     std::vector<SigFourComponent> comps) {
        SigFourRow r;
        r.b = b;
        r.f = f;
        r.order = order;
        std::sort(comps.begin(), comps.end());
        r.components = std::move(comps);
        return r;
    };
    std::vector<SigFourRow> table = {
        expect(2, 2, 8, {{2, 1, 1, 2}}),                          // G1
        expect(2, 2, 4, {{2, 1, 1, 2}, {2, 1, 1, 2}}),            // G2
        expect(3, 3, 2, {{3, 1, 1, 2}, {3, 1, 1, 2}}),            // G3
        expect(3, 2, 2, {{3, 1, 2, 2}, {3, 1, 2, 2}}),            // G4
        expect(2, 2, 2, {{5, 4, 4, 2}}),                          // C1
        expect(3, 2, 2, {{5, 2, 4, 2}}),                          // C2
        expect(2, 3, 2, {{5, 4, 2, 2}}),                          // C3
        expect(3, 3, 2, {{5, 2, 2, 2}}),                          // C4
        expect(2, 5, 2, {{5, 4, 1, 2}}),                          // C5
        expect(3, 5, 2, {{5, 2, 1, 2}}),                          // C6
        expect(2, 2, 4, {{3, 2, 2, 2}}),                          // C7
        expect(2, 3, 4, {{3, 2, 1, 2}}),                          // C8
        expect(2, 2, 2, {{3, 2, 2, 2}, {3, 2, 2, 2}}),            // C9
        expect(2, 2, 2, {{2, 1, 1, 2}, {4, 3, 3, 2}}),            // C10
        expect(2, 3, 2, {{3, 2, 1, 2}, {3, 2, 1, 2}}),            // C11
        expect(2, 2, 2, {{2, 1, 1, 2}, {2, 1, 1, 2}, {3, 2, 2, 2}}),  // C12
    };
    for (const auto& want : table) {
        CAPTURE(want.b);
        CHECK(std::find(rows.begin(), rows.end(), want) != rows.end());
    }

    // every row is a valid double etale fibration with both signature
    // formulas agreeing at 4, and the component genus identity holds
    for (const auto& r : rows) {
        VirtualFibration vf;
        vf.b = r.b;
        vf.f = r.f;
        vf.group_order = r.order;
        vf.etale_both_ways = true;
        for (const auto& c : r.components) {
            CHECK(c.g_d == c.d * (r.b - 1) + 1);
            CHECK(c.g_d == c.e * (r.f - 1) + 1);
            vf.components.push_back({c.d, c.e, c.r, {}});
        }
        CHECK(double_etale_signature(vf) == Rational(4));
        CHECK(virtual_invariants(vf).sigma == Rational(4));
    }
}
