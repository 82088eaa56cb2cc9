#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/group_table.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

// Orbifold surface group signature (q | r_1, ..., r_m) with presentation
// < a_1, b_1, ..., a_q, b_q, g_1, ..., g_m |
//   prod [a_i, b_i] g_1 ... g_m,  g_j^{r_j} >.
struct OrbifoldSignature {
    long long genus = 0;
    std::vector<long long> periods;

    OrbifoldSignature() = default;
    OrbifoldSignature(long long q, std::vector<long long> r) : genus(q), periods(std::move(r)) {
        if (genus < 0) throw std::invalid_argument("OrbifoldSignature: negative genus");
        for (long long p : periods)
            if (p < 2) throw std::invalid_argument("OrbifoldSignature: periods must be >= 2");
    }

    std::size_t generator_count() const { return 2 * genus + periods.size(); }

    std::string to_string() const {
        std::string s = "(" + std::to_string(genus) + " |";
        if (periods.empty()) s += " -";
        for (long long p : periods) s += " " + std::to_string(p);
        return s + ")";
    }
};

// Genus of the cover attached to a surjection with the given signature and
// exact branch orders: 2b - 2 = n (2q - 2 + sum (1 - 1/r_j)).
// Throws when the result is not a non-negative integer.
inline long long cover_genus(const OrbifoldSignature& sig, long long group_order,
                             const std::vector<long long>& orders) {
    if (group_order < 1) throw std::invalid_argument("cover_genus: group order must be >= 1");
    Rational sum(2 * sig.genus - 2);
    for (long long r : orders) {
        if (r < 1) throw std::invalid_argument("cover_genus: orders must be >= 1");
        sum += Rational(r - 1, r);
    }
    Rational two_b = Rational(group_order) * sum + Rational(2);
    Rational b = two_b / Rational(2);
    if (!b.is_integer())
        throw std::domain_error("cover_genus: non-integral genus, data inconsistent");
    BigInt bi = b.to_integer();
    if (bi.sign() < 0) throw std::domain_error("cover_genus: negative genus");
    return bi.to_int64();
}

// Images of the orbifold generators in a finite group.
struct GeneratingVector {
    OrbifoldSignature signature;
    FiniteGroupModel group;
    std::vector<int> alpha, beta, gamma;  // element ids

    long long cover_genus() const {
        return kodaira::cover_genus(signature, static_cast<long long>(group.size()),
                                    signature.periods);
    }
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        valid = false;
        failures.push_back(std::move(msg));
    }
};

// Checks the three generating-vector invariants: the long relation holds,
// each g_j image has order exactly r_j, and the images generate the group.
inline ValidationReport validate(const GeneratingVector& vec) {
    ValidationReport report;
    const auto& sig = vec.signature;
    const auto& g = vec.group;
    if (vec.alpha.size() != static_cast<std::size_t>(sig.genus) ||
        vec.beta.size() != static_cast<std::size_t>(sig.genus)) {
        report.fail("handle generator count does not match quotient genus");
        return report;
    }
    if (vec.gamma.size() != sig.periods.size()) {
        report.fail("branch generator count does not match period count");
        return report;
    }
    auto in_range = [&](int e) { return e >= 0 && static_cast<std::size_t>(e) < g.size(); };
    for (int e : vec.alpha)
        if (!in_range(e)) report.fail("alpha image out of range");
    for (int e : vec.beta)
        if (!in_range(e)) report.fail("beta image out of range");
    for (int e : vec.gamma)
        if (!in_range(e)) report.fail("gamma image out of range");
    if (!report.valid) return report;

    int prod = g.identity();
    for (std::size_t i = 0; i < vec.alpha.size(); ++i) {
        int a = vec.alpha[i], b = vec.beta[i];
        int comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        prod = g.mul(prod, comm);
    }
    for (int c : vec.gamma) prod = g.mul(prod, c);
    if (prod != g.identity()) {
        report.fail("long relation violated: product is " + g.label(prod));
    }

    for (std::size_t j = 0; j < vec.gamma.size(); ++j) {
        long long ord = g.element_order(vec.gamma[j]);
        if (ord != sig.periods[j])
            report.fail("gamma_" + std::to_string(j + 1) + " has order " + std::to_string(ord) +
                        ", period requires " + std::to_string(sig.periods[j]));
    }

    std::vector<int> all = vec.alpha;
    all.insert(all.end(), vec.beta.begin(), vec.beta.end());
    all.insert(all.end(), vec.gamma.begin(), vec.gamma.end());
    if (!g.generates(all)) report.fail("images do not generate the group");
    return report;
}

}  // namespace kodaira
