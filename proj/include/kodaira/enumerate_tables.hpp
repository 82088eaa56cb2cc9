#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kodaira/fibration.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

inline std::vector<long long> divisors_at_least_two(long long d) {
    std::vector<long long> out;
    for (long long k = 2; k <= d; ++k)
        if (d % k == 0) out.push_back(k);
    return out;
}

// All abelian groups of order d, each as the sorted list of prime-power
// cyclic factors (d = 8 gives {8}, {2,4}, {2,2,2}).
inline std::vector<std::vector<long long>> abelian_groups_of_order(long long d) {
    if (d < 1) throw std::invalid_argument("abelian_groups_of_order: order must be >= 1");
    std::vector<std::pair<long long, long long>> factorization;  // (p, exponent)
    long long rest = d;
    for (long long p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            long long e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factorization.push_back({p, e});
        }
    if (rest > 1) factorization.push_back({rest, 1});

    auto partitions = [](long long n) {
        std::vector<std::vector<long long>> out;
        std::vector<long long> cur;
        auto rec = [&](auto&& self, long long left, long long max) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (long long k = std::min(left, max); k >= 1; --k) {
                cur.push_back(k);
                self(self, left - k, k);
                cur.pop_back();
            }
        };
        rec(rec, n, n);
        return out;
    };

    std::vector<std::vector<long long>> groups = {{}};
    for (auto [p, e] : factorization) {
        std::vector<std::vector<long long>> next;
        for (const auto& part : partitions(e))
            for (const auto& base : groups) {
                std::vector<long long> g = base;
                for (long long lambda : part) {
                    long long q = 1;
                    for (long long i = 0; i < lambda; ++i) q *= p;
                    g.push_back(q);
                }
                next.push_back(std::move(g));
            }
        groups = std::move(next);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    return groups;
}

inline std::string abelian_group_name(const std::vector<long long>& prime_powers) {
    if (prime_powers.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < prime_powers.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(prime_powers[i]);
    }
    return s;
}

enum class AbelianFeasibility { infeasible, all_groups, subset };

struct AbelianFeasibleResult {
    AbelianFeasibility kind = AbelianFeasibility::infeasible;
    std::vector<std::vector<long long>> qualifying;  // prime-power form
    std::vector<std::vector<long long>> all_groups;

    // "", a single group name, "non-cyclic", or the explicit group list
    std::string annotation() const {
        if (kind != AbelianFeasibility::subset) return "";
        if (qualifying.size() == 1) return abelian_group_name(qualifying[0]);
        std::vector<std::vector<long long>> excluded;
        for (const auto& g : all_groups)
            if (std::find(qualifying.begin(), qualifying.end(), g) == qualifying.end())
                excluded.push_back(g);
        if (excluded.size() == 1 && excluded[0].size() == 1) return "non-cyclic";
        std::string s;
        for (std::size_t i = 0; i < qualifying.size(); ++i) {
            if (i) s += ", ";
            s += abelian_group_name(qualifying[i]);
        }
        return s;
    }
};

// Does an abelian group of order d contain elements of orders exactly
// r_1, ..., r_m summing to zero? Checked per group by a reachable-sum sweep
// over the positions.
inline AbelianFeasibleResult abelian_feasible(long long d, std::vector<long long> r) {
    if (d < 2) throw std::invalid_argument("abelian_feasible: order must be >= 2");
    if (r.empty()) throw std::invalid_argument("abelian_feasible: no ramification orders");
    AbelianFeasibleResult res;
    res.all_groups = abelian_groups_of_order(d);
    for (const auto& moduli : res.all_groups) {
        std::size_t n = static_cast<std::size_t>(d);
        auto order_of = [&](std::size_t id) {
            long long o = 1;
            for (long long m : moduli) {
                long long c = static_cast<long long>(id) % m;
                id /= static_cast<std::size_t>(m);
                o = std::lcm(o, m / std::gcd(m, c));
            }
            return o;
        };
        auto add = [&](std::size_t a, std::size_t b) {
            std::size_t id = 0, mult = 1;
            for (long long m : moduli) {
                long long ca = static_cast<long long>(a) % m, cb = static_cast<long long>(b) % m;
                a /= static_cast<std::size_t>(m);
                b /= static_cast<std::size_t>(m);
                id += static_cast<std::size_t>((ca + cb) % m) * mult;
                mult *= static_cast<std::size_t>(m);
            }
            return id;
        };
        std::vector<char> reachable(n, 0);
        reachable[0] = 1;
        for (long long target : r) {
            std::vector<std::size_t> candidates;
            for (std::size_t id = 0; id < n; ++id)
                if (order_of(id) == target) candidates.push_back(id);
            std::vector<char> next(n, 0);
            for (std::size_t s = 0; s < n; ++s) {
                if (!reachable[s]) continue;
                for (std::size_t c : candidates) next[add(s, c)] = 1;
            }
            reachable = std::move(next);
        }
        if (reachable[0]) res.qualifying.push_back(moduli);
    }
    if (res.qualifying.empty())
        res.kind = AbelianFeasibility::infeasible;
    else if (res.qualifying.size() == res.all_groups.size())
        res.kind = AbelianFeasibility::all_groups;
    else
        res.kind = AbelianFeasibility::subset;
    return res;
}

// Orders up to 32 admitting a non-abelian group. The excluded ones are
// primes, squares of primes, and 15 (squarefree with no prime q | p - 1).
inline bool nonabelian_order(long long d) {
    if (d < 2 || d > 32) throw std::invalid_argument("nonabelian_order: supported range is 2..32");
    static const std::set<long long> table = {6,  8,  10, 12, 14, 16, 18, 20,
                                              21, 22, 24, 26, 27, 28, 30, 32};
    return table.count(d) > 0;
}

// Single-puncture case: the puncture loop is a product of commutators, so
// its image must be an element of order r inside the commutator subgroup.
// Order 6 is excluded for r = 2: the only non-abelian group is S_3, whose
// commutator subgroup A_3 has no order-2 element.
inline bool m1_commutator_feasible(long long d, long long r) {
    if (d < 2 || d > 32)
        throw std::invalid_argument("m1_commutator_feasible: supported range is 2..32");
    if (!nonabelian_order(d)) return false;
    if (d == 6 && r == 2) return false;
    return true;
}

// Known bounds on the number of pairwise disjoint automorphism graphs.
inline std::optional<long long> max_disjoint_graphs(long long b) {
    if (b < 2) throw std::invalid_argument("max_disjoint_graphs: genus must be >= 2");
    if (b == 2) return 3;
    if (b == 3) return 6;
    return std::nullopt;
}

struct GraphTypeRow {
    long long sigma = 0;
    long long b = 2;
    long long order = 2;                // |G|
    std::vector<long long> r;           // sorted descending
    std::string annotation;             // "", "non-abelian", "non-cyclic", group list
    bool unbounded_graph_count = false; // b >= 4 with many graphs: no bound known
    bool order_beyond_table = false;    // |G| > 32: existence tables do not apply

    auto key() const { return std::tie(sigma, b, order, r); }
    friend bool operator==(const GraphTypeRow& a, const GraphTypeRow& b) {
        return a.key() == b.key() && a.annotation == b.annotation;
    }
};

namespace detail {

// rows for one (b, d) search branch
inline void graph_rows_branch(long long sigma_max, long long b, long long d,
                              std::vector<GraphTypeRow>& rows) {
    const long long budget = 2 * sigma_max;
    const std::vector<long long> orders = divisors_at_least_two(d);
    if (orders.empty()) return;
    const long long m_max = budget / ((b - 1) * d);
    std::vector<long long> multiset;
    auto rec = [&](auto&& self, std::size_t from, long long m_left) -> void {
        if (!multiset.empty()) {
            Rational sum(0);
            for (long long rr : multiset) sum += Rational(rr * rr - 1, rr * rr);
            Rational sigma = Rational(2 * (b - 1) * d, 3) * sum;
            if (sigma.is_integer()) {
                BigInt s = sigma.to_integer();
                if (s.sign() > 0 && s <= BigInt(sigma_max) &&
                    s.divisible_by(BigInt(4))) {
                    long long sig = s.to_int64();
                    long long m = static_cast<long long>(multiset.size());
                    auto bound = max_disjoint_graphs(b);
                    bool graph_ok = !bound || m <= *bound;
                    if (graph_ok) {
                        std::string annotation;
                        bool keep = false, beyond = false;
                        if (m == 1) {
                            // a one-puncture value is a product of
                            // commutators, so the group is non-abelian
                            if (d > 32) {
                                keep = beyond = true;
                                annotation = "non-abelian";
                            } else if (m1_commutator_feasible(d, multiset[0])) {
                                keep = true;
                                annotation = "non-abelian";
                            }
                        } else {
                            AbelianFeasibleResult fz = abelian_feasible(d, multiset);
                            if (fz.kind == AbelianFeasibility::all_groups) {
                                keep = true;
                            } else if (fz.kind == AbelianFeasibility::subset) {
                                keep = true;
                                annotation = fz.annotation();
                            } else if (d > 32) {
                                keep = beyond = true;
                                annotation = "non-abelian";
                            } else if (nonabelian_order(d)) {
                                keep = true;
                                annotation = "non-abelian";
                            }
                        }
                        if (keep) {
                            GraphTypeRow row;
                            row.sigma = sig;
                            row.b = b;
                            row.order = d;
                            row.r = multiset;
                            std::sort(row.r.rbegin(), row.r.rend());
                            row.annotation = std::move(annotation);
                            row.unbounded_graph_count = !bound && m >= 4;
                            row.order_beyond_table = beyond;
                            rows.push_back(std::move(row));
                        }
                    }
                }
            }
        }
        if (m_left == 0) return;
        for (std::size_t i = from; i < orders.size(); ++i) {
            multiset.push_back(orders[i]);
            self(self, i, m_left - 1);
            multiset.pop_back();
        }
    };
    rec(rec, 0, m_max);
}

}  // namespace detail

// Graph-type rows with signature divisible by 4 and at most sigma_max:
// sigma = (2/3)(b-1) d sum (r_i^2 - 1)/r_i^2, the search bounded by
// (b-1) d m <= 2 sigma_max since each summand is at least 3/4.
// Branches over (b, d) are independent; jobs > 1 splits them across
// threads and the sorted result is identical for any thread count.
inline std::vector<GraphTypeRow> enumerate_graph_rows(long long sigma_max = 16, int jobs = 1) {
    if (sigma_max < 0 || sigma_max % 4 != 0)
        throw std::invalid_argument("enumerate_graph_rows: sigma_max must be a multiple of 4");
    const long long budget = 2 * sigma_max;
    std::vector<std::pair<long long, long long>> branches;
    for (long long b = 2; (b - 1) * 2 <= budget; ++b)
        for (long long d = 2; (b - 1) * d <= budget; ++d) branches.push_back({b, d});

    std::vector<GraphTypeRow> rows;
    if (jobs <= 1) {
        for (auto [b, d] : branches) detail::graph_rows_branch(sigma_max, b, d, rows);
    } else {
        std::vector<std::vector<GraphTypeRow>> partial(branches.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= branches.size()) return;
                detail::graph_rows_branch(sigma_max, branches[i].first, branches[i].second,
                                          partial[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& part : partial)
            for (auto& row : part) rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const GraphTypeRow& x, const GraphTypeRow& y) {
        auto kx = std::make_tuple(x.sigma, static_cast<long long>(x.r.size()), -x.b, -x.order);
        auto ky = std::make_tuple(y.sigma, static_cast<long long>(y.r.size()), -y.b, -y.order);
        if (kx != ky) return kx < ky;
        return x.r < y.r;
    });
    return rows;
}

struct SigFourComponent {
    long long g_d = 2;
    long long d = 1;
    long long e = 1;
    long long r = 2;

    auto key() const { return std::tie(g_d, d, e, r); }
    friend bool operator<(const SigFourComponent& a, const SigFourComponent& b) {
        return a.key() < b.key();
    }
    friend bool operator==(const SigFourComponent& a, const SigFourComponent& b) {
        return a.key() == b.key();
    }
};

struct SigFourRow {
    std::string label;  // attached from the golden table when known
    long long b = 2;
    long long f = 2;
    long long order = 2;
    std::vector<SigFourComponent> components;  // sorted

    auto key() const { return std::tie(b, f, order, components); }
    friend bool operator==(const SigFourRow& a, const SigFourRow& b) { return a.key() == b.key(); }
    friend bool operator<(const SigFourRow& a, const SigFourRow& b) { return a.key() < b.key(); }
};

// Double etale rows of virtual signature 4. Search bounds 2 <= |G| <= 8,
// 2 <= f <= 5, 1 <= m <= 4, 1 <= e_i <= 4; the exact signature condition
// forces r_i = 2 everywhere. For each component the base genus must satisfy
// d_i (b-1) = e_i (f-1); when only abelian groups of order |G| exist, a
// realizable cover needs total degree over B at least 2.
inline std::vector<SigFourRow> enumerate_sig4_rows() {
    std::set<SigFourRow> out;
    for (long long order = 2; order <= 8; ++order)
        for (long long f = 2; f <= 5; ++f) {
            std::vector<std::vector<std::pair<long long, long long>>> combos;  // (e, r) lists
            std::vector<std::pair<long long, long long>> cur;
            const Rational zero(0), one(1), four(4);
            std::vector<std::vector<Rational>> term(5, std::vector<Rational>(33));
            for (long long e = 1; e <= 4; ++e)
                for (long long r = 2; r <= 32; ++r)
                    term[e][r] = Rational(2 * order * (f - 1) * e * (r * r - 1), 3 * r * r);
            // each summand is at least 1 and grows with both e and r, so a
            // remaining budget strictly between 0 and 1 is a dead end
            auto rec = [&](auto&& self, const Rational& budget, long long m_left) -> void {
                if (!cur.empty() && budget == zero) combos.push_back(cur);
                if (m_left == 0) return;
                long long e_from = cur.empty() ? 1 : cur.back().first;
                for (long long e = e_from; e <= 4; ++e) {
                    if (term[e][2] > budget) break;
                    long long r_from = (!cur.empty() && cur.back().first == e) ? cur.back().second : 2;
                    for (long long r = r_from; r <= 32; ++r) {
                        Rational rest = budget - term[e][r];
                        if (rest < zero) break;
                        if (zero < rest && rest < one) continue;
                        cur.push_back({e, r});
                        self(self, rest, m_left - 1);
                        cur.pop_back();
                    }
                }
            };
            rec(rec, four, 4);
            for (const auto& combo : combos) {
                long long max_b = 2;
                for (auto [e, r] : combo) max_b = std::max(max_b, e * (f - 1) + 1);
                for (long long b = 2; b <= max_b; ++b) {
                    bool ok = true;
                    std::vector<SigFourComponent> comps;
                    long long total_d = 0, graphs = 0;
                    for (auto [e, r] : combo) {
                        if ((e * (f - 1)) % (b - 1) != 0) {
                            ok = false;
                            break;
                        }
                        SigFourComponent c;
                        c.e = e;
                        c.r = r;
                        c.d = e * (f - 1) / (b - 1);
                        c.g_d = c.d * (b - 1) + 1;
                        total_d += c.d;
                        if (c.d == 1) ++graphs;
                        comps.push_back(c);
                    }
                    if (!ok) continue;
                    if (!nonabelian_order(order) && total_d < 2) continue;
                    auto bound = max_disjoint_graphs(b);
                    if (bound && graphs > *bound) continue;
                    SigFourRow row;
                    row.b = b;
                    row.f = f;
                    row.order = order;
                    std::sort(comps.begin(), comps.end());
                    row.components = std::move(comps);
                    out.insert(std::move(row));
                }
            }
        }
    return std::vector<SigFourRow>(out.begin(), out.end());
}

}  // namespace kodaira
