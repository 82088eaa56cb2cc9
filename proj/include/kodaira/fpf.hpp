#pragma once

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kodaira/rational.hpp"

namespace kodaira {

// Ramification type of a fixed-point-free automorphism: order d, quotient
// genus q, branch orders (empty = unramified). Every branch order properly
// divides d, since the point stabilizers must avoid the generator.
struct FpfType {
    long long b = 2;                 // genus of the curve
    long long d = 2;                 // order of the automorphism
    long long q = 0;                 // genus of the quotient
    std::vector<long long> orders;   // sorted ascending

    auto key() const { return std::tie(b, d, q, orders); }
    friend bool operator<(const FpfType& x, const FpfType& y) { return x.key() < y.key(); }
    friend bool operator==(const FpfType& x, const FpfType& y) { return x.key() == y.key(); }

    std::string to_string() const {
        std::string s = "genus " + std::to_string(b) + ", order " + std::to_string(d) + ", (" +
                        std::to_string(q) + " |";
        if (orders.empty()) s += " -";
        for (long long r : orders) s += " " + std::to_string(r);
        return s + ")";
    }
};

// A Nielsen class: the multiset of branch values in Z/d, stored sorted.
using NielsenClass = std::vector<long long>;

inline long long order_mod(long long a, long long d) { return d / std::gcd(d, a); }

// All multisets (a_1, ..., a_m) in Z/d with the exact order profile of the
// type, zero sum, and (for q = 0) generating Z/d. Unramified types have the
// single empty class.
inline std::vector<NielsenClass> nielsen_classes(const FpfType& t) {
    if (t.orders.empty()) return {{}};
    std::vector<std::vector<long long>> candidates;
    for (long long r : t.orders) {
        if (r < 2 || r >= t.d || t.d % r != 0)
            throw std::invalid_argument("nielsen_classes: branch order must properly divide d");
        std::vector<long long> c;
        for (long long a = 1; a < t.d; ++a)
            if (order_mod(a, t.d) == r) c.push_back(a);
        candidates.push_back(std::move(c));
    }
    std::set<NielsenClass> found;
    std::vector<long long> tuple(t.orders.size());
    auto rec = [&](auto&& self, std::size_t pos, long long sum) -> void {
        if (pos == tuple.size()) {
            if (sum % t.d != 0) return;
            if (t.q == 0) {
                long long g = t.d;
                for (long long a : tuple) g = std::gcd(g, a);
                if (g != 1) return;
            }
            NielsenClass cls = tuple;
            std::sort(cls.begin(), cls.end());
            found.insert(std::move(cls));
            return;
        }
        for (long long a : candidates[pos]) {
            // same order as the previous slot: enforce nondecreasing values
            if (pos > 0 && t.orders[pos] == t.orders[pos - 1] && a < tuple[pos - 1]) continue;
            tuple[pos] = a;
            self(self, pos + 1, sum + a);
        }
    };
    rec(rec, 0, 0);
    return std::vector<NielsenClass>(found.begin(), found.end());
}

// Negation orbit of Nielsen classes: a two-graph configuration only sees a
// topological type up to inverting the automorphism.
struct ConfigOrbit {
    std::vector<NielsenClass> classes;  // one or two, sorted

    friend bool operator==(const ConfigOrbit& a, const ConfigOrbit& b) {
        return a.classes == b.classes;
    }
    friend bool operator<(const ConfigOrbit& a, const ConfigOrbit& b) {
        return a.classes < b.classes;
    }
};

inline NielsenClass negated_class(const NielsenClass& cls, long long d) {
    NielsenClass out;
    for (long long a : cls) out.push_back((d - a) % d);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ConfigOrbit> config_classes(const FpfType& t) {
    std::vector<NielsenClass> classes = nielsen_classes(t);
    std::set<NielsenClass> remaining(classes.begin(), classes.end());
    std::vector<ConfigOrbit> orbits;
    for (const NielsenClass& cls : classes) {
        if (!remaining.count(cls)) continue;
        NielsenClass neg = negated_class(cls, t.d);
        if (!remaining.count(neg))
            throw std::logic_error("config_classes: class set not closed under negation");
        ConfigOrbit orbit;
        remaining.erase(cls);
        orbit.classes.push_back(cls);
        if (neg != cls) {
            remaining.erase(neg);
            orbit.classes.push_back(neg);
        }
        std::sort(orbit.classes.begin(), orbit.classes.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

namespace detail {

// ramified types for a single automorphism order d
inline void fpf_ramified_branch(long long b_max, long long d, std::set<FpfType>& types) {
    std::vector<long long> proper;
    for (long long r = 2; r < d; ++r)
        if (d % r == 0) proper.push_back(r);
    if (proper.empty()) return;
    for (long long q = 0; d * (2 * q - 1) <= 2 * b_max - 2; ++q) {
        // branch orders, nondecreasing; 2b - 2 = d (2q - 2 + sum (1 - 1/r))
        std::vector<long long> orders;
        auto rec = [&](auto&& self, std::size_t from, const Rational& sum) -> void {
            if (orders.size() >= 2) {
                Rational two_b = Rational(d) * (Rational(2 * q - 2) + sum) + Rational(2);
                if (two_b > Rational(2 * b_max)) return;  // grows with every extra order
                if (two_b.is_integer()) {
                    BigInt tb = two_b.to_integer();
                    if (tb.divisible_by(BigInt(2)) && tb >= BigInt(4)) {
                        FpfType t;
                        t.b = tb.exact_div(BigInt(2)).to_int64();
                        t.d = d;
                        t.q = q;
                        t.orders = orders;
                        if (!types.count(t) && !nielsen_classes(t).empty()) types.insert(t);
                    }
                }
            }
            for (std::size_t i = from; i < proper.size(); ++i) {
                Rational next = sum + Rational(proper[i] - 1, proper[i]);
                if (Rational(d) * (Rational(2 * q - 2) + next) + Rational(2) >
                    Rational(2 * b_max))
                    return;
                orders.push_back(proper[i]);
                self(self, i, next);
                orders.pop_back();
            }
        };
        rec(rec, 0, Rational(0));
    }
}

}  // namespace detail

// All ramification types of fixed-point-free automorphisms on curves of
// genus 2..b_max. Unramified family: b - 1 = d (q - 1) with q >= 2.
// Ramified: exhaustive over d up to the 4b+2 bound, quotient genus and
// branch orders pruned by the Hurwitz identity, keeping types that admit
// at least one valid branch-value multiset. Orders are independent search
// branches; jobs > 1 distributes them without changing the sorted result.
inline std::vector<FpfType> enumerate_fpf(long long b_max, int jobs = 1) {
    if (b_max < 2 || b_max > 12)
        throw std::invalid_argument("enumerate_fpf: supported genus range is 2..12");
    std::set<FpfType> types;

    for (long long d = 2; d <= b_max - 1; ++d)
        for (long long q = 2; d * (q - 1) + 1 <= b_max; ++q) {
            FpfType t;
            t.b = d * (q - 1) + 1;
            t.d = d;
            t.q = q;
            types.insert(t);
        }

    if (jobs <= 1) {
        for (long long d = 4; d <= 4 * b_max + 2; ++d)
            detail::fpf_ramified_branch(b_max, d, types);
    } else {
        std::vector<long long> ds;
        for (long long d = 4; d <= 4 * b_max + 2; ++d) ds.push_back(d);
        std::vector<std::set<FpfType>> partial(ds.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ds.size()) return;
                detail::fpf_ramified_branch(b_max, ds[i], partial[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& part : partial) types.insert(part.begin(), part.end());
    }
    return std::vector<FpfType>(types.begin(), types.end());
}

// Types whose Nielsen class is not unique, with the negation-orbit
// structure of each.
struct ExceptionalEntry {
    FpfType type;
    std::vector<NielsenClass> classes;
    std::vector<ConfigOrbit> orbits;
};

inline std::vector<ExceptionalEntry> exceptional_report(long long b_max) {
    std::vector<ExceptionalEntry> out;
    for (const FpfType& t : enumerate_fpf(b_max)) {
        std::vector<NielsenClass> classes = nielsen_classes(t);
        if (classes.size() <= 1) continue;
        ExceptionalEntry e;
        e.type = t;
        e.classes = std::move(classes);
        e.orbits = config_classes(t);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace kodaira
