#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/abelian.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

// One component D_i of the branch divisor in F x B:
// d = deg(D_i -> B), e = deg(D_i -> F), r = local ramification order.
// r = 1 marks a formally unramified component that contributes nothing to
// the invariants (the etale limit of the formulas).
struct FibrationComponent {
    long long d = 1;
    long long e = 1;
    long long r = 2;
    std::optional<AbelianElement> weight;  // theta value on loops around D_i
};

// Branch data over a product of curves of genera b and f, with either a
// full abelian coefficient group or just its order (enumeration data).
struct VirtualFibration {
    long long b = 2;
    long long f = 2;
    std::optional<FiniteAbelianGroup> group;
    long long group_order = 1;
    std::vector<FibrationComponent> components;
    bool etale_both_ways = false;

    long long order() const {
        return group ? group->order().to_int64() : group_order;
    }
};

inline void validate_fibration(const VirtualFibration& vf) {
    if (vf.b < 2 || vf.f < 2)
        throw std::invalid_argument("VirtualFibration: both genera must be >= 2");
    if (vf.components.empty())
        throw std::invalid_argument("VirtualFibration: no branch components");
    if (vf.order() < 1) throw std::invalid_argument("VirtualFibration: group order must be >= 1");
    for (const auto& c : vf.components) {
        if (c.d < 1 || c.e < 1)
            throw std::invalid_argument("VirtualFibration: component degrees must be >= 1");
        if (c.r < 1)
            throw std::invalid_argument("VirtualFibration: ramification order must be >= 1");
        if (c.weight) {
            if (!vf.group)
                throw std::invalid_argument("VirtualFibration: weight given without a group");
            if (!(c.weight->group == *vf.group))
                throw std::invalid_argument("VirtualFibration: weight in the wrong group");
            if (element_order(*c.weight) != c.r)
                throw std::invalid_argument(
                    "VirtualFibration: weight order differs from ramification order");
        }
    }
    if (vf.etale_both_ways) {
        for (const auto& c : vf.components)
            if (c.d * (vf.b - 1) != c.e * (vf.f - 1))
                throw std::invalid_argument(
                    "VirtualFibration: component not etale-compatible with both projections");
    }
}

// True when every component has degree one over the base carrying the
// monodromy, i.e. the divisor is a union of graphs of maps B -> F.
inline bool is_graph_type(const VirtualFibration& vf) {
    for (const auto& c : vf.components)
        if (c.d != 1) return false;
    return true;
}

struct VirtualInvariants {
    Rational c2, c1_sq, sigma, slope;
};

// Chern numbers from the branch data. The fibre over a base point meets
// component i in d_i punctures of order r_i, so
//   c2    = |G| e(B) (e(F) - sum d_i (r_i - 1)/r_i)
//   c1^2  = 2 c2 - |G| e(B) sum d_i (r_i^2 - 1)/r_i^2.
inline VirtualInvariants virtual_invariants(const VirtualFibration& vf) {
    validate_fibration(vf);
    Rational order(vf.order());
    Rational euler_b(2 - 2 * vf.b), euler_f(2 - 2 * vf.f);
    Rational punctures(0), ram(0);
    for (const auto& c : vf.components) {
        punctures += Rational(c.d * (c.r - 1), c.r);
        ram += Rational(c.d * (c.r * c.r - 1), c.r * c.r);
    }
    VirtualInvariants inv;
    inv.c2 = order * euler_b * (euler_f - punctures);
    inv.c1_sq = Rational(2) * inv.c2 - order * euler_b * ram;
    inv.sigma = (inv.c1_sq - Rational(2) * inv.c2) / Rational(3);
    inv.slope = inv.c1_sq / inv.c2;
    return inv;
}

// Fibre-side signature formula for double etale data:
// sigma = (2/3) |G| (f-1) sum e_i (1 - 1/r_i^2). Agrees with
// virtual_invariants whenever the etale compatibility d(b-1) = e(f-1) holds.
inline Rational double_etale_signature(const VirtualFibration& vf) {
    if (!vf.etale_both_ways)
        throw std::invalid_argument("double_etale_signature: fibration is not double etale");
    validate_fibration(vf);
    Rational sum(0);
    for (const auto& c : vf.components)
        sum += Rational(c.e * (c.r * c.r - 1), c.r * c.r);
    return Rational(2, 3) * Rational(vf.order()) * Rational(vf.f - 1) * sum;
}

// Etale pullback along a degree-deg cover of the base: the base genus moves
// to deg(b-1)+1, degrees over B stay, degrees over F scale by deg.
inline VirtualFibration pullback(const VirtualFibration& vf, long long deg) {
    if (deg < 1) throw std::invalid_argument("pullback: degree must be >= 1");
    VirtualFibration out = vf;
    out.b = deg * (vf.b - 1) + 1;
    for (auto& c : out.components) c.e *= deg;
    return out;
}

// One row of the realized-invariants table.
struct InvariantRow {
    BigInt g_b1, g_f1, g_b2, g_f2;
    Rational c2, c1_sq, sigma, slope;

    friend bool operator==(const InvariantRow& a, const InvariantRow& b) {
        return a.g_b1 == b.g_b1 && a.g_f1 == b.g_f1 && a.g_b2 == b.g_b2 && a.g_f2 == b.g_f2 &&
               a.c2 == b.c2 && a.c1_sq == b.c1_sq && a.sigma == b.sigma && a.slope == b.slope;
    }
};

// Genera of both fibrations and the Chern numbers after an etale pullback
// of the stated degree (not assumed minimal). Riemann-Hurwitz fibrewise:
// the first fibre covers F branched at sum d_i points, the second covers
// the pulled-back base branched at deg * sum e_i points.
inline InvariantRow realized_invariants(const VirtualFibration& vf, long long deg) {
    validate_fibration(vf);
    VirtualFibration pb = pullback(vf, deg);
    Rational order(vf.order());

    auto genus_from_double = [](const Rational& two_g_minus_2, const char* what) {
        Rational g = (two_g_minus_2 + Rational(2)) / Rational(2);
        if (!g.is_integer())
            throw std::domain_error(std::string("realized_invariants: non-integral ") + what);
        return g.to_integer();
    };

    Rational branch_f1(0), branch_f2(0);
    for (const auto& c : pb.components) {
        branch_f1 += Rational(c.d * (c.r - 1), c.r);
        branch_f2 += Rational(c.e * (c.r - 1), c.r);
    }

    InvariantRow row;
    row.g_b1 = BigInt(pb.b);
    row.g_f1 = genus_from_double(order * (Rational(2 * vf.f - 2) + branch_f1), "first fibre genus");
    row.g_b2 = BigInt(vf.f);
    row.g_f2 = genus_from_double(order * (Rational(2 * pb.b - 2) + branch_f2), "second fibre genus");

    VirtualInvariants inv = virtual_invariants(pb);
    row.c2 = inv.c2;
    row.c1_sq = inv.c1_sq;
    row.sigma = inv.sigma;
    row.slope = inv.slope;
    return row;
}

enum class FreeActionVerdict { impossible, necessary_conditions_met, exists_for_abelian };

inline std::string to_string(FreeActionVerdict v) {
    switch (v) {
        case FreeActionVerdict::impossible: return "impossible";
        case FreeActionVerdict::necessary_conditions_met: return "necessary-conditions-met";
        case FreeActionVerdict::exists_for_abelian: return "exists";
    }
    return "?";
}

// Free action of a group of order n on a curve of genus g needs an integer
// quotient genus q >= 2 with 2g-2 = n(2q-2); an abelian group then acts
// freely exactly when it is generated by at most 2q elements.
inline FreeActionVerdict free_action_possible(long long g, long long n,
                                              const std::optional<FiniteAbelianGroup>& group = {}) {
    if (g < 2) throw std::invalid_argument("free_action_possible: genus must be >= 2");
    if (n < 1) throw std::invalid_argument("free_action_possible: order must be >= 1");
    if (group && group->order() != BigInt(n))
        throw std::invalid_argument("free_action_possible: group order mismatch");
    if ((2 * g - 2) % n != 0) return FreeActionVerdict::impossible;
    long long quotient_euler = (2 * g - 2) / n;  // 2q - 2
    if (quotient_euler % 2 != 0 || quotient_euler < 2) return FreeActionVerdict::impossible;
    long long q = quotient_euler / 2 + 1;
    if (!group) return FreeActionVerdict::necessary_conditions_met;
    std::size_t generators_needed = group->invariant_factors().size();
    return generators_needed <= static_cast<std::size_t>(2 * q)
               ? FreeActionVerdict::exists_for_abelian
               : FreeActionVerdict::impossible;
}

}  // namespace kodaira
