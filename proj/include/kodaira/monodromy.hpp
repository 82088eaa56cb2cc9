#pragma once

#include <stdexcept>
#include <vector>

#include "kodaira/abelian.hpp"
#include "kodaira/fibration.hpp"
#include "kodaira/int_matrix.hpp"

namespace kodaira {

// One branch component as seen by the monodromy: the composite
// push-forward-of-transfer matrix on first homology plus its weight.
// For a graph component (d = e = 1) the matrix is the 2b x 2b action of
// the defining map; in general it is 2f x 2b.
struct ComponentAction {
    IntMatrix transfer_push;
    AbelianElement weight;
    long long d = 1;
    long long e = 1;
    long long r = 2;
};

struct MonodromyProblem {
    long long b = 2;
    long long f = 2;
    FiniteAbelianGroup group;
    std::vector<ComponentAction> components;

    // The underlying branch data, for invariant computations.
    VirtualFibration fibration() const {
        VirtualFibration vf;
        vf.b = b;
        vf.f = f;
        vf.group = group;
        vf.group_order = group.order().to_int64();
        for (const auto& c : components) {
            FibrationComponent fc;
            fc.d = c.d;
            fc.e = c.e;
            fc.r = c.r;
            fc.weight = c.weight;
            vf.components.push_back(std::move(fc));
        }
        return vf;
    }
};

inline void validate_problem(const MonodromyProblem& p) {
    if (p.b < 2 || p.f < 2)
        throw std::invalid_argument("MonodromyProblem: both genera must be >= 2");
    if (p.components.empty()) throw std::invalid_argument("MonodromyProblem: no components");
    for (const auto& c : p.components) {
        if (c.transfer_push.rows() != static_cast<std::size_t>(2 * p.f) ||
            c.transfer_push.cols() != static_cast<std::size_t>(2 * p.b))
            throw std::invalid_argument("MonodromyProblem: transfer matrix must be 2f x 2b");
        if (!(c.weight.group == p.group))
            throw std::invalid_argument("MonodromyProblem: weight in the wrong group");
        if (element_order(c.weight) != c.r)
            throw std::invalid_argument(
                "MonodromyProblem: weight order differs from ramification order");
        if (c.d < 1 || c.e < 1)
            throw std::invalid_argument("MonodromyProblem: component degrees must be >= 1");
    }
}

// Global extension obstruction: the degree-over-F weighted sum of the
// local monodromy values.
inline AbelianElement obstruction(const MonodromyProblem& p) {
    validate_problem(p);
    AbelianElement o = AbelianElement::zero(p.group);
    for (const auto& c : p.components) o = o + c.e * c.weight;
    return o;
}

// The blocks of the map iota: Z^{2b} -> H_1(F; G): for the j-th modulus
// n_j of G the integer matrix is sum_i (g_i)_j * T_i.
inline std::vector<ModularBlock> monodromy_blocks(const MonodromyProblem& p) {
    std::vector<ModularBlock> blocks;
    for (std::size_t j = 0; j < p.group.factor_count(); ++j) {
        IntMatrix a(2 * p.f, 2 * p.b);
        for (const auto& c : p.components) {
            long long coeff = c.weight.coords[j];
            if (coeff != 0) a = a + BigInt(coeff) * c.transfer_push;
        }
        blocks.push_back({std::move(a), p.group.moduli()[j]});
    }
    return blocks;
}

// Index of the stabilizer of theta in H_1(B; Z), i.e. the cardinality of
// the image of iota.
inline BigInt stabilizer_index(const MonodromyProblem& p) {
    validate_problem(p);
    if (p.group.is_trivial()) return BigInt(1);
    return image_cardinality(monodromy_blocks(p));
}

inline BigInt minimal_pullback_degree(const MonodromyProblem& p) {
    return lcm(BigInt(element_order(obstruction(p))), stabilizer_index(p));
}

struct RealizationReport {
    AbelianElement obstruction_value;
    long long obstruction_order = 1;
    BigInt stabilizer;
    BigInt minimal_degree;
    InvariantRow realized;
};

// Minimal pullback degree plus the invariant row of the pulled-back,
// realized fibration.
inline RealizationReport realize(const MonodromyProblem& p) {
    RealizationReport rep;
    rep.obstruction_value = obstruction(p);
    rep.obstruction_order = element_order(rep.obstruction_value);
    rep.stabilizer = stabilizer_index(p);
    rep.minimal_degree = lcm(BigInt(rep.obstruction_order), rep.stabilizer);
    rep.realized = realized_invariants(p.fibration(), rep.minimal_degree.to_int64());
    return rep;
}

// A class in H_1(F, F cap D; G): coefficients on a basis of H_1(F; G) and
// one boundary weight per component (the punctures of one component all
// carry the same value, so they are never listed individually).
struct RelativeClass {
    std::vector<AbelianElement> free_part;  // length 2f
    std::vector<AbelianElement> boundary;   // length = component count

    friend bool operator==(const RelativeClass& a, const RelativeClass& b) {
        return a.free_part == b.free_part && a.boundary == b.boundary;
    }
};

// Monodromy action of a base loop alpha on a relative class:
// free part grows by sum_i (T_i alpha) tensor boundary_i, boundary fixed.
inline RelativeClass apply_monodromy(const MonodromyProblem& p, const RelativeClass& theta,
                                     const std::vector<BigInt>& alpha) {
    validate_problem(p);
    if (alpha.size() != static_cast<std::size_t>(2 * p.b))
        throw std::invalid_argument("apply_monodromy: loop vector must have length 2b");
    if (theta.free_part.size() != static_cast<std::size_t>(2 * p.f))
        throw std::invalid_argument("apply_monodromy: free part must have length 2f");
    if (theta.boundary.size() != p.components.size())
        throw std::invalid_argument("apply_monodromy: boundary length mismatch");
    for (std::size_t i = 0; i < theta.boundary.size(); ++i) {
        const AbelianElement& w = theta.boundary[i];
        if (!(w.group == p.group) || (!w.is_zero() && !(w == p.components[i].weight)))
            throw std::invalid_argument("apply_monodromy: boundary weights do not match problem");
    }
    RelativeClass out = theta;
    const BigInt ord = p.group.order();
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        if (theta.boundary[i].is_zero()) continue;
        std::vector<BigInt> pushed = p.components[i].transfer_push.apply(alpha);
        for (std::size_t t = 0; t < pushed.size(); ++t) {
            if (pushed[t].is_zero()) continue;
            long long scalar = ((pushed[t] % ord) + ord).to_int64() % ord.to_int64();
            out.free_part[t] = out.free_part[t] + scalar * theta.boundary[i];
        }
    }
    return out;
}

// Reduced model of the pullback along a degree-deg cover whose homology
// image is a sublattice of the stabilizer: coordinates change to a basis
// of an index-deg sublattice of ker(iota), degrees over F scale by deg.
// Requires deg to be a multiple of the stabilizer index.
inline MonodromyProblem problem_pullback(const MonodromyProblem& p, const BigInt& deg) {
    validate_problem(p);
    BigInt index = stabilizer_index(p);
    if (!deg.divisible_by(index))
        throw std::invalid_argument(
            "problem_pullback: degree must be a multiple of the stabilizer index");
    std::size_t n = static_cast<std::size_t>(2 * p.b);
    IntMatrix lattice;
    if (p.group.is_trivial()) {
        lattice = IntMatrix::identity(n);
    } else {
        lattice = congruence_kernel_basis(monodromy_blocks(p), n);
    }
    BigInt extra = deg.exact_div(index);
    for (std::size_t i = 0; i < n; ++i) lattice.at(i, 0) *= extra;

    MonodromyProblem out;
    out.b = p.b;  // reduced model keeps the rank-2b coordinate lattice
    out.f = p.f;
    out.group = p.group;
    for (const auto& c : p.components) {
        ComponentAction ca = c;
        ca.transfer_push = c.transfer_push * lattice;
        ca.e = c.e * deg.to_int64();
        out.components.push_back(std::move(ca));
    }
    return out;
}

}  // namespace kodaira
