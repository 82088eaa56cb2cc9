#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/int_matrix.hpp"
#include "kodaira/orbifold.hpp"
#include "kodaira/polynomial.hpp"
#include "kodaira/smith.hpp"

namespace kodaira {

// Words over the orbifold group generators: letter +(g+1) is generator g,
// letter -(g+1) its inverse.
using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

// Reidemeister-Schreier data for the kernel of a generating vector:
// coset table over the finite quotient, breadth-first Schreier transversal,
// Schreier generators, rewritten relators, and the basis of the
// abelianized kernel (free of rank 2 * cover genus; torsion is rejected).
class KernelPresentation {
public:
    static constexpr std::size_t kMaxGroupOrder = 128;

    explicit KernelPresentation(GeneratingVector vec, std::vector<int> bfs_generator_order = {})
        : gv_(std::move(vec)) {
        ValidationReport report = kodaira::validate(gv_);
        if (!report.valid) {
            std::string msg = "KernelPresentation: invalid generating vector";
            for (const auto& f : report.failures) msg += "; " + f;
            throw std::invalid_argument(msg);
        }
        if (gv_.group.size() > kMaxGroupOrder)
            throw std::invalid_argument("KernelPresentation: group order above supported cap");

        gen_count_ = gv_.signature.generator_count();
        bfs_order_ = std::move(bfs_generator_order);
        if (bfs_order_.empty()) {
            bfs_order_.resize(gen_count_);
            std::iota(bfs_order_.begin(), bfs_order_.end(), 0);
        }
        if (bfs_order_.size() != gen_count_)
            throw std::invalid_argument("KernelPresentation: bad traversal order");

        images_ = gv_.alpha;
        images_.insert(images_.end(), gv_.beta.begin(), gv_.beta.end());
        images_.insert(images_.end(), gv_.gamma.begin(), gv_.gamma.end());

        build_coset_table();
        build_transversal();
        index_schreier_generators();
        build_relation_matrix();
        build_homology_basis();
    }

    const GeneratingVector& vec() const { return gv_; }
    std::size_t coset_count() const { return cosets_; }
    std::size_t schreier_generator_count() const { return schreier_count_; }
    std::size_t homology_rank() const { return homology_rank_; }
    long long cover_genus() const { return gv_.cover_genus(); }
    const IntMatrix& relation_matrix() const { return relations_; }

    // Matrix of the conjugation action of any lift of group element k on the
    // abelianized kernel; columns are images of basis vectors.
    IntMatrix action_matrix(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= gv_.group.size())
            throw std::invalid_argument("action_matrix: element out of range");
        const Word& lift = transversal_[k];
        const Word lift_inv = inverse_word(lift);
        IntMatrix conjugated(schreier_count_, schreier_count_);
        for (std::size_t c = 0; c < cosets_; ++c)
            for (std::size_t g = 0; g < gen_count_; ++g) {
                int idx = schreier_index_[c][g];
                if (idx < 0) continue;
                Word w = lift;
                w.insert(w.end(), transversal_[c].begin(), transversal_[c].end());
                w.push_back(static_cast<int>(g) + 1);
                Word back = inverse_word(transversal_[fwd_[c][g]]);
                w.insert(w.end(), back.begin(), back.end());
                w.insert(w.end(), lift_inv.begin(), lift_inv.end());
                std::vector<long long> e = scan(w, gv_.group.identity());
                for (std::size_t s = 0; s < schreier_count_; ++s)
                    conjugated.at(s, idx) = BigInt(e[s]);
            }
        return class_map_ * conjugated * preimage_;
    }

    // Coordinates of a kernel word in the homology basis.
    std::vector<BigInt> homology_class(const Word& w) const {
        std::vector<long long> e = scan(w, gv_.group.identity());
        std::vector<BigInt> x(schreier_count_);
        for (std::size_t i = 0; i < schreier_count_; ++i) x[i] = BigInt(e[i]);
        return class_map_.apply(x);
    }

private:
    GeneratingVector gv_;
    std::size_t gen_count_ = 0, cosets_ = 0, schreier_count_ = 0, homology_rank_ = 0;
    std::vector<int> bfs_order_;
    std::vector<int> images_;                        // generator -> group element
    std::vector<std::vector<int>> fwd_, bwd_;        // coset moves by g, g^{-1}
    std::vector<Word> transversal_;                  // coset -> word, rho(word) = coset
    std::vector<char> tree_;                         // (coset, generator) tree pairs
    std::vector<std::vector<int>> schreier_index_;   // -1 on tree pairs
    IntMatrix relations_;
    IntMatrix class_map_;   // homology_rank x schreier_count
    IntMatrix preimage_;    // schreier_count x homology_rank, section of class_map

    void build_coset_table() {
        cosets_ = gv_.group.size();
        fwd_.assign(cosets_, std::vector<int>(gen_count_));
        bwd_.assign(cosets_, std::vector<int>(gen_count_));
        for (std::size_t c = 0; c < cosets_; ++c)
            for (std::size_t g = 0; g < gen_count_; ++g) {
                fwd_[c][g] = gv_.group.mul(static_cast<int>(c), images_[g]);
                bwd_[c][g] = gv_.group.mul(static_cast<int>(c), gv_.group.inv(images_[g]));
            }
    }

    void build_transversal() {
        transversal_.assign(cosets_, {});
        std::vector<char> known(cosets_, 0);
        std::vector<char> tree(cosets_ * gen_count_, 0);  // pair (c, g) lies in the tree
        std::vector<int> queue = {gv_.group.identity()};
        known[gv_.group.identity()] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            for (int g : bfs_order_) {
                int d = fwd_[c][g];
                if (!known[d]) {
                    known[d] = 1;
                    transversal_[d] = transversal_[c];
                    transversal_[d].push_back(g + 1);
                    tree[c * gen_count_ + g] = 1;
                    queue.push_back(d);
                }
                d = bwd_[c][g];
                if (!known[d]) {
                    known[d] = 1;
                    transversal_[d] = transversal_[c];
                    transversal_[d].push_back(-(g + 1));
                    tree[d * gen_count_ + g] = 1;  // d * g = c is the tree edge
                    queue.push_back(d);
                }
            }
        }
        if (queue.size() != cosets_)
            throw std::logic_error("KernelPresentation: coset table not transitive");
        tree_ = std::move(tree);
    }

    void index_schreier_generators() {
        schreier_index_.assign(cosets_, std::vector<int>(gen_count_, -1));
        int next = 0;
        for (std::size_t c = 0; c < cosets_; ++c)
            for (std::size_t g = 0; g < gen_count_; ++g)
                if (!tree_[c * gen_count_ + g]) schreier_index_[c][g] = next++;
        schreier_count_ = static_cast<std::size_t>(next);
    }

    std::vector<long long> scan(const Word& w, int start) const {
        std::vector<long long> e(schreier_count_, 0);
        int c = start;
        for (int letter : w) {
            if (letter > 0) {
                int g = letter - 1;
                int idx = schreier_index_[c][g];
                if (idx >= 0) ++e[idx];
                c = fwd_[c][g];
            } else {
                int g = -letter - 1;
                c = bwd_[c][g];
                int idx = schreier_index_[c][g];
                if (idx >= 0) --e[idx];
            }
        }
        return e;
    }

    std::vector<Word> defining_relators() const {
        std::vector<Word> rels;
        Word longrel;
        long long q = gv_.signature.genus;
        for (long long i = 0; i < q; ++i) {
            int a = static_cast<int>(i) + 1;
            int b = static_cast<int>(q + i) + 1;
            longrel.push_back(a);
            longrel.push_back(b);
            longrel.push_back(-a);
            longrel.push_back(-b);
        }
        for (std::size_t j = 0; j < gv_.signature.periods.size(); ++j)
            longrel.push_back(static_cast<int>(2 * q + j) + 1);
        rels.push_back(std::move(longrel));
        for (std::size_t j = 0; j < gv_.signature.periods.size(); ++j) {
            Word p(gv_.signature.periods[j], static_cast<int>(2 * q + j) + 1);
            rels.push_back(std::move(p));
        }
        return rels;
    }

    void build_relation_matrix() {
        std::vector<Word> rels = defining_relators();
        relations_ = IntMatrix(cosets_ * rels.size(), schreier_count_);
        std::size_t row = 0;
        for (std::size_t c = 0; c < cosets_; ++c)
            for (const Word& rel : rels) {
                std::vector<long long> e = scan(rel, static_cast<int>(c));
                for (std::size_t s = 0; s < schreier_count_; ++s)
                    relations_.at(row, s) = BigInt(e[s]);
                ++row;
            }
    }

    void build_homology_basis() {
        SmithDecomposition d = snf(relations_);
        for (std::size_t i = 0; i < d.rank; ++i)
            if (!d.diagonal[i].is_one())
                throw std::domain_error("KernelPresentation: abelianized kernel has torsion");
        homology_rank_ = schreier_count_ - d.rank;
        long long b = cover_genus();
        if (homology_rank_ != static_cast<std::size_t>(2 * b))
            throw std::logic_error("KernelPresentation: homology rank does not match cover genus");
        std::vector<std::size_t> free_cols;
        for (std::size_t j = d.rank; j < schreier_count_; ++j) free_cols.push_back(j);
        class_map_ = d.v.columns(free_cols).transposed();
        preimage_ = d.v_inv.transposed().columns(free_cols);
        if (!(class_map_ * preimage_).is_identity())
            throw std::logic_error("KernelPresentation: basis section check failed");
    }
};

// Characteristic polynomial of a finite-order mapping class from its
// ramification data: (x^d - 1)^(2q-2+m) (x-1)^2 / prod_j (x^(d/r_j) - 1).
// The division must be exact; anything else signals inconsistent data.
inline IntPolynomial nielsen_charpoly(long long q, long long d,
                                      const std::vector<long long>& periods) {
    if (d < 1) throw std::invalid_argument("nielsen_charpoly: order must be >= 1");
    long long e = 2 * q - 2 + static_cast<long long>(periods.size());
    IntPolynomial num = IntPolynomial{-1, 1}.pow(2);  // (x-1)^2
    IntPolynomial den = IntPolynomial::constant(BigInt(1));
    if (e >= 0)
        num = num * IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d)).pow(
                        static_cast<unsigned>(e));
    else
        den = den * IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d)).pow(
                        static_cast<unsigned>(-e));
    for (long long r : periods) {
        if (r < 2 || d % r != 0)
            throw std::invalid_argument("nielsen_charpoly: period must divide the order");
        den = den * IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d / r));
    }
    return num.exact_div(den);
}

}  // namespace kodaira
