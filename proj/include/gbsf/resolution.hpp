#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbsf/monomial_ideal.hpp"
#include "gbsf/rational.hpp"

namespace gbsf {

// Graded Betti numbers beta_{p, p+s} keyed by (p, s); ideal convention, so
// row p = 0 counts minimal generators by degree.
struct BettiTable {
    int n = 0, k = 0;
    std::map<std::pair<int, int>, BigInt> entries;  // (p, s) -> value, nonzero only

    BigInt get(int p, int s) const {
        auto it = entries.find({p, s});
        return it == entries.end() ? BigInt(0) : it->second;
    }
    void add(int p, int s, const BigInt& v) {
        if (v == 0) return;
        entries[{p, s}] += v;
        if (entries[{p, s}] == 0) entries.erase({p, s});
    }
    int max_p() const;  // projective dimension of the ideal
    int min_s() const;
    int max_s() const;  // regularity
    BigInt total(int p) const;

    bool operator==(const BettiTable& other) const { return entries == other.entries; }
};

// Exchange property: for every generator u x_j and i < j with x_i not
// dividing u, the monomial u x_i lies in the ideal.
bool is_strongly_squarefree_stable(const std::vector<Monomial>& gens);

// Squarefree minimal generators of the initial ideal beyond the squares.
std::vector<Monomial> squarefree_staircase_generators(int n, int k);

// Betti table of the squarefree part, computed both through the
// generator-sum formula sum_{deg u = s} C(max u - s, p) and the closed
// Catalan form C_{s-k}^{k-1} C(s-k, p); the two must agree.
BettiTable betti_ghp(int n, int k);

// A_p(u) = sum_j C(i_j - 1, p - j) over the support i_1 > ... > i_t of u.
BigInt a_p_value(const Monomial& u, int p);

// Betti table of the full initial ideal via the three-summand formula over
// the squarefree monomials inside the squarefree part.
BettiTable betti_murai(int n, int k);

// Mayer-Vietoris tree node. Generators are stored as a common factor times a
// primitive residual list; full generators are common * residual[i].
struct MvtNode {
    explicit MvtNode(int nvars) : common(nvars) {}

    uint64_t position = 1;
    int dimension = 0;
    Monomial common;
    std::vector<Monomial> residual;
    std::optional<Monomial> pivot;  // full monomial
    // First node on its branch whose non-common part is squarefree; the
    // squared-variable pivot phase ends here.
    bool final_node = false;
    bool relevant = false;          // position 1 or even
    std::unique_ptr<MvtNode> left, right;

    std::vector<Monomial> full_generators() const;
};

struct MvtTree {
    std::unique_ptr<MvtNode> root;
    int nvars = 0;
    size_t node_count = 0;
};

// Builds the full tree. Pivot rule: the last squared variable among the
// generators that is not a common factor; once the residual is squarefree,
// the generator with the largest variable indices (descending support
// comparison) is taken instead.
MvtTree build_mvt(const MonomialIdeal& ideal);

struct MvtBettiResult {
    BettiTable graded;
    bool minimal_certified = false;  // no repeated multidegree in consecutive dimensions
    size_t relevant_nodes = 0;
};

// Multidegree counts over the relevant nodes of a built tree.
MvtBettiResult betti_from_mvt(const MvtTree& tree);

// Streaming variant: walks the tree without materializing it.
MvtBettiResult betti_mvt(const MonomialIdeal& ideal);

// Positions of the final nodes in tree order (test/report surface).
std::vector<uint64_t> mvt_final_positions(const MvtTree& tree);

// (projective dimension, regularity) = (n - 1, k + floor((n-k)/2)).
std::pair<int, int> pd_reg(int n, int k);

// Table for n = k + 2m + 1 from the table for n - 1: a copy plus a (1,2)-shift,
// with the extra square contributing one generator in degree 2.
BettiTable betti_recursion(int n, int k, const BettiTable& base);

struct ShapeReport {
    bool all_ok = true;
    std::vector<std::string> checks;    // human-readable pass lines
    std::vector<std::string> failures;  // non-empty on any mismatch
};

// Verifies the structural facts about the Betti diagram for n = k + 2m:
// the generator row, the squares-only band, the extremal Catalan diagonal,
// and the zero/nonzero bands around it.
ShapeReport betti_shape_check(int n, int k);

// Macaulay2-style diagram: rows s, columns p.
std::string render_betti_diagram(const BettiTable& table);

// Numerator of the Hilbert series of R/I computed from a Betti table by
// alternating sums, as coefficients of (1-t)^n * HS; index = degree.
std::vector<BigInt> hilbert_numerator_from_betti(const BettiTable& table);

// The same numerator from the truncated series (1+t)^n (1-t^k).
std::vector<BigInt> hilbert_numerator_from_series(int n, int k);

}  // namespace gbsf
