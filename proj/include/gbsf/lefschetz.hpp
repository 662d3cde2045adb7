#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gbsf/groebner.hpp"
#include "gbsf/linalg.hpp"
#include "gbsf/polynomial.hpp"

namespace gbsf {

// Closed-form classification: the quotient by n squares of general linear
// forms plus a k-th power has the weak Lefschetz property exactly when
// k >= (n-3)/2 for odd n and k >= n/2 for even n.
bool classify_wlp(int n, int k);

// Degree-d monomials outside the staircase, sorted descending under `order`.
std::vector<Monomial> quotient_standard_basis(const MonomialIdeal& staircase, int d,
                                              const TermOrder& order);

struct MultiplicationMap {
    int source_degree = 0;
    int target_degree = 0;
    RationalMatrix matrix;  // rows: target standard basis; cols: source
    std::vector<Monomial> source_basis;
    std::vector<Monomial> target_basis;

    int required_rank() const {
        return static_cast<int>(std::min(source_basis.size(), target_basis.size()));
    }
};

// Matrix of multiplication by ell^power from degree d to degree d+power on
// the quotient by the given reduced basis, in standard-monomial coordinates.
MultiplicationMap multiplication_matrix(const std::vector<Rational>& ell, int power,
                                        const GroebnerBasis& quotient, int d);

struct GenericRankResult {
    int rank = 0;             // exact rank of the best trial, Bareiss-certified
    bool certified_full = false;
    int trials_used = 0;
};

// Maximal rank over random-coefficient trials. Coefficients are drawn
// uniformly from {1,...,2^31}, pairwise distinct; a mod-p rank screens each
// trial and the reported rank is re-certified by exact elimination. The
// result is a monotone lower bound on the generic rank.
GenericRankResult generic_rank(const std::function<MultiplicationMap(const std::vector<Rational>&)>& factory,
                               int nvars, int trials, uint64_t seed);

// Witness data for the kernel identities in the squarefree quotient.
struct SyzygyWitness {
    enum class Variant { odd, even };
    Variant variant;
    std::vector<Rational> a;     // coefficients of ell
    Polynomial lprime;           // odd case: linear form with ell^p lprime = (sum x)^2 g
    Polynomial f;                // even case: quadric with ell^(p-2) f = (sum x)^2 g
    Polynomial g;
    std::vector<Rational> b;     // triangular-system solution, b_0 pinned
    std::vector<Rational> lambda;  // even case coefficient triple
};

// n = |a| = 2p+1: produces lprime and g with ell^p lprime = (sum x)^2 g
// modulo the squares. Rejects degenerate coefficient vectors.
SyzygyWitness syzygy_witness_odd(const std::vector<Rational>& a);
// Same construction with an explicit b vector (no normalization applied).
SyzygyWitness syzygy_witness_odd_with_b(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b);

// n = |a| = 2p, p >= 3: produces f (not proportional to SFP((sum x)^2)) and g
// with ell^(p-2) f = (sum x)^2 g modulo the squares.
SyzygyWitness syzygy_witness_even(const std::vector<Rational>& a);

// Exact identity check in the squarefree quotient; no tolerance.
bool verify_witness(const SyzygyWitness& w);

struct WlpFailingMap {
    int from = 0;        // source degree
    int to = 0;          // target degree
    int rank = 0;        // best observed rank
    int required = 0;    // min(dim source, dim target)
    int trials = 0;      // random trials that confirmed the deficit
};

struct WlpVerdict {
    int n = 0, k = 0;
    bool holds = false;
    bool inconclusive = false;
    std::vector<WlpFailingMap> failing;
    std::optional<SyzygyWitness> witness;
    // Verified kernel element of ell^k on the (n-1)-variable quadric algebra,
    // when a witness applies.
    std::optional<Polynomial> kernel_element;
    bool kernel_verified = false;
};

// Verifies the classification by exact rank computation. The multiplication
// maps ell^k are checked on the quotient by the initial ideal of the
// (n-1)-variable quadric almost complete intersection, where the all-ones
// linear form attains the generic rank; failures additionally gather
// random-trial rank deficits on the original algebra and a syzygy-derived
// kernel element.
WlpVerdict verify_wlp(int n, int k, int trials = 3, uint64_t seed = 1,
                      bool use_original_algebra = false, int threads = 1);

}  // namespace gbsf
