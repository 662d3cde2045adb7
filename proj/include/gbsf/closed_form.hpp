#pragma once

#include <map>
#include <vector>

#include "gbsf/groebner.hpp"
#include "gbsf/lattice.hpp"
#include "gbsf/polynomial.hpp"
#include "gbsf/rational.hpp"

namespace gbsf {

// Index set A of the basis family: a sorted subset of [n] with
// max(A) = 2|A| - k, minimal under inclusion within that family.
struct IndexSetA {
    std::vector<int> members;  // ascending, 1-based

    int d() const { return static_cast<int>(members.size()); }
    int max() const { return members.empty() ? 0 : members.back(); }

    bool operator==(const IndexSetA& other) const = default;
    bool operator<(const IndexSetA& other) const { return members < other.members; }
};

// The family, grouped by degree d = |A|, for k <= d <= k + floor((n-k)/2).
// Enumerated through lattice paths that first reach y = x + k at their final
// step, so the cost is proportional to the output.
std::map<int, std::vector<IndexSetA>> admissible_sets(int n, int k);

// g_{A} = e_d over the variables A union {2d-k+1, ..., n}; its leading
// monomial is x_A under any order ranking x_1 > ... > x_n.
Polynomial g_polynomial(const IndexSetA& A, int n, int k, const TermOrder& order);

// f_S: the sum of all squarefree degree-(k+|S|) monomials divisible by x_S,
// equivalently (1/k!) SFP(x_S (x_1+...+x_n)^k).
Polynomial f_polynomial(const std::vector<int>& S, int n, int k, const TermOrder& order);

struct LambdaVector {
    std::vector<Rational> values;  // lambda_0 .. lambda_{d-k}

    bool operator==(const LambdaVector& other) const = default;
};

// lambda_i = (-1)^i k / ((k+i) C(d, k+i)).
LambdaVector lambda_closed_form(int d, int k);
// Forward-substitution solve of the lower-triangular system
//   sum_{i<=j} C(j,i) C(d-j, d-k-i) lambda_i = [j == 0],  j = 0..d-k.
LambdaVector lambda_from_system(int d, int k);
// Both routes, required to agree entrywise.
LambdaVector lambda_coefficients(int d, int k);

// sum_i lambda_i sum_{S in T_i(A)} f_S, where T_i(A) collects the
// (d-k)-subsets S of [n] with |S cap ({1..2d-k} \ A)| = i. Equals g_{A}.
Polynomial g_via_f_expansion(const IndexSetA& A, int n, int k, const TermOrder& order);

// The reduced basis of (x_1^2,...,x_n^2,(x_1+...+x_n)^k) for any degrevlex or
// lex order; only the order's variable ranking matters. k = 1 is emitted in
// the original ring as {x_1+...+x_n} union the k = 2 basis on the lower-ranked
// n-1 variables.
GroebnerBasis closed_form_basis(int n, int k, const TermOrder& order);

// Basis under the degrevlex order ranked by sigma (sigma[0] is the 1-based
// index of the highest variable).
GroebnerBasis permuted_basis(int n, int k, const std::vector<int>& sigma);

// Number of distinct reduced bases over all term orders: the multinomial
// C(n; k, 2, ..., 2[, 1]) with the trailing 1 present iff n - k is odd.
BigInt count_distinct_bases(int n, int k);

}  // namespace gbsf
