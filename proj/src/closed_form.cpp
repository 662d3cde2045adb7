#include "gbsf/closed_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gbsf {

std::map<int, std::vector<IndexSetA>> admissible_sets(int n, int k) {
    if (k < 2 || n < 1) throw std::invalid_argument("admissible_sets: require k >= 2 and n >= 1");
    std::map<int, std::vector<IndexSetA>> family;
    if (k > n) return family;  // no A fits: the power is already in the squares
    int dmax = k + (n - k) / 2;
    for (int d = k; d <= dmax; ++d) {
        int len = 2 * d - k;
        std::vector<IndexSetA>& bucket = family[d];
        // Paths of length 2d-k whose running #N - #E stays below k until the
        // final step; the north positions are the members of A.
        std::vector<int> members;
        members.reserve(static_cast<size_t>(d));
        auto walk = [&](auto&& self, int step, int norths, int diff) -> void {
            if (diff == k) {
                if (step == len + 1) bucket.push_back(IndexSetA{members});
                return;
            }
            if (step > len) return;
            int remaining = len - step + 1;
            // Feasibility: need d - norths more norths in the remaining steps.
            if (d - norths > remaining) return;
            members.push_back(step);
            self(self, step + 1, norths + 1, diff + 1);
            members.pop_back();
            self(self, step + 1, norths, diff - 1);
        };
        walk(walk, 1, 0, 0);
        std::sort(bucket.begin(), bucket.end());
    }
    return family;
}

namespace {

void validate_index_set(const IndexSetA& A, int n, int k, const char* who) {
    int d = A.d();
    if (d < k) throw std::invalid_argument(std::string(who) + ": require |A| >= k");
    for (size_t i = 0; i < A.members.size(); ++i) {
        int v = A.members[i];
        if (v < 1 || v > n || (i > 0 && v <= A.members[i - 1]))
            throw std::invalid_argument(std::string(who) + ": A must be a sorted subset of [n]");
    }
    if (A.max() > 2 * d - k)
        throw std::invalid_argument(std::string(who) + ": max(A) exceeds 2|A| - k");
}

}  // namespace

Polynomial g_polynomial(const IndexSetA& A, int n, int k, const TermOrder& order) {
    int d = A.d();
    validate_index_set(A, n, k, "g_polynomial");
    std::vector<int> vars = A.members;
    for (int v = 2 * d - k + 1; v <= n; ++v) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return elementary_symmetric(d, vars, order);
}

Polynomial f_polynomial(const std::vector<int>& S, int n, int k, const TermOrder& order) {
    if (k < 1) throw std::invalid_argument("f_polynomial: require k >= 1");
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 1 || v > n || (i > 0 && v == sorted[i - 1]))
            throw std::invalid_argument("f_polynomial: S must be a subset of [n]");
    }
    int target = k + static_cast<int>(sorted.size());
    if (target > n) return Polynomial::zero(order);
    // Complement of S, to be filled with k extra variables.
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(sorted.begin(), sorted.end(), v)) rest.push_back(v);
    Polynomial extras = elementary_symmetric(k, rest, order);
    Monomial xs = Monomial::from_support(n, sorted);
    return extras.times_monomial(Rational(1), xs);
}

LambdaVector lambda_closed_form(int d, int k) {
    if (k < 1 || k > d) throw std::invalid_argument("lambda_closed_form: require 1 <= k <= d");
    LambdaVector lv;
    for (int i = 0; i <= d - k; ++i) {
        Rational v = make_rational(BigInt(k), BigInt(k + i) * binomial(d, k + i));
        if (i % 2 == 1) v = -v;
        lv.values.push_back(v);
    }
    return lv;
}

LambdaVector lambda_from_system(int d, int k) {
    if (k < 1 || k > d) throw std::invalid_argument("lambda_from_system: require 1 <= k <= d");
    LambdaVector lv;
    lv.values.resize(static_cast<size_t>(d - k) + 1);
    for (int j = 0; j <= d - k; ++j) {
        Rational rhs = (j == 0) ? Rational(1) : Rational(0);
        for (int i = 0; i < j; ++i)
            rhs -= Rational(binomial(j, i) * binomial(d - j, d - k - i)) * lv.values[static_cast<size_t>(i)];
        BigInt diag = binomial(d - j, d - k - j);
        lv.values[static_cast<size_t>(j)] = rhs / Rational(diag);
    }
    return lv;
}

LambdaVector lambda_coefficients(int d, int k) {
    LambdaVector closed = lambda_closed_form(d, k);
    LambdaVector solved = lambda_from_system(d, k);
    if (!(closed == solved))
        throw std::logic_error("lambda_coefficients: closed form and triangular solve disagree");
    return closed;
}

Polynomial g_via_f_expansion(const IndexSetA& A, int n, int k, const TermOrder& order) {
    int d = A.d();
    validate_index_set(A, n, k, "g_via_f_expansion");
    LambdaVector lambda = lambda_coefficients(d, k);
    // C = {1..2d-k} \ A, the indices whose presence in S raises the stratum.
    std::vector<bool> in_C(static_cast<size_t>(n) + 1, false);
    for (int v = 1; v <= std::min(2 * d - k, n); ++v) in_C[static_cast<size_t>(v)] = true;
    for (int v : A.members) in_C[static_cast<size_t>(v)] = false;

    Polynomial total = Polynomial::zero(order);
    int ssize = d - k;
    std::vector<int> subset(static_cast<size_t>(ssize));
    auto walk = [&](auto&& self, int start, int depth) -> void {
        if (depth == ssize) {
            int stratum = 0;
            for (int v : subset)
                if (in_C[static_cast<size_t>(v)]) ++stratum;
            const Rational& coeff = lambda.values[static_cast<size_t>(stratum)];
            if (coeff != 0)
                total = total + f_polynomial(subset, n, k, order) * coeff;
            return;
        }
        for (int v = start; v <= n - (ssize - depth) + 1; ++v) {
            subset[static_cast<size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (ssize == 0) {
        total = f_polynomial({}, n, k, order) * lambda.values[0];
    } else {
        walk(walk, 1, 0);
    }
    return total;
}

namespace {

// Basis for k >= 2 in "rank space" mapped through the order's ranking:
// rank r (1-based) plays the role of variable r in the canonical description.
GroebnerBasis closed_form_basis_ranked(int n, int k, const TermOrder& order) {
    const std::vector<int>& ranking = order.ranking();
    std::vector<Polynomial> gens;
    for (int v = 1; v <= n; ++v)
        gens.push_back(Polynomial::monomial(Rational(1), Monomial::variable(n, v, 2), order));
    auto family = admissible_sets(n, k);
    for (const auto& [d, bucket] : family) {
        for (const IndexSetA& A : bucket) {
            // Variables of g: the ranked positions A and 2d-k+1..n, mapped to
            // actual variable indices through the ranking.
            std::vector<int> vars;
            for (int r : A.members) vars.push_back(ranking[static_cast<size_t>(r - 1)]);
            for (int r = 2 * d - k + 1; r <= n; ++r) vars.push_back(ranking[static_cast<size_t>(r - 1)]);
            std::sort(vars.begin(), vars.end());
            gens.push_back(elementary_symmetric(d, vars, order));
        }
    }
    std::sort(gens.begin(), gens.end(), [&order](const Polynomial& f, const Polynomial& g) {
        return order.greater(f.leading_monomial(), g.leading_monomial());
    });
    return GroebnerBasis{std::move(gens), order, true};
}

}  // namespace

GroebnerBasis closed_form_basis(int n, int k, const TermOrder& order) {
    if (order.nvars() != n)
        throw std::invalid_argument("closed_form_basis: order variable count mismatch");
    if (k < 1) throw std::invalid_argument("closed_form_basis: require k >= 1");
    if (order.family() != OrderFamily::degrevlex && order.family() != OrderFamily::lex)
        throw std::invalid_argument("closed_form_basis: unsupported order family");
    if (k >= 2) return closed_form_basis_ranked(n, k, order);

    // k = 1: the highest-ranked variable is eliminated by the linear
    // generator, leaving the k = 2 picture on the remaining n-1 variables.
    if (n < 2) throw std::invalid_argument("closed_form_basis: k = 1 requires n >= 2");
    const std::vector<int>& ranking = order.ranking();
    std::vector<Polynomial> gens;
    gens.push_back(sum_of_variables(order));
    std::vector<int> lower(ranking.begin() + 1, ranking.end());
    // Build the (n-1)-variable basis in rank space, then transplant each
    // generator into the full ring.
    GroebnerBasis sub = closed_form_basis(n - 1, 2, TermOrder(order.family(), n - 1));
    for (const Polynomial& g : sub.generators) {
        std::vector<Term> lifted;
        for (const Term& t : g.terms()) {
            Monomial m(n);
            for (int r = 1; r <= n - 1; ++r) {
                int e = t.mono.exponent(r);
                if (e > 0) m.set_exponent(lower[static_cast<size_t>(r - 1)], e);
            }
            lifted.push_back(Term{t.coeff, m});
        }
        gens.push_back(Polynomial::from_terms(std::move(lifted), order));
    }
    std::sort(gens.begin(), gens.end(), [&order](const Polynomial& f, const Polynomial& g) {
        return order.greater(f.leading_monomial(), g.leading_monomial());
    });
    return GroebnerBasis{std::move(gens), order, true};
}

GroebnerBasis permuted_basis(int n, int k, const std::vector<int>& sigma) {
    return closed_form_basis(n, k, TermOrder(OrderFamily::degrevlex, sigma));
}

BigInt count_distinct_bases(int n, int k) {
    if (k < 2 || n < 1) throw std::invalid_argument("count_distinct_bases: require k >= 2, n >= 1");
    if (k > n) return BigInt(1);  // the basis is the squares for every order
    std::vector<long> parts{static_cast<long>(k)};
    int rest = n - k;
    while (rest >= 2) {
        parts.push_back(2);
        rest -= 2;
    }
    if (rest == 1) parts.push_back(1);
    return multinomial(n, parts);
}

}  // namespace gbsf
