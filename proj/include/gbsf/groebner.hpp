#pragma once

#include <span>
#include <vector>

#include "gbsf/monomial_ideal.hpp"
#include "gbsf/polynomial.hpp"

namespace gbsf {

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    TermOrder order;
    bool reduced = false;

    int nvars() const { return order.nvars(); }
};

// Exact element-for-element equality after sorting by leading monomial.
bool bases_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

// Buchberger's algorithm with the normal selection strategy (minimal lcm
// degree first, ties broken by pair indices), the coprime-lead and chain
// criteria, and content removal after every reduction. Deterministic.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

// The unique reduced basis of the same ideal: minimal, monic, tail-reduced.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

// Leading monomials of a reduced basis, as a minimal antichain.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

// Generators x1^2,...,xn^2, (x1+...+xn)^k of the almost complete intersection.
std::vector<Polynomial> aci_generators(int n, int k, const TermOrder& order);

}  // namespace gbsf
