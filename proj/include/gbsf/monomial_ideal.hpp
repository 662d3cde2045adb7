#pragma once

#include <vector>

#include "gbsf/monomial.hpp"
#include "gbsf/term_order.hpp"

namespace gbsf {

// Monomial ideal held by its minimal generating set (an antichain under
// divisibility), kept in a canonical sorted order.
class MonomialIdeal {
  public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

    static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& minimal_generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

    // All degree-d monomials outside the ideal, sorted descending under `order`.
    std::vector<Monomial> standard_monomials(int d, const TermOrder& order) const;

    bool operator==(const MonomialIdeal& other) const = default;

  private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// Removes generators divisible by another generator and deduplicates.
std::vector<Monomial> minimize_generators(std::vector<Monomial> gens);

}  // namespace gbsf
