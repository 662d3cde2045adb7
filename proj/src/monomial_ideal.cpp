#include "gbsf/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbsf {

std::vector<Monomial> minimize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : out) {
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(g);
    }
    return out;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
    MonomialIdeal ideal(nvars);
    for (const Monomial& g : gens)
        if (g.nvars() != nvars)
            throw std::invalid_argument("MonomialIdeal: generator variable count mismatch");
    ideal.gens_ = minimize_generators(std::move(gens));
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d, const TermOrder& order) const {
    if (order.nvars() != nvars_)
        throw std::invalid_argument("MonomialIdeal: order variable count mismatch");
    if (d < 0) return {};
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<size_t>(nvars_), 0);
    // Depth-first over exponent vectors of total degree d, pruning any prefix
    // already divisible by a generator.
    auto walk = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars_) {
            if (remaining == 0) {
                Monomial m = Monomial::from_exponents(exps);
                if (!contains(m)) out.push_back(m);
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<size_t>(var)] = e;
            bool prune = false;
            if (e > 0) {
                // Prefix check: a generator supported on vars <= var+1 that
                // already divides the partial monomial kills the whole branch.
                Monomial partial = Monomial::from_exponents(exps);
                for (const Monomial& g : gens_) {
                    if (g.max_support() <= var + 1 && g.divides(partial)) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) self(self, var + 1, remaining - e);
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    walk(walk, 0, d);
    std::sort(out.begin(), out.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

}  // namespace gbsf
