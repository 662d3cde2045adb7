#include "gbsf/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gbsf {

bool bases_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.generators.size() != b.generators.size()) return false;
    // Canonical form: each polynomial as its sorted term list, then the
    // basis as a sorted list of those. Insensitive to element order and to
    // the active term orders on either side.
    auto canonical = [](const GroebnerBasis& basis) {
        std::vector<std::vector<std::pair<Monomial, Rational>>> out;
        for (const Polynomial& g : basis.generators) {
            std::vector<std::pair<Monomial, Rational>> terms;
            for (const Term& t : g.terms()) terms.emplace_back(t.mono, t.coeff);
            std::sort(terms.begin(), terms.end());
            out.push_back(std::move(terms));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return canonical(a) == canonical(b);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    Polynomial a = (f.order() == order) ? f : f.with_order(order);
    Polynomial b = (g.order() == order) ? g : g.with_order(order);
    Monomial l = a.leading_monomial().lcm(b.leading_monomial());
    Polynomial lhs = a.times_monomial(Rational(1) / a.leading_coefficient(),
                                      l.divide_exact(a.leading_monomial()));
    Polynomial rhs = b.times_monomial(Rational(1) / b.leading_coefficient(),
                                      l.divide_exact(b.leading_monomial()));
    return lhs - rhs;
}

namespace {

struct PairKey {
    int lcm_degree;
    size_t i, j;
    bool operator<(const PairKey& other) const {
        return std::tie(lcm_degree, i, j) < std::tie(other.lcm_degree, other.i, other.j);
    }
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
        Polynomial h = g.with_order(order);
        // Reducing each input against the ones already kept shrinks dense
        // inputs such as expanded powers before any pairs are formed.
        if (!basis.empty()) h = normal_form(h, basis, order);
        if (!h.is_zero()) basis.push_back(h.primitive_part());
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

    std::map<PairKey, std::pair<size_t, size_t>> pending;
    std::set<std::pair<size_t, size_t>> pending_pairs;
    auto push_pair = [&](size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
        pending[{l.degree(), i, j}] = {i, j};
        pending_pairs.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        auto it = pending.begin();
        auto [i, j] = it->second;
        pending.erase(it);
        pending_pairs.erase({i, j});

        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (li.coprime(lj)) continue;  // first criterion
        // Chain criterion: drop (i,j) when some h divides lcm(i,j) and both
        // companion pairs have already been handled.
        Monomial l = li.lcm(lj);
        bool skip = false;
        for (size_t h = 0; h < basis.size() && !skip; ++h) {
            if (h == i || h == j) continue;
            if (!basis[h].leading_monomial().divides(l)) continue;
            auto p1 = std::minmax(i, h);
            auto p2 = std::minmax(j, h);
            if (!pending_pairs.count({p1.first, p1.second}) &&
                !pending_pairs.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[i], basis[j], order);
        Polynomial r = normal_form(s, basis, order);
        if (!r.is_zero()) {
            basis.push_back(r.primitive_part());
            for (size_t t = 0; t + 1 < basis.size(); ++t) push_pair(t, basis.size() - 1);
        }
    }
    return GroebnerBasis{std::move(basis), order, false};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
    return buchberger(std::span<const Polynomial>(gens), order);
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
    const TermOrder& order = basis.order;
    // Minimize: keep only generators whose leading monomial is not divisible
    // by another kept one.
    std::vector<Polynomial> gens;
    for (const Polynomial& g : basis.generators) {
        if (g.is_zero()) continue;
        gens.push_back(g.order() == order ? g : g.with_order(order));
    }
    std::sort(gens.begin(), gens.end(), [&order](const Polynomial& f, const Polynomial& g) {
        return order.less(f.leading_monomial(), g.leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : gens) {
        bool redundant = false;
        for (const Polynomial& kept : minimal) {
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    // Tail-reduce each element against the others and normalize to monic.
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (others.empty()) {
            reduced[i] = reduced[i].monic();
            continue;
        }
        const Term& lt = minimal[i].leading_term();
        Polynomial tail = minimal[i] - Polynomial::monomial(lt.coeff, lt.mono, order);
        Polynomial nf_tail = normal_form(tail, others, order);
        reduced[i] = (Polynomial::monomial(lt.coeff, lt.mono, order) + nf_tail).monic();
    }
    // Present in descending leading-monomial order.
    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& f, const Polynomial& g) {
        return order.greater(f.leading_monomial(), g.leading_monomial());
    });
    return GroebnerBasis{std::move(reduced), order, true};
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
    std::vector<Monomial> lts;
    lts.reserve(basis.generators.size());
    for (const Polynomial& g : basis.generators) {
        Polynomial h = g.order() == basis.order ? g : g.with_order(basis.order);
        lts.push_back(h.leading_monomial());
    }
    return MonomialIdeal::from_generators(basis.nvars(), std::move(lts));
}

std::vector<Polynomial> aci_generators(int n, int k, const TermOrder& order) {
    if (order.nvars() != n) throw std::invalid_argument("aci_generators: order size mismatch");
    if (n < 1 || k < 1) throw std::invalid_argument("aci_generators: require n, k >= 1");
    std::vector<Polynomial> gens;
    for (int v = 1; v <= n; ++v)
        gens.push_back(Polynomial::monomial(Rational(1), Monomial::variable(n, v, 2), order));
    std::vector<Rational> ones(static_cast<size_t>(n), Rational(1));
    gens.push_back(expand_power_linear(ones, k, order));
    return gens;
}

}  // namespace gbsf
