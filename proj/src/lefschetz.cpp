#include "gbsf/lefschetz.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <stdexcept>

#include "gbsf/closed_form.hpp"
#include "gbsf/lattice.hpp"

namespace gbsf {

bool classify_wlp(int n, int k) {
    if (n < 2 || k < 2) throw std::invalid_argument("classify_wlp: require n, k >= 2");
    if (n % 2 == 1) return 2 * k >= n - 3;
    return 2 * k >= n;
}

std::vector<Monomial> quotient_standard_basis(const MonomialIdeal& staircase, int d,
                                              const TermOrder& order) {
    if (d < 0) return {};
    return staircase.standard_monomials(d, order);
}

MultiplicationMap multiplication_matrix(const std::vector<Rational>& ell, int power,
                                        const GroebnerBasis& quotient, int d) {
    if (power < 0) throw std::invalid_argument("multiplication_matrix: negative power");
    const TermOrder& order = quotient.order;
    if (static_cast<int>(ell.size()) != order.nvars())
        throw std::invalid_argument("multiplication_matrix: coefficient count mismatch");
    MonomialIdeal staircase = initial_ideal(quotient);
    MultiplicationMap map;
    map.source_degree = d;
    map.target_degree = d + power;
    map.source_basis = staircase.standard_monomials(d, order);
    map.target_basis = staircase.standard_monomials(d + power, order);

    Polynomial ellk = expand_power_linear(ell, power, order);
    Polynomial ellk_nf = normal_form(ellk, quotient.generators, order);

    std::map<Monomial, size_t> row_index;
    for (size_t r = 0; r < map.target_basis.size(); ++r) row_index.emplace(map.target_basis[r], r);

    map.matrix.assign(map.target_basis.size(),
                      std::vector<Rational>(map.source_basis.size(), Rational(0)));
    for (size_t c = 0; c < map.source_basis.size(); ++c) {
        Polynomial image = ellk_nf.times_monomial(Rational(1), map.source_basis[c]);
        image = normal_form(image, quotient.generators, order);
        for (const Term& t : image.terms()) {
            auto it = row_index.find(t.mono);
            if (it == row_index.end())
                throw std::logic_error("multiplication_matrix: image leaves the standard basis");
            map.matrix[it->second][c] = t.coeff;
        }
    }
    return map;
}

namespace {

std::vector<Rational> random_distinct_coefficients(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, (1L << 31));
    std::set<long> used;
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(nvars));
    while (static_cast<int>(out.size()) < nvars) {
        long v = dist(rng);
        if (used.insert(v).second) out.push_back(Rational(v));
    }
    return out;
}

}  // namespace

GenericRankResult generic_rank(const std::function<MultiplicationMap(const std::vector<Rational>&)>& factory,
                               int nvars, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("generic_rank: require trials >= 1");
    GenericRankResult result;
    int best_screen = -1;
    RationalMatrix best_matrix;
    int required = 0;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(t));
        std::vector<Rational> coeffs = random_distinct_coefficients(nvars, rng);
        MultiplicationMap map = factory(coeffs);
        required = map.required_rank();
        ++result.trials_used;
        int screen = rank_mod_p(map.matrix);  // lower bound on the exact rank
        if (screen > best_screen) {
            best_screen = screen;
            best_matrix = map.matrix;
        }
        if (screen == required) break;  // full already certain; certify below
    }
    result.rank = rank_exact(best_matrix);
    result.certified_full = (result.rank == required);
    return result;
}

namespace {

void check_generic_coefficients(const std::vector<Rational>& a) {
    std::set<Rational> seen;
    for (const Rational& v : a) {
        if (v == 0) throw std::invalid_argument("syzygy witness: zero coefficient");
        if (!seen.insert(v).second)
            throw std::invalid_argument("syzygy witness: repeated coefficient");
    }
}

// SFP(ell^t) = t! * sum_{|T|=t} a_T x_T, built directly on the squarefree part.
Polynomial sfp_power_linear(const std::vector<Rational>& a, int t, const TermOrder& order) {
    int n = order.nvars();
    if (t < 0) throw std::invalid_argument("sfp_power_linear: negative power");
    if (t > n) return Polynomial::zero(order);
    Rational tfac(factorial(t));
    std::vector<Term> terms;
    std::vector<int> pick;
    auto walk = [&](auto&& self, int start, const Rational& prod) -> void {
        if (static_cast<int>(pick.size()) == t) {
            terms.push_back(Term{prod * tfac, Monomial::from_support(n, pick)});
            return;
        }
        for (int v = start; v <= n - (t - static_cast<int>(pick.size())) + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1, prod * a[static_cast<size_t>(v - 1)]);
            pick.pop_back();
        }
    };
    walk(walk, 1, Rational(1));
    return Polynomial::from_terms(std::move(terms), order);
}

// sum over subsets T of size tsize of coeff(T) x_T with
// coeff(T) = sum_i weights[i] * sum_{|S| = tsize', |S cap T| = i} value(S),
// where value(S) = prod(a)/a_S. Used by both witness constructions.
Polynomial stratified_sum(const std::vector<Rational>& a, int tsize, int ssize,
                          const std::vector<Rational>& weights, const TermOrder& order) {
    int n = order.nvars();
    Rational prod_all(1);
    for (const Rational& v : a) prod_all *= v;

    // Precompute all S of the right size with their values.
    std::vector<std::pair<std::vector<int>, Rational>> strata;
    std::vector<int> pick;
    auto walkS = [&](auto&& self, int start, const Rational& prod) -> void {
        if (static_cast<int>(pick.size()) == ssize) {
            strata.emplace_back(pick, prod_all / prod);
            return;
        }
        for (int v = start; v <= n - (ssize - static_cast<int>(pick.size())) + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1, prod * a[static_cast<size_t>(v - 1)]);
            pick.pop_back();
        }
    };
    walkS(walkS, 1, Rational(1));

    std::vector<Term> terms;
    std::vector<int> tpick;
    auto walkT = [&](auto&& self, int start) -> void {
        if (static_cast<int>(tpick.size()) == tsize) {
            Rational coeff(0);
            for (const auto& [S, value] : strata) {
                int overlap = 0;
                size_t si = 0, ti = 0;
                while (si < S.size() && ti < tpick.size()) {
                    if (S[si] == tpick[ti]) ++overlap, ++si, ++ti;
                    else if (S[si] < tpick[ti]) ++si;
                    else ++ti;
                }
                if (overlap < static_cast<int>(weights.size()))
                    coeff += weights[static_cast<size_t>(overlap)] * value;
            }
            if (coeff != 0)
                terms.push_back(Term{coeff, Monomial::from_support(n, tpick)});
            return;
        }
        for (int v = start; v <= n - (tsize - static_cast<int>(tpick.size())) + 1; ++v) {
            tpick.push_back(v);
            self(self, v + 1);
            tpick.pop_back();
        }
    };
    walkT(walkT, 1);
    return Polynomial::from_terms(std::move(terms), order);
}

// Scalar c with lhs = c * rhs, if one exists; throws otherwise.
Rational match_scalar(const Polynomial& lhs, const Polynomial& rhs) {
    if (rhs.is_zero()) {
        if (lhs.is_zero()) return Rational(1);
        throw std::logic_error("syzygy witness: proportionality failed (zero side)");
    }
    const Term& probe = rhs.leading_term();
    Rational c = lhs.coefficient_of(probe.mono) / probe.coeff;
    if (!(lhs == rhs * c))
        throw std::logic_error("syzygy witness: proportionality failed");
    return c;
}

Polynomial squarefree_square_sum(const TermOrder& order) {
    // (x_1 + ... + x_n)^2 as a polynomial; squares included.
    std::vector<Rational> ones(static_cast<size_t>(order.nvars()), Rational(1));
    return expand_power_linear(ones, 2, order);
}

// ell' = sum_i (p a_i - sum_{j != i} a_j) a_i x_i.
Polynomial odd_lprime(const std::vector<Rational>& a, int p, const TermOrder& order) {
    int n = order.nvars();
    Rational total(0);
    for (const Rational& v : a) total += v;
    std::vector<Term> lterms;
    for (int i = 1; i <= n; ++i) {
        const Rational& ai = a[static_cast<size_t>(i - 1)];
        Rational coeff = (Rational(p) * ai - (total - ai)) * ai;
        if (coeff != 0) lterms.push_back(Term{coeff, Monomial::variable(n, i)});
    }
    return Polynomial::from_terms(std::move(lterms), order);
}

void check_odd_witness_args(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    int n = static_cast<int>(a.size());
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("syzygy_witness_odd: require odd n >= 3");
    check_generic_coefficients(a);
    if (static_cast<int>(b.size()) != (n - 1) / 2)
        throw std::invalid_argument("syzygy_witness_odd: b must have p entries");
}

}  // namespace

SyzygyWitness syzygy_witness_odd(const std::vector<Rational>& a) {
    int n = static_cast<int>(a.size());
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("syzygy_witness_odd: require odd n >= 3");
    int p = (n - 1) / 2;
    // Triangular system sum_i C(s,i) C(p+1-s, p-1-i) b_i = 0, s = 1..p-1,
    // pinned by C(p+1, p-1) b_0 = 1.
    std::vector<Rational> b(static_cast<size_t>(p));
    b[0] = make_rational(BigInt(1), binomial(p + 1, 2));
    for (int s = 1; s <= p - 1; ++s) {
        Rational acc(0);
        for (int i = 0; i < s; ++i)
            acc += Rational(binomial(s, i) * binomial(p + 1 - s, p - 1 - i)) * b[static_cast<size_t>(i)];
        BigInt diag = binomial(p + 1 - s, p - 1 - s);
        b[static_cast<size_t>(s)] = -acc / Rational(diag);
    }
    check_odd_witness_args(a, b);
    TermOrder order = degrevlex(n);
    Polynomial lprime = odd_lprime(a, p, order);
    Polynomial g0 = stratified_sum(a, p - 1, p - 1, b, order);
    Polynomial lhs = multiply_sfp(sfp_power_linear(a, p, order), lprime);
    Polynomial rhs = multiply_sfp(squarefree_square_sum(order), g0);
    Rational c = match_scalar(lhs, rhs);
    return SyzygyWitness{SyzygyWitness::Variant::odd, a, lprime, Polynomial::zero(order),
                         g0 * c, b, {}};
}

// Takes b as given: no normalization and no rescaling of g.
SyzygyWitness syzygy_witness_odd_with_b(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    check_odd_witness_args(a, b);
    int n = static_cast<int>(a.size());
    int p = (n - 1) / 2;
    TermOrder order = degrevlex(n);
    Polynomial lprime = odd_lprime(a, p, order);
    Polynomial g0 = stratified_sum(a, p - 1, p - 1, b, order);
    return SyzygyWitness{SyzygyWitness::Variant::odd, a, lprime, Polynomial::zero(order),
                         g0, b, {}};
}

SyzygyWitness syzygy_witness_even(const std::vector<Rational>& a) {
    int n = static_cast<int>(a.size());
    if (n < 6 || n % 2 == 1)
        throw std::invalid_argument("syzygy_witness_even: require even n >= 6");
    check_generic_coefficients(a);
    int p = n / 2;
    TermOrder order = degrevlex(n);

    // lambda_2 + 2(p-2) lambda_1 + C(p-2,2) lambda_0 = 0
    // (p-1) lambda_1 + C(p-1,2) lambda_0 = 0, pinned by lambda_0 = 2.
    std::vector<Rational> lambda(3);
    lambda[0] = Rational(2);
    lambda[1] = -Rational(binomial(p - 1, 2)) * lambda[0] / Rational(p - 1);
    lambda[2] = -Rational(2 * (p - 2)) * lambda[1] - Rational(binomial(p - 2, 2)) * lambda[0];

    // f = sum_{|T|=2} a_T (sum_i lambda_i sum_{S in T_i} a_S) x_T.
    Rational prod_all(1);
    for (const Rational& v : a) prod_all *= v;
    std::vector<Term> fterms;
    for (int t1 = 1; t1 <= n; ++t1) {
        for (int t2 = t1 + 1; t2 <= n; ++t2) {
            Rational inner(0);
            for (int s1 = 1; s1 <= n; ++s1) {
                for (int s2 = s1 + 1; s2 <= n; ++s2) {
                    int overlap = (s1 == t1 || s1 == t2 ? 1 : 0) + (s2 == t1 || s2 == t2 ? 1 : 0);
                    inner += lambda[static_cast<size_t>(overlap)] *
                             a[static_cast<size_t>(s1 - 1)] * a[static_cast<size_t>(s2 - 1)];
                }
            }
            Rational coeff = a[static_cast<size_t>(t1 - 1)] * a[static_cast<size_t>(t2 - 1)] * inner;
            if (coeff != 0)
                fterms.push_back(Term{coeff, Monomial::from_support(n, std::vector<int>{t1, t2})});
        }
    }
    Polynomial f = Polynomial::from_terms(std::move(fterms), order);

    // f must not be proportional to SFP((sum x)^2): its nonzero coefficients
    // cannot all agree.
    bool spread = false;
    for (const Term& t : f.terms())
        if (t.coeff != f.terms().front().coeff) spread = true;
    if (!spread)
        throw std::invalid_argument("syzygy_witness_even: degenerate coefficients (no spread)");

    // Triangular system sum_i C(s,i) C(p-s, p-2-i) b_i = 0, s = 1..p-2,
    // pinned by C(p, p-2) b_0 = 1.
    std::vector<Rational> b(static_cast<size_t>(p - 1));
    b[0] = make_rational(BigInt(1), binomial(p, 2));
    for (int s = 1; s <= p - 2; ++s) {
        Rational acc(0);
        for (int i = 0; i < s; ++i)
            acc += Rational(binomial(s, i) * binomial(p - s, p - 2 - i)) * b[static_cast<size_t>(i)];
        BigInt diag = binomial(p - s, p - 2 - s);
        b[static_cast<size_t>(s)] = -acc / Rational(diag);
    }

    Polynomial g0 = stratified_sum(a, p - 2, p - 2, b, order);
    Polynomial lhs = multiply_sfp(sfp_power_linear(a, p - 2, order), f);
    Polynomial rhs = multiply_sfp(squarefree_square_sum(order), g0);
    Rational c = match_scalar(lhs, rhs);

    return SyzygyWitness{SyzygyWitness::Variant::even, a, Polynomial::zero(order), f,
                         g0 * c, b, lambda};
}

bool verify_witness(const SyzygyWitness& w) {
    int n = static_cast<int>(w.a.size());
    TermOrder order = degrevlex(n);
    Polynomial sq = squarefree_square_sum(order);
    if (w.variant == SyzygyWitness::Variant::odd) {
        int p = (n - 1) / 2;
        Polynomial ellp = sfp(expand_power_linear(w.a, p, order));
        Polynomial lhs = multiply_sfp(ellp, w.lprime);
        Polynomial rhs = multiply_sfp(sq, w.g);
        return lhs == rhs;
    }
    int p = n / 2;
    Polynomial ellp = sfp(expand_power_linear(w.a, p - 2, order));
    Polynomial lhs = multiply_sfp(ellp, w.f);
    Polynomial rhs = multiply_sfp(sq, w.g);
    return lhs == rhs;
}

namespace {

struct MapCheck {
    int d;
    int required;
    bool full;
    int ones_rank;
};

// Staircase of the (m,2) quadric almost complete intersection as a reduced
// monomial basis, the default rank arena (Groebner deformation).
GroebnerBasis deformation_basis(const GroebnerBasis& reduced) {
    MonomialIdeal staircase = initial_ideal(reduced);
    std::vector<Polynomial> gens;
    for (const Monomial& m : staircase.minimal_generators())
        gens.push_back(Polynomial::monomial(Rational(1), m, reduced.order));
    return GroebnerBasis{std::move(gens), reduced.order, true};
}

}  // namespace

WlpVerdict verify_wlp(int n, int k, int trials, uint64_t seed, bool use_original_algebra,
                      int threads) {
    if (n < 2 || k < 2) throw std::invalid_argument("verify_wlp: require n, k >= 2");
    if (n > 12) throw std::invalid_argument("verify_wlp: supported up to n = 12");
    if (trials < 1) throw std::invalid_argument("verify_wlp: require trials >= 1");
    WlpVerdict verdict;
    verdict.n = n;
    verdict.k = k;

    int m = n - 1;
    if (m == 1) {
        // One-variable quadric quotient: every ell^k with k >= 2 maps into or
        // out of a zero space.
        verdict.holds = true;
        return verdict;
    }

    TermOrder order = degrevlex(m);
    GroebnerBasis reduced = closed_form_basis(m, 2, order);
    GroebnerBasis arena = use_original_algebra ? reduced : deformation_basis(reduced);

    // Socle degree of the quadric quotient.
    int socle = 0;
    while (count_standard_monomials(m, 2, socle + 1) > 0) ++socle;

    std::vector<Rational> ones(static_cast<size_t>(m), Rational(1));
    std::vector<int> candidates;
    for (int d = 0; d + k <= socle; ++d) candidates.push_back(d);

    auto check_degree = [&](int d) -> MapCheck {
        if (use_original_algebra) {
            // The all-ones form squares to zero on the original algebra, so
            // ranks there come from random trials.
            GenericRankResult r = generic_rank(
                [&](const std::vector<Rational>& coeffs) {
                    return multiplication_matrix(coeffs, k, arena, d);
                },
                m, trials, seed + static_cast<uint64_t>(d) * 104729);
            int required = static_cast<int>(
                std::min(count_standard_monomials(m, 2, d).get_ui(),
                         count_standard_monomials(m, 2, d + k).get_ui()));
            return MapCheck{d, required, r.certified_full, r.rank};
        }
        MultiplicationMap map = multiplication_matrix(ones, k, arena, d);
        int required = map.required_rank();
        int r = rank_exact(map.matrix);
        return MapCheck{d, required, r == required, r};
    };

    std::vector<MapCheck> checks;
    if (threads > 1 && candidates.size() > 1) {
        std::vector<std::future<MapCheck>> futures;
        for (int d : candidates)
            futures.push_back(std::async(std::launch::async, check_degree, d));
        for (auto& fut : futures) checks.push_back(fut.get());
    } else {
        for (int d : candidates) checks.push_back(check_degree(d));
    }

    for (const MapCheck& check : checks) {
        if (check.full) continue;
        // Deficit on the deformation; gather random-trial evidence on the
        // original algebra, where the verdict actually lives.
        GenericRankResult evidence = generic_rank(
            [&](const std::vector<Rational>& coeffs) {
                return multiplication_matrix(coeffs, k, reduced, check.d);
            },
            m, trials, seed + static_cast<uint64_t>(check.d) * 7919);
        int best = std::max(check.ones_rank, evidence.rank);
        verdict.failing.push_back(
            WlpFailingMap{check.d, check.d + k, best, check.required, evidence.trials_used});
        if (evidence.certified_full)
            verdict.inconclusive = true;  // deformation and original disagree
    }

    verdict.holds = verdict.failing.empty();

    if (!verdict.holds) {
        // Attach the syzygy-derived kernel element for the parity that applies.
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<Rational> a = random_distinct_coefficients(m, rng);
        TermOrder worder = degrevlex(m);
        std::optional<Polynomial> kernel;
        if (m % 2 == 1) {
            int p = (m - 1) / 2;
            if (k <= p) {
                SyzygyWitness w = syzygy_witness_odd(a);
                kernel = multiply_sfp(sfp_power_linear(a, p - k, worder), w.lprime);
                verdict.witness = std::move(w);
            }
        } else {
            int p = m / 2;
            if (p >= 3 && k <= p - 2) {
                SyzygyWitness w = syzygy_witness_even(a);
                kernel = multiply_sfp(sfp_power_linear(a, p - 2 - k, worder), w.f);
                verdict.witness = std::move(w);
            }
        }
        if (kernel.has_value()) {
            Polynomial z_nf = normal_form(*kernel, reduced.generators, order);
            Polynomial image = multiply_sfp(sfp_power_linear(a, k, worder), *kernel);
            Polynomial image_nf = normal_form(image, reduced.generators, order);
            verdict.kernel_element = *kernel;
            verdict.kernel_verified = !z_nf.is_zero() && image_nf.is_zero();
            if (!verdict.kernel_verified) verdict.inconclusive = true;
        }
    }
    return verdict;
}

}  // namespace gbsf
