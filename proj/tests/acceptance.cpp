// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; randomized steps are seeded.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gbsf/closed_form.hpp"
#include "gbsf/groebner.hpp"
#include "gbsf/lattice.hpp"
#include "gbsf/lefschetz.hpp"
#include "gbsf/poly_io.hpp"
#include "gbsf/resolution.hpp"

using namespace gbsf;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string label, double time_target_seconds = 0)
        : number_(number),
          label_(std::move(label)),
          time_target_(time_target_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!detail.empty()) details_.push_back(detail);
        }
    }

    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (time_target_ > 0 && elapsed > time_target_) {
            ok_ = false;
            std::ostringstream d;
            d << "runtime " << elapsed << " s exceeds the " << time_target_ << " s target";
            details_.push_back(d.str());
        }
        std::ostringstream line;
        line << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": " << label_ << " ("
             << elapsed << " s)";
        std::cout << line.str() << "\n";
        for (const std::string& n : notes_) std::cout << "       note: " << n << "\n";
        for (const std::string& d : details_) std::cout << "       detail: " << d << "\n";
        if (!ok_) ++failures;
    }

  private:
    int number_;
    std::string label_;
    bool ok_ = true;
    double time_target_;
    std::vector<std::string> details_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> random_ranking(int n, std::mt19937_64& rng) {
    std::vector<int> sigma;
    for (int v = 1; v <= n; ++v) sigma.push_back(v);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

std::vector<Rational> random_distinct(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 1L << 31);
    std::set<long> used;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
        long v = dist(rng);
        if (used.insert(v).second) out.push_back(Rational(v));
    }
    return out;
}

MonomialIdeal staircase_ideal(int n, int k) {
    std::vector<Monomial> gens = squarefree_staircase_generators(n, k);
    for (int v = 1; v <= n; ++v) gens.push_back(Monomial::variable(n, v, 2));
    return MonomialIdeal::from_generators(n, gens);
}

void criterion_1() {
    Criterion c(1, "oracle equivalence for 2 <= k <= n <= 8 under degrevlex, lex, and random rankings",
                300.0);
    for (int n = 2; n <= 8; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (OrderFamily family : {OrderFamily::degrevlex, OrderFamily::lex}) {
                std::mt19937_64 rng(1000003ull * static_cast<uint64_t>(n) + 97ull * static_cast<uint64_t>(k) +
                                    (family == OrderFamily::lex ? 7 : 0));
                std::vector<std::vector<int>> rankings;
                std::vector<int> identity;
                for (int v = 1; v <= n; ++v) identity.push_back(v);
                rankings.push_back(identity);
                for (int t = 0; t < 5; ++t) rankings.push_back(random_ranking(n, rng));
                for (const std::vector<int>& sigma : rankings) {
                    TermOrder order(family, sigma);
                    GroebnerBasis closed = closed_form_basis(n, k, order);
                    GroebnerBasis oracle =
                        reduce_basis(buchberger(aci_generators(n, k, order), order));
                    std::ostringstream id;
                    id << "(" << n << "," << k << ") " << order_to_string(order);
                    c.check(bases_equal(closed, oracle), "mismatch at " + id.str());
                }
            }
        }
    }
}

void criterion_2() {
    Criterion c(2, "exact reproduction of the worked (5,2) basis");
    TermOrder o = degrevlex(5);
    GroebnerBasis basis = closed_form_basis(5, 2, o);
    std::vector<Polynomial> expected;
    for (int v = 1; v <= 5; ++v)
        expected.push_back(Polynomial::monomial(Rational(1), Monomial::variable(5, v, 2), o));
    expected.push_back(elementary_symmetric(2, std::vector<int>{1, 2, 3, 4, 5}, o));
    expected.push_back(elementary_symmetric(3, std::vector<int>{1, 3, 4, 5}, o));
    expected.push_back(elementary_symmetric(3, std::vector<int>{2, 3, 4, 5}, o));
    c.check(basis.generators.size() == expected.size(), "size mismatch");
    for (const Polynomial& e : expected) {
        bool found = false;
        for (const Polynomial& g : basis.generators)
            if (g == e) found = true;
        c.check(found, "missing element " + to_text(e));
    }
}

void criterion_3() {
    Criterion c(3, "catalan generator counts vs enumeration and exhaustive paths (k <= 5, n <= 14)");
    for (int k = 2; k <= 5; ++k) {
        for (int n = 2; n <= 14; ++n) {
            auto counts = count_generators_by_degree(n, k);
            auto family = admissible_sets(n, k);
            for (int r = 0; k + 2 * r <= 20; ++r) {
                int degree = k + r;
                BigInt expected = (n >= 2 * r + k) ? catalan_convolution(r, k - 1) : BigInt(0);
                BigInt from_counts = counts.count(degree) ? counts.at(degree) : BigInt(0);
                BigInt from_family =
                    family.count(degree) ? BigInt(family.at(degree).size()) : BigInt(0);
                std::ostringstream id;
                id << "(" << n << "," << k << ") degree " << degree;
                c.check(from_counts == expected, "count table wrong at " + id.str());
                c.check(from_family == expected, "enumeration wrong at " + id.str());
                if (expected > 0 && 2 * r + k <= 14) {
                    c.check(count_first_touch_paths_exhaustive(r, k) == expected,
                            "exhaustive path count wrong at " + id.str());
                }
                if (degree > k + (n - k) / 2 + 1) break;
            }
        }
    }
}

void criterion_4() {
    Criterion c(4, "hilbert series equals oracle staircase complements (n <= 10)");
    for (int n = 2; n <= 10; ++n) {
        for (int k = 2; k <= n; ++k) {
            TermOrder o = degrevlex(n);
            MonomialIdeal staircase =
                initial_ideal(reduce_basis(buchberger(aci_generators(n, k, o), o)));
            HilbertSeries hs = hilbert_series(n, k);
            std::ostringstream id;
            id << "(" << n << "," << k << ")";
            for (int d = 0; d < static_cast<int>(hs.coefficients.size()); ++d) {
                BigInt complement(staircase.standard_monomials(d, o).size());
                c.check(complement == hs.coefficients[static_cast<size_t>(d)],
                        "coefficient mismatch at " + id.str() + " degree " + std::to_string(d));
            }
            int beyond = static_cast<int>(hs.coefficients.size());
            c.check(staircase.standard_monomials(beyond, o).empty(),
                    "truncation too early at " + id.str());
        }
    }
}

void criterion_5() {
    Criterion c(5, "distinct-basis counts reproduce the six worked values");
    auto expect = [&](int n, int k, long value) {
        std::ostringstream id;
        id << "N_{" << n << "," << k << "}";
        c.check(count_distinct_bases(n, k) == BigInt(value), id.str() + " wrong");
    };
    expect(5, 2, 30);
    expect(6, 2, 90);
    expect(7, 2, 630);
    expect(5, 3, 10);
    expect(6, 3, 60);
    expect(7, 3, 210);
}

void criterion_6() {
    Criterion c(6, "WLP verification agrees with the classification on 2 <= k <= 6, 2 <= n <= 10",
                600.0);
    for (int k = 2; k <= 6; ++k) {
        for (int n = 2; n <= 10; ++n) {
            WlpVerdict verdict = verify_wlp(n, k, 3, 20240000ull + static_cast<uint64_t>(100 * n + k));
            bool expected = classify_wlp(n, k);
            std::ostringstream id;
            id << "(" << n << "," << k << ")";
            c.check(!verdict.inconclusive, "inconclusive at " + id.str());
            c.check(verdict.holds == expected, "classification mismatch at " + id.str());
            if (!verdict.holds) {
                bool witness_ok = verdict.kernel_verified;
                bool deficit_ok = true;
                for (const WlpFailingMap& f : verdict.failing)
                    if (f.rank >= f.required || f.trials < 3) deficit_ok = false;
                c.check(!verdict.failing.empty(), "failing cell without failing maps at " + id.str());
                c.check(witness_ok || deficit_ok,
                        "failing cell lacks both witness and deficit at " + id.str());
            }
        }
    }
}

void criterion_7() {
    Criterion c(7, "syzygy witness identities, exact in the squarefree quotient");
    for (int n : {5, 7, 9}) {
        for (uint64_t t = 0; t < 3; ++t) {
            std::mt19937_64 rng(777ull + static_cast<uint64_t>(n) * 13 + t);
            SyzygyWitness w = syzygy_witness_odd(random_distinct(n, rng));
            c.check(verify_witness(w), "odd witness failed at n=" + std::to_string(n));
        }
    }
    for (int n : {6, 8}) {
        for (uint64_t t = 0; t < 3; ++t) {
            std::mt19937_64 rng(888ull + static_cast<uint64_t>(n) * 13 + t);
            SyzygyWitness w = syzygy_witness_even(random_distinct(n, rng));
            c.check(verify_witness(w), "even witness failed at n=" + std::to_string(n));
        }
    }
    // n=5 with b = (-1, 2): the identity collapses to the classical closed form
    // -6 sum_{|T|=3} a_T x_T (sum_{j not in T} a_j), with no rescaling.
    std::mt19937_64 rng(31415);
    std::vector<Rational> a = random_distinct(5, rng);
    SyzygyWitness w =
        syzygy_witness_odd_with_b(a, std::vector<Rational>{Rational(-1), Rational(2)});
    TermOrder o = degrevlex(5);
    std::vector<Term> closed_terms;
    for (int t1 = 1; t1 <= 5; ++t1)
        for (int t2 = t1 + 1; t2 <= 5; ++t2)
            for (int t3 = t2 + 1; t3 <= 5; ++t3) {
                Rational at = a[t1 - 1] * a[t2 - 1] * a[t3 - 1];
                Rational rest(0);
                for (int j = 1; j <= 5; ++j)
                    if (j != t1 && j != t2 && j != t3) rest += a[j - 1];
                closed_terms.push_back(Term{Rational(-6) * at * rest,
                                            Monomial::from_support(5, std::vector<int>{t1, t2, t3})});
            }
    Polynomial closed_form = Polynomial::from_terms(std::move(closed_terms), o);
    Polynomial lhs = multiply_sfp(sfp(expand_power_linear(a, 2, o)), w.lprime);
    std::vector<Rational> ones(5, Rational(1));
    Polynomial rhs = multiply_sfp(expand_power_linear(ones, 2, o), w.g);
    c.check(lhs == closed_form, "lhs does not match the -6 closed form");
    c.check(rhs == closed_form, "rhs does not match the -6 closed form");
    c.check(verify_witness(w), "classical witness failed verification");
}

void criterion_8() {
    Criterion c(8, "betti cross-validation: murai = MVT, certificate, pd/reg vs table extremes");
    c.note("reg closed form uses k + ceil((n-k)/2): the floor form fails for odd n-k, see (5,2) where beta_{1,5} = 2 != 0");
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 3}, {7, 3}}) {
        std::ostringstream id;
        id << "(" << n << "," << k << ")";
        BettiTable murai = betti_murai(n, k);
        MvtBettiResult mvt = betti_mvt(staircase_ideal(n, k));
        c.check(murai == mvt.graded, "murai vs MVT mismatch at " + id.str());
        c.check(mvt.minimal_certified, "minimality certificate failed at " + id.str());
        auto [pd, reg] = pd_reg(n, k);
        c.check(pd == n - 1, "pd formula mismatch at " + id.str());
        c.check(reg == k + (n - k + 1) / 2, "reg formula mismatch at " + id.str());
        c.check(murai.max_p() == pd, "pd vs table extreme at " + id.str());
        c.check(murai.max_s() == reg, "reg vs table extreme at " + id.str());
    }
    BettiTable t42 = betti_murai(4, 2);
    std::vector<std::pair<std::vector<long>, int>> rows{{{5, 2, 0, 0}, 2}, {{2, 15, 16, 5}, 3}};
    for (const auto& [row, s] : rows)
        for (int p = 0; p < 4; ++p)
            c.check(t42.get(p, s) == BigInt(row[static_cast<size_t>(p)]),
                    "worked diagram row s=" + std::to_string(s) + " mismatch");
    std::vector<long> totals{7, 17, 16, 5};
    for (int p = 0; p < 4; ++p)
        c.check(t42.total(p) == BigInt(totals[static_cast<size_t>(p)]),
                "worked totals mismatch at p=" + std::to_string(p));
}

void criterion_9() {
    Criterion c(9, "recursion lemma instances match direct computation exactly");
    c.check(betti_recursion(5, 2, betti_murai(4, 2)) == betti_murai(5, 2),
            "(4,2) -> (5,2) recursion mismatch");
    c.check(betti_recursion(6, 3, betti_murai(5, 3)) == betti_murai(6, 3),
            "(5,3) -> (6,3) recursion mismatch");
    // The lemma needs n - k odd: for (6,3) -> (7,3) the top squarefree
    // generators of the (7,3) staircase involve x7, so the tensor split that
    // the recursion rests on is unavailable. Demonstrate both facts.
    bool involves_last = false;
    for (const Monomial& g : squarefree_staircase_generators(7, 3))
        if (g.exponent(7) > 0) involves_last = true;
    c.check(involves_last, "expected x7 in the (7,3) staircase generators");
    BettiTable shifted;
    for (const auto& [key, v] : betti_murai(6, 3).entries) {
        shifted.add(key.first, key.second, v);
        shifted.add(key.first + 1, key.second + 1, v);
    }
    shifted.add(0, 2, BigInt(1));
    c.check(!(shifted == betti_murai(7, 3)), "shifted (6,3) table unexpectedly equals (7,3)");
    c.note("(6,3) -> (7,3) is ill-posed (7 - 3 even); the valid k = 3 instance (5,3) -> (6,3) is checked instead");
}

void criterion_10() {
    Criterion c(10, "extremal diagonal equals catalan convolutions for (6,2), (8,2), (7,3)");
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {8, 2}, {7, 3}}) {
        int m = (n - k) / 2;
        BettiTable table = betti_murai(n, k);
        for (int i = 0; i <= m; ++i) {
            int p = k - 1 + 2 * i;
            std::ostringstream id;
            id << "(" << n << "," << k << ") i=" << i;
            c.check(table.get(p, k + i) == catalan_convolution(i + 1, k - 1),
                    "extremal entry mismatch at " + id.str());
        }
    }
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " (total "
              << elapsed.count() << " s)\n";
    return failures == 0 ? 0 : 1;
}
