#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbsf/closed_form.hpp"
#include "gbsf/groebner.hpp"
#include "gbsf/lattice.hpp"

using namespace gbsf;

TEST_CASE("tau maps the all-east path to the monomial 1") {
    LatticePath p = LatticePath::from_bits(0, 6);
    CHECK(tau(p).is_one());
}

TEST_CASE("tau inverse of x1*x3*x4 is N,E,N,N,E") {
    Monomial m = Monomial::from_support(5, std::vector<int>{1, 3, 4});
    LatticePath p = tau_inverse(m, 5);
    CHECK(p.north == std::vector<bool>{true, false, true, true, false});
    CHECK(tau(p) == m);
}

TEST_CASE("tau round-trips over all paths up to length 12") {
    for (int n = 0; n <= 12; ++n)
        for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
            LatticePath p = LatticePath::from_bits(bits, n);
            CHECK(tau_inverse(tau(p), n) == p);
        }
}

TEST_CASE("tau inverse rejects non-squarefree monomials") {
    CHECK_THROWS_AS(tau_inverse(Monomial::variable(3, 1, 2), 3), std::invalid_argument);
}

TEST_CASE("first touch positions") {
    LatticePath nn = LatticePath::from_bits(0b11, 2);
    CHECK(first_touch(nn, 2) == 2);
    Monomial m = Monomial::from_support(5, std::vector<int>{1, 3, 4});
    CHECK(first_touch(tau_inverse(m, 5), 2) == 4);  // 2d - k with d = 3
    CHECK(!first_touch(LatticePath::from_bits(0, 5), 1).has_value());
}

TEST_CASE("catalan numbers and convolutions") {
    std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132};
    for (int r = 0; r < static_cast<int>(catalan.size()); ++r)
        CHECK(catalan_convolution(r, 0) == BigInt(catalan[static_cast<size_t>(r)]));
    // C_n^1 = C_{n+1}
    for (int r = 0; r <= 5; ++r) CHECK(catalan_convolution(r, 1) == catalan_number(r + 1));
    CHECK(catalan_convolution(2, 2) == 9);
}

TEST_CASE("catalan convolutions match the first-touch path count") {
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; 2 * r + k <= 14; ++r) {
            if (r > 5) break;
            CHECK(catalan_convolution(r, k - 1) == count_first_touch_paths_exhaustive(r, k));
        }
}

TEST_CASE("generator counts by degree") {
    auto counts52 = count_generators_by_degree(5, 2);
    CHECK(counts52 == std::map<int, BigInt>{{2, BigInt(1)}, {3, BigInt(2)}});
    auto counts44 = count_generators_by_degree(4, 4);
    CHECK(counts44 == std::map<int, BigInt>{{4, BigInt(1)}});
    auto counts82 = count_generators_by_degree(8, 2);
    CHECK(counts82 == std::map<int, BigInt>{
                          {2, BigInt(1)}, {3, BigInt(2)}, {4, BigInt(5)}, {5, BigInt(14)}});
}

TEST_CASE("generator counts agree with admissible set enumeration") {
    for (int k = 2; k <= 5; ++k)
        for (int n = k; n <= 11; ++n) {
            auto counts = count_generators_by_degree(n, k);
            auto family = admissible_sets(n, k);
            for (const auto& [d, count] : counts)
                CHECK(count == BigInt(family[d].size()));
            size_t total = 0;
            for (const auto& [d, bucket] : family) total += bucket.size();
            BigInt total_counts = 0;
            for (const auto& [d, c] : counts) total_counts += c;
            CHECK(total_counts == BigInt(total));
        }
}

TEST_CASE("standard monomial counts") {
    CHECK(count_standard_monomials(5, 2, 3) == 5);
    CHECK(count_standard_monomials(7, 3, 0) == 1);
    CHECK(count_standard_monomials(4, 2, 3) == 0);  // 2d - k >= n
}

TEST_CASE("hilbert series values") {
    CHECK(hilbert_series(5, 2).coefficients ==
          std::vector<BigInt>{BigInt(1), BigInt(5), BigInt(9), BigInt(5)});
    CHECK(hilbert_series(4, 2).coefficients == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(5)});
    CHECK(hilbert_series(3, 3).coefficients == std::vector<BigInt>{BigInt(1), BigInt(3), BigInt(3)});
    // k = 1: binomial differences while positive
    CHECK(hilbert_series(5, 1).coefficients == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(5)});
}

TEST_CASE("hilbert series coefficients equal the standard monomial counts") {
    for (int k = 1; k <= 6; ++k)
        for (int n = std::max(k, 2); n <= 12; ++n) {
            HilbertSeries hs = hilbert_series(n, k);
            for (int d = 0; d < static_cast<int>(hs.coefficients.size()); ++d)
                CHECK(hs.coefficients[static_cast<size_t>(d)] == count_standard_monomials(n, k, d));
            CHECK(count_standard_monomials(n, k, static_cast<int>(hs.coefficients.size())) == 0);
        }
}

TEST_CASE("ballot identity: touching paths are counted by a binomial") {
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int d = 0; d <= n; ++d) {
                if (2 * d - k >= n) continue;
                CHECK(count_paths_touching_exhaustive(n, d, k) == binomial(n, d - k));
            }
}

TEST_CASE("divisibility lemma: squarefree membership in the staircase matches touching") {
    for (int k = 2; k <= 10; ++k)
        for (int n = std::max(k, 2); n <= 10; ++n) {
            TermOrder o = degrevlex(n);
            MonomialIdeal staircase =
                initial_ideal(reduce_basis(buchberger(aci_generators(n, k, o), o)));
            for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
                LatticePath p = LatticePath::from_bits(bits, n);
                Monomial m = tau(p);
                CHECK(staircase.contains(m) == first_touch(p, k).has_value());
            }
        }
}

TEST_CASE("generator count plus squares equals basis size") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 9; ++n) {
            auto counts = count_generators_by_degree(n, k);
            BigInt total = n;
            for (const auto& [d, c] : counts) total += c;
            GroebnerBasis closed = closed_form_basis(n, k, degrevlex(n));
            CHECK(total == BigInt(closed.generators.size()));
        }
}

TEST_CASE("enumeration cap guards the exhaustive counters") {
    CHECK_THROWS_AS(count_paths_touching_exhaustive(20, 3, 2), std::invalid_argument);
    CHECK(count_paths_touching_exhaustive(16, 3, 2, 16) > 0);
}

TEST_CASE("path rendering shows the right footprint") {
    Monomial m = Monomial::from_support(5, std::vector<int>{1, 3, 4});
    std::string art = render_path(tau_inverse(m, 5));
    int norths = 0, easts = 0;
    for (char c : art) {
        if (c == '|') ++norths;
        if (c == '_') ++easts;
    }
    CHECK(norths == 3);
    CHECK(easts == 2);
}
