#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbsf/monomial.hpp"
#include "gbsf/rational.hpp"

namespace gbsf {

// (N,E)-path from the origin, stored as a bit sequence: bit j set means the
// (j+1)-th step goes north.
struct LatticePath {
    std::vector<bool> north;

    int length() const { return static_cast<int>(north.size()); }

    static LatticePath from_bits(unsigned long bits, int length) {
        LatticePath p;
        p.north.resize(static_cast<size_t>(length));
        for (int j = 0; j < length; ++j) p.north[static_cast<size_t>(j)] = (bits >> j) & 1u;
        return p;
    }

    bool operator==(const LatticePath& other) const = default;
};

// Default cap on exhaustive 2^n path enumerations; callers may raise it.
inline constexpr int kDefaultEnumerationCap = 14;

// tau: step j is north exactly when x_j divides the monomial.
Monomial tau(const LatticePath& path);
LatticePath tau_inverse(const Monomial& m, int n);

// Smallest step index j (1-based) at which #N - #E over the first j steps
// equals k, if any.
std::optional<int> first_touch(const LatticePath& path, int k);

BigInt catalan_number(int r);

struct CatalanTable {
    int fold = 0;
    std::vector<BigInt> values;  // values[r] = C_r^fold
};

// Coefficients of (sum_i C_i t^i)^(fold+1) up to t^rmax.
CatalanTable catalan_table(int fold, int rmax);
BigInt catalan_convolution(int r, int fold);

// Degree d -> number of degree-d elements beyond the squares in the reduced
// basis; degree k+r carries C_r^{k-1} when n >= 2r+k and is absent otherwise.
std::map<int, BigInt> count_generators_by_degree(int n, int k);

// Number of degree-d monomials outside the initial ideal of the almost
// complete intersection: 0 when 2d-k >= n, else C(n,d) - C(n,d-k).
BigInt count_standard_monomials(int n, int k, int d);

struct HilbertSeries {
    std::vector<BigInt> coefficients;  // h_0 .. h_D, truncated

    bool operator==(const HilbertSeries& other) const = default;
};

// Coefficients of (1+t)^n (1-t^k) truncated at the first non-positive one.
HilbertSeries hilbert_series(int n, int k);

// Brute-force count of length-n paths with d north steps that touch y = x + k,
// by scanning all 2^n bit patterns. Test oracle; guarded by `cap`.
BigInt count_paths_touching_exhaustive(int n, int d, int k, int cap = kDefaultEnumerationCap);

// Brute-force count of first-touch-at-last-step paths of length 2r+k; equals
// catalan_convolution(r, k-1). Test oracle; guarded by `cap`.
BigInt count_first_touch_paths_exhaustive(int r, int k, int cap = kDefaultEnumerationCap);

// Small text rendering of a path on its bounding grid, origin bottom-left.
std::string render_path(const LatticePath& path);

}  // namespace gbsf
