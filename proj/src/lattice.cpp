#include "gbsf/lattice.hpp"

#include <stdexcept>

namespace gbsf {

Monomial tau(const LatticePath& path) {
    Monomial m(path.length());
    for (int j = 1; j <= path.length(); ++j)
        if (path.north[static_cast<size_t>(j - 1)]) m.set_exponent(j, 1);
    return m;
}

LatticePath tau_inverse(const Monomial& m, int n) {
    if (m.nvars() != n) throw std::invalid_argument("tau_inverse: variable count mismatch");
    if (!m.is_squarefree()) throw std::invalid_argument("tau_inverse: monomial is not squarefree");
    LatticePath p;
    p.north.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) p.north[static_cast<size_t>(j - 1)] = m.exponent(j) == 1;
    return p;
}

std::optional<int> first_touch(const LatticePath& path, int k) {
    if (k < 1) throw std::invalid_argument("first_touch: require k >= 1");
    int diff = 0;
    for (int j = 1; j <= path.length(); ++j) {
        diff += path.north[static_cast<size_t>(j - 1)] ? 1 : -1;
        if (diff == k) return j;
    }
    return std::nullopt;
}

BigInt catalan_number(int r) {
    if (r < 0) throw std::invalid_argument("catalan_number: negative index");
    return binomial(2L * r, r) - binomial(2L * r, r - 1);
}

CatalanTable catalan_table(int fold, int rmax) {
    if (fold < 0 || rmax < 0) throw std::invalid_argument("catalan_table: negative argument");
    std::vector<BigInt> base(static_cast<size_t>(rmax) + 1);
    for (int r = 0; r <= rmax; ++r) base[static_cast<size_t>(r)] = catalan_number(r);
    // Truncated power series power by repeated multiplication.
    std::vector<BigInt> acc = base;
    for (int f = 0; f < fold; ++f) {
        std::vector<BigInt> next(static_cast<size_t>(rmax) + 1, BigInt(0));
        for (int i = 0; i <= rmax; ++i)
            for (int j = 0; i + j <= rmax; ++j)
                next[static_cast<size_t>(i + j)] += acc[static_cast<size_t>(i)] * base[static_cast<size_t>(j)];
        acc = std::move(next);
    }
    return CatalanTable{fold, std::move(acc)};
}

BigInt catalan_convolution(int r, int fold) {
    if (r < 0 || fold < 0) throw std::invalid_argument("catalan_convolution: negative argument");
    return catalan_table(fold, r).values[static_cast<size_t>(r)];
}

std::map<int, BigInt> count_generators_by_degree(int n, int k) {
    if (k < 2 || n < 1) throw std::invalid_argument("count_generators_by_degree: require k >= 2, n >= 1");
    std::map<int, BigInt> counts;
    if (k > n) return counts;
    int rmax = (n - k) / 2;
    CatalanTable table = catalan_table(k - 1, rmax);
    for (int r = 0; r <= rmax; ++r) counts[k + r] = table.values[static_cast<size_t>(r)];
    return counts;
}

BigInt count_standard_monomials(int n, int k, int d) {
    if (n < 1 || k < 1) throw std::invalid_argument("count_standard_monomials: require n, k >= 1");
    if (d < 0) throw std::invalid_argument("count_standard_monomials: negative degree");
    if (2 * d - k >= n) return BigInt(0);
    return binomial(n, d) - binomial(n, d - k);
}

HilbertSeries hilbert_series(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("hilbert_series: require n, k >= 1");
    HilbertSeries hs;
    for (int d = 0; d <= n; ++d) {
        BigInt c = binomial(n, d) - binomial(n, d - k);
        if (c <= 0) break;
        hs.coefficients.push_back(c);
    }
    return hs;
}

BigInt count_paths_touching_exhaustive(int n, int d, int k, int cap) {
    if (n < 0 || d < 0 || k < 1) throw std::invalid_argument("count_paths_touching_exhaustive: bad arguments");
    if (n > cap) throw std::invalid_argument("count_paths_touching_exhaustive: length exceeds enumeration cap");
    BigInt count = 0;
    for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
        if (static_cast<int>(__builtin_popcountl(bits)) != d) continue;
        LatticePath p = LatticePath::from_bits(bits, n);
        if (first_touch(p, k).has_value()) ++count;
    }
    return count;
}

BigInt count_first_touch_paths_exhaustive(int r, int k, int cap) {
    if (r < 0 || k < 1) throw std::invalid_argument("count_first_touch_paths_exhaustive: bad arguments");
    int len = 2 * r + k;
    if (len > cap) throw std::invalid_argument("count_first_touch_paths_exhaustive: length exceeds enumeration cap");
    BigInt count = 0;
    for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
        if (static_cast<int>(__builtin_popcountl(bits)) != r + k) continue;
        LatticePath p = LatticePath::from_bits(bits, len);
        auto touch = first_touch(p, k);
        if (touch.has_value() && *touch == len) ++count;
    }
    return count;
}

std::string render_path(const LatticePath& path) {
    int east = 0, north_total = 0;
    for (bool b : path.north) (b ? north_total : east)++;
    int width = std::max(east, 1), height = std::max(north_total, 1);
    std::vector<std::string> rows(static_cast<size_t>(height) + 1,
                                  std::string(static_cast<size_t>(width) * 2 + 1, ' '));
    auto put = [&](int cx, int cy, char c) {
        rows[static_cast<size_t>(height - cy)][static_cast<size_t>(cx)] = c;
    };
    int x = 0, y = 0;
    put(0, 0, '+');
    for (bool b : path.north) {
        if (b) {
            ++y;
            put(2 * x, y, '|');
        } else {
            put(2 * x + 1, y, '_');
            ++x;
        }
    }
    std::string out;
    for (const std::string& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace gbsf
