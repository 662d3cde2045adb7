#include "gbsf/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gbsf/closed_form.hpp"
#include "gbsf/lattice.hpp"

namespace gbsf {

int BettiTable::max_p() const {
    int r = 0;
    for (const auto& [key, v] : entries) r = std::max(r, key.first);
    return r;
}

int BettiTable::min_s() const {
    int r = 0;
    bool first = true;
    for (const auto& [key, v] : entries) {
        if (first || key.second < r) r = key.second;
        first = false;
    }
    return r;
}

int BettiTable::max_s() const {
    int r = 0;
    for (const auto& [key, v] : entries) r = std::max(r, key.second);
    return r;
}

BigInt BettiTable::total(int p) const {
    BigInt t = 0;
    for (const auto& [key, v] : entries)
        if (key.first == p) t += v;
    return t;
}

bool is_strongly_squarefree_stable(const std::vector<Monomial>& gens) {
    if (gens.empty()) return true;
    int n = gens.front().nvars();
    for (const Monomial& g : gens)
        if (!g.is_squarefree())
            throw std::invalid_argument("is_strongly_squarefree_stable: non-squarefree generator");
    MonomialIdeal ideal = MonomialIdeal::from_generators(n, gens);
    for (const Monomial& g : ideal.minimal_generators()) {
        for (int j : g.support()) {
            Monomial u = g.evaluate_at_one(j);
            for (int i = 1; i < j; ++i) {
                if (u.exponent(i) > 0) continue;
                Monomial candidate = u * Monomial::variable(n, i);
                if (!ideal.contains(candidate)) return false;
            }
        }
    }
    return true;
}

std::vector<Monomial> squarefree_staircase_generators(int n, int k) {
    std::vector<Monomial> gens;
    for (const auto& [d, bucket] : admissible_sets(n, k))
        for (const IndexSetA& A : bucket) gens.push_back(Monomial::from_support(n, A.members));
    return gens;
}

BettiTable betti_ghp(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("betti_ghp: require 2 <= k <= n");
    // Generator-sum route.
    BettiTable by_generators;
    by_generators.n = n;
    by_generators.k = k;
    for (const Monomial& u : squarefree_staircase_generators(n, k)) {
        int s = u.degree();
        int width = u.max_support() - s;
        for (int p = 0; p <= width; ++p) by_generators.add(p, s, binomial(width, p));
    }
    // Closed Catalan route.
    BettiTable closed;
    closed.n = n;
    closed.k = k;
    int smax = k + (n - k) / 2;
    for (int s = k; s <= smax; ++s) {
        if (n < 2 * s - k) continue;
        BigInt count = catalan_convolution(s - k, k - 1);
        for (int p = 0; p <= s - k; ++p) closed.add(p, s, count * binomial(s - k, p));
    }
    if (!(by_generators == closed))
        throw std::logic_error("betti_ghp: generator-sum and closed forms disagree");
    return closed;
}

BigInt a_p_value(const Monomial& u, int p) {
    if (!u.is_squarefree()) throw std::invalid_argument("a_p_value: non-squarefree monomial");
    std::vector<int> support = u.support();
    std::reverse(support.begin(), support.end());  // i_1 > i_2 > ... > i_t
    BigInt total = 0;
    for (size_t j = 0; j < support.size(); ++j)
        total += binomial(support[j] - 1, p - static_cast<int>(j) - 1);
    return total;
}

namespace {

// All squarefree degree-d monomials inside the ideal.
std::vector<Monomial> squarefree_members_of_degree(const MonomialIdeal& ideal, int d) {
    int n = ideal.nvars();
    std::vector<Monomial> out;
    std::vector<int> pick;
    auto walk = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == d) {
            Monomial m = Monomial::from_support(n, pick);
            if (ideal.contains(m)) out.push_back(m);
            return;
        }
        for (int v = start; v <= n - (d - static_cast<int>(pick.size())) + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    if (d >= 0 && d <= n) walk(walk, 1);
    return out;
}

}  // namespace

BettiTable betti_murai(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("betti_murai: require 2 <= k <= n");
    MonomialIdeal J = MonomialIdeal::from_generators(n, squarefree_staircase_generators(n, k));
    std::vector<std::vector<Monomial>> members(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) members[static_cast<size_t>(d)] = squarefree_members_of_degree(J, d);

    BettiTable table;
    table.n = n;
    table.k = k;
    for (int s = 2; s <= n + 1; ++s) {
        for (int p = 0; p <= n - 1; ++p) {
            BigInt value = 0;
            if (s <= n)
                for (const Monomial& u : members[static_cast<size_t>(s)]) value += a_p_value(u, p + 1);
            if (s - 1 <= n)
                for (const Monomial& u : members[static_cast<size_t>(s - 1)])
                    value -= binomial(n, p + 1) - a_p_value(u, p + 2);
            if (s - 1 == p + 1) value += binomial(n, p + 1);
            if (value != 0) table.add(p, s, value);
        }
    }
    return table;
}

std::vector<Monomial> MvtNode::full_generators() const {
    std::vector<Monomial> out;
    out.reserve(residual.size());
    for (const Monomial& r : residual) out.push_back(common * r);
    return out;
}

namespace {

// Reverse-lexicographic comparison on exponent vectors: the generator with
// the larger exponents at the highest-indexed variables wins.
bool pivot_priority_less(const Monomial& a, const Monomial& b) {
    for (int v = a.nvars(); v >= 1; --v) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

struct NodeSplit {
    Monomial common;
    std::vector<Monomial> residual;
    bool final_node = false;
    // Set only when the node has at least two generators:
    std::optional<Monomial> pivot;  // full monomial
    std::vector<Monomial> left_gens;
    std::vector<Monomial> right_gens;
};

NodeSplit split_node(const std::vector<Monomial>& gens, int nvars) {
    NodeSplit split{Monomial(nvars), {}, false, std::nullopt, {}, {}};
    split.common = gens.front();
    for (const Monomial& g : gens) split.common = split.common.gcd(g);
    split.residual.reserve(gens.size());
    for (const Monomial& g : gens) split.residual.push_back(g.divide_exact(split.common));
    split.final_node = std::all_of(split.residual.begin(), split.residual.end(),
                                   [](const Monomial& m) { return m.is_squarefree(); });
    if (gens.size() < 2) return split;

    size_t pivot_idx = split.residual.size();
    if (!split.final_node) {
        // Last squared variable among the generators that is not a common factor.
        int best_var = 0;
        for (size_t i = 0; i < split.residual.size(); ++i) {
            for (int v = nvars; v > best_var; --v) {
                if (split.residual[i].exponent(v) >= 2) {
                    best_var = v;
                    break;
                }
            }
        }
        for (size_t i = 0; i < split.residual.size(); ++i) {
            if (split.residual[i].exponent(best_var) < 2) continue;
            if (pivot_idx == split.residual.size() ||
                pivot_priority_less(split.residual[pivot_idx], split.residual[i]))
                pivot_idx = i;
        }
    } else {
        for (size_t i = 0; i < split.residual.size(); ++i) {
            if (pivot_idx == split.residual.size() ||
                pivot_priority_less(split.residual[pivot_idx], split.residual[i]))
                pivot_idx = i;
        }
    }

    Monomial pivot_full = gens[pivot_idx];
    split.pivot = pivot_full;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i == pivot_idx) continue;
        split.right_gens.push_back(gens[i]);
        split.left_gens.push_back(gens[i].lcm(pivot_full));
    }
    split.left_gens = minimize_generators(std::move(split.left_gens));
    return split;
}

std::unique_ptr<MvtNode> build_node(const std::vector<Monomial>& gens, uint64_t pos, int dim,
                                    int nvars, bool parent_squarefree, size_t& count) {
    auto node = std::make_unique<MvtNode>(nvars);
    ++count;
    NodeSplit split = split_node(gens, nvars);
    node->position = pos;
    node->dimension = dim;
    node->common = split.common;
    node->residual = split.residual;
    node->final_node = split.final_node && !parent_squarefree;
    node->relevant = (pos == 1) || (pos % 2 == 0);
    node->pivot = split.pivot;
    if (split.pivot.has_value()) {
        node->left = build_node(split.left_gens, 2 * pos, dim + 1, nvars, split.final_node, count);
        node->right = build_node(split.right_gens, 2 * pos + 1, dim, nvars, split.final_node, count);
    }
    return node;
}

struct BettiCollector {
    // multidegree multiset per homological dimension
    std::vector<std::map<Monomial, BigInt>> by_dimension;
    size_t relevant_nodes = 0;

    void record(int dim, const std::vector<Monomial>& gens) {
        ++relevant_nodes;
        if (dim >= static_cast<int>(by_dimension.size()))
            by_dimension.resize(static_cast<size_t>(dim) + 1);
        for (const Monomial& g : gens) by_dimension[static_cast<size_t>(dim)][g] += 1;
    }

    MvtBettiResult finish(int n, int k) const {
        MvtBettiResult result;
        result.graded.n = n;
        result.graded.k = k;
        result.relevant_nodes = relevant_nodes;
        for (int dim = 0; dim < static_cast<int>(by_dimension.size()); ++dim)
            for (const auto& [mono, count] : by_dimension[static_cast<size_t>(dim)])
                result.graded.add(dim, mono.degree() - dim, count);
        result.minimal_certified = true;
        for (size_t dim = 0; dim + 1 < by_dimension.size(); ++dim) {
            for (const auto& [mono, count] : by_dimension[dim]) {
                if (by_dimension[dim + 1].count(mono)) {
                    result.minimal_certified = false;
                    break;
                }
            }
            if (!result.minimal_certified) break;
        }
        return result;
    }
};

void walk_stream(const std::vector<Monomial>& gens, uint64_t pos, int dim, int nvars,
                 BettiCollector& collector) {
    bool relevant = (pos == 1) || (pos % 2 == 0);
    if (relevant) collector.record(dim, gens);
    NodeSplit split = split_node(gens, nvars);
    if (!split.pivot.has_value()) return;
    walk_stream(split.left_gens, 2 * pos, dim + 1, nvars, collector);
    walk_stream(split.right_gens, 2 * pos + 1, dim, nvars, collector);
}

}  // namespace

MvtTree build_mvt(const MonomialIdeal& ideal) {
    if (ideal.is_zero_ideal()) throw std::invalid_argument("build_mvt: zero ideal");
    MvtTree tree;
    tree.nvars = ideal.nvars();
    tree.root = build_node(ideal.minimal_generators(), 1, 0, ideal.nvars(), false, tree.node_count);
    return tree;
}

namespace {

void collect_from_tree(const MvtNode& node, BettiCollector& collector) {
    if (node.relevant) collector.record(node.dimension, node.full_generators());
    if (node.left) collect_from_tree(*node.left, collector);
    if (node.right) collect_from_tree(*node.right, collector);
}

void collect_final_positions(const MvtNode& node, std::vector<uint64_t>& out) {
    if (node.final_node) out.push_back(node.position);
    if (node.left) collect_final_positions(*node.left, out);
    if (node.right) collect_final_positions(*node.right, out);
}

}  // namespace

MvtBettiResult betti_from_mvt(const MvtTree& tree) {
    if (!tree.root) throw std::invalid_argument("betti_from_mvt: empty tree");
    BettiCollector collector;
    collect_from_tree(*tree.root, collector);
    return collector.finish(tree.nvars, 0);
}

MvtBettiResult betti_mvt(const MonomialIdeal& ideal) {
    if (ideal.is_zero_ideal()) throw std::invalid_argument("betti_mvt: zero ideal");
    BettiCollector collector;
    walk_stream(ideal.minimal_generators(), 1, 0, ideal.nvars(), collector);
    return collector.finish(ideal.nvars(), 0);
}

std::vector<uint64_t> mvt_final_positions(const MvtTree& tree) {
    std::vector<uint64_t> out;
    if (tree.root) collect_final_positions(*tree.root, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> pd_reg(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("pd_reg: require 2 <= k <= n");
    // reg = k + m for n = k + 2m; the extra tensor factor for odd n - k
    // shifts the extremal degree up by one.
    int reg = k + (n - k + 1) / 2;
    return {n - 1, reg};
}

BettiTable betti_recursion(int n, int k, const BettiTable& base) {
    if ((n - k) % 2 != 1 || n < k)
        throw std::invalid_argument("betti_recursion: require n = k + 2m + 1");
    if (base.n != 0 && base.n != n - 1)
        throw std::invalid_argument("betti_recursion: base table is not for n - 1");
    BettiTable out;
    out.n = n;
    out.k = k;
    for (const auto& [key, v] : base.entries) {
        auto [p, s] = key;
        out.add(p, s, v);          // tensor with the degree-0 part of k[x_n]/(x_n^2)
        out.add(p + 1, s + 1, v);  // tensor with its degree-2 syzygy
    }
    out.add(0, 2, BigInt(1));  // the new generator x_n^2 itself
    return out;
}

ShapeReport betti_shape_check(int n, int k) {
    if (k < 2 || k > n || (n - k) % 2 != 0)
        throw std::invalid_argument("betti_shape_check: require n = k + 2m with k >= 2");
    int m = (n - k) / 2;
    BettiTable table = betti_murai(n, k);
    ShapeReport report;
    auto expect = [&](const std::string& label, const BigInt& actual, const BigInt& wanted) {
        if (actual == wanted) {
            report.checks.push_back(label + ": " + actual.get_str());
        } else {
            report.all_ok = false;
            report.failures.push_back(label + ": got " + actual.get_str() + ", expected " +
                                      wanted.get_str());
        }
    };

    // (1) generator row
    expect("beta_{0,2}", table.get(0, 2), k == 2 ? BigInt(n + 1) : BigInt(n));
    for (int j = k; j <= k + m; ++j) {
        BigInt wanted = catalan_convolution(j - k, k - 1);
        if (j == 2) wanted += n;  // squares share the quadric slot when k = 2
        expect("beta_{0," + std::to_string(j) + "}", table.get(0, j), wanted);
    }

    // (2) squares-only band in low rows
    for (int i = 1; i <= k - 3; ++i) {
        expect("beta_{" + std::to_string(i) + "," + std::to_string(2 * (i + 1)) + "}",
               table.get(i, i + 2), binomial(n, i + 1));
        for (int s = 2; s < k; ++s) {  // total degree below i + k
            if (s == i + 2) continue;  // the Koszul entry just checked
            expect("beta_{" + std::to_string(i) + ",s=" + std::to_string(s) + "}=0",
                   table.get(i, s), BigInt(0));
        }
    }

    // (3) extremal Catalan diagonal
    for (int i = 0; i <= m; ++i) {
        int p = k - 1 + 2 * i;
        expect("extremal beta_{" + std::to_string(p) + "," + std::to_string(p + k + i) + "}",
               table.get(p, k + i), catalan_convolution(i + 1, k - 1));
    }

    // (4) zero/nonzero bands around the diagonal
    for (int i = 0; i <= m; ++i) {
        int p = k - 1 + 2 * i;
        int s = k + i;
        for (int j = 2; j < s; ++j)
            expect("band zero beta_{" + std::to_string(p) + ",s=" + std::to_string(j) + "}",
                   table.get(p, j), BigInt(0));
        for (int j = s + 1; j <= k + m; ++j) {
            bool nonzero = table.get(p, j) != 0;
            if (nonzero) {
                report.checks.push_back("band nonzero beta_{" + std::to_string(p) +
                                        ",s=" + std::to_string(j) + "}");
            } else {
                report.all_ok = false;
                report.failures.push_back("band nonzero beta_{" + std::to_string(p) +
                                          ",s=" + std::to_string(j) + "}: got 0");
            }
        }
        for (int q = p + 1; q <= n - 1; ++q)
            expect("row zero beta_{" + std::to_string(q) + ",s=" + std::to_string(s) + "}",
                   table.get(q, s), BigInt(0));
        for (int q = 0; q < p; ++q) {
            bool nonzero = table.get(q, s) != 0;
            if (nonzero) {
                report.checks.push_back("row nonzero beta_{" + std::to_string(q) +
                                        ",s=" + std::to_string(s) + "}");
            } else {
                report.all_ok = false;
                report.failures.push_back("row nonzero beta_{" + std::to_string(q) +
                                          ",s=" + std::to_string(s) + "}: got 0");
            }
        }
    }
    return report;
}

std::string render_betti_diagram(const BettiTable& table) {
    int pd = table.max_p();
    int slo = table.min_s(), shi = table.max_s();
    if (table.entries.empty()) return "(empty table)\n";
    size_t width = 1;
    for (const auto& [key, v] : table.entries) width = std::max(width, v.get_str().size());
    width = std::max(width, std::to_string(pd).size()) + 2;
    std::ostringstream out;
    out << std::string(width, ' ') << "|";
    auto pad = [&](const std::string& s) {
        return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
    };
    for (int p = 0; p <= pd; ++p) out << pad(std::to_string(p));
    out << "\n" << std::string(width + 1, '-') << std::string(static_cast<size_t>(pd + 1) * width, '-')
        << "\n";
    for (int s = slo; s <= shi; ++s) {
        out << pad(std::to_string(s)) << "|";
        for (int p = 0; p <= pd; ++p) {
            BigInt v = table.get(p, s);
            out << pad(v == 0 ? "." : v.get_str());
        }
        out << "\n";
    }
    return out.str();
}

std::vector<BigInt> hilbert_numerator_from_betti(const BettiTable& table) {
    std::vector<BigInt> coeffs(1, BigInt(1));
    for (const auto& [key, v] : table.entries) {
        auto [p, s] = key;
        int degree = p + s;
        if (degree >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(degree) + 1);
        if (p % 2 == 0)
            coeffs[static_cast<size_t>(degree)] -= v;
        else
            coeffs[static_cast<size_t>(degree)] += v;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::vector<BigInt> hilbert_numerator_from_series(int n, int k) {
    HilbertSeries hs = hilbert_series(n, k);
    // (1 - t)^n coefficients
    std::vector<BigInt> binom(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<size_t>(i)] = binomial(n, i);
        if (i % 2 == 1) binom[static_cast<size_t>(i)] = -binom[static_cast<size_t>(i)];
    }
    std::vector<BigInt> out(hs.coefficients.size() + binom.size(), BigInt(0));
    for (size_t i = 0; i < hs.coefficients.size(); ++i)
        for (size_t j = 0; j < binom.size(); ++j) out[i + j] += hs.coefficients[i] * binom[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace gbsf
