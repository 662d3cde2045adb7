// gbsf: exact Groebner bases, Hilbert series, Lefschetz checks, and Betti
// tables for the ideals (x1^2,...,xn^2,(x1+...+xn)^k).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "gbsf/closed_form.hpp"
#include "gbsf/groebner.hpp"
#include "gbsf/lattice.hpp"
#include "gbsf/lefschetz.hpp"
#include "gbsf/poly_io.hpp"
#include "gbsf/resolution.hpp"

using nlohmann::json;
using namespace gbsf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
    int n = 0;
    int k = 0;
    std::string order_family = "degrevlex";
    std::string perm;
    std::string format = "text";
    int trials = 3;
    uint64_t seed = 1;
    int threads = 0;
};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GBSF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::vector<int> parse_perm(const std::string& text, int n) {
    std::vector<int> sigma;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok));
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation must list all of 1..n");
    return sigma;
}

TermOrder make_order(const CommonOpts& opts) {
    OrderFamily family = order_family_from_string(opts.order_family);
    if (opts.perm.empty()) return TermOrder(family, opts.n);
    return TermOrder(family, parse_perm(opts.perm, opts.n));
}

void check_nk(const CommonOpts& opts, int min_k = 1) {
    if (opts.n < 2) throw std::invalid_argument("require n >= 2");
    if (opts.k < min_k)
        throw std::invalid_argument("require k >= " + std::to_string(min_k));
}

json betti_to_json(const BettiTable& table) {
    json rows = json::array();
    for (const auto& [key, v] : table.entries)
        rows.push_back({{"p", key.first}, {"s", key.second}, {"value", v.get_str()}});
    return rows;
}

json witness_to_json(const SyzygyWitness& w) {
    json j;
    j["variant"] = w.variant == SyzygyWitness::Variant::odd ? "odd" : "even";
    json coeffs = json::array();
    for (const Rational& v : w.a) coeffs.push_back(v.get_str());
    j["a"] = coeffs;
    if (w.variant == SyzygyWitness::Variant::odd)
        j["lprime"] = to_text(w.lprime);
    else
        j["f"] = to_text(w.f);
    j["g"] = to_text(w.g);
    json bs = json::array();
    for (const Rational& v : w.b) bs.push_back(v.get_str());
    j["b"] = bs;
    if (!w.lambda.empty()) {
        json ls = json::array();
        for (const Rational& v : w.lambda) ls.push_back(v.get_str());
        j["lambda"] = ls;
    }
    return j;
}

std::string witness_identity_text(const SyzygyWitness& w) {
    int n = static_cast<int>(w.a.size());
    std::ostringstream out;
    std::ostringstream ell;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) ell << " + ";
        ell << w.a[static_cast<size_t>(i - 1)].get_str() << "*x" << i;
    }
    if (w.variant == SyzygyWitness::Variant::odd) {
        int p = (n - 1) / 2;
        out << "ell = " << ell.str() << "\n";
        out << "ell' = " << to_text(w.lprime) << "\n";
        out << "g = " << to_text(w.g) << "\n";
        out << "identity: ell^" << p << " * ell' = (x1+...+x" << n
            << ")^2 * g   (mod x1^2,...,x" << n << "^2)\n";
    } else {
        int p = n / 2;
        out << "ell = " << ell.str() << "\n";
        out << "f = " << to_text(w.f) << "\n";
        out << "g = " << to_text(w.g) << "\n";
        out << "identity: ell^" << (p - 2) << " * f = (x1+...+x" << n
            << ")^2 * g   (mod x1^2,...,x" << n << "^2)\n";
    }
    return out.str();
}

int cmd_gb(const CommonOpts& opts, bool verify) {
    check_nk(opts);
    TermOrder order = make_order(opts);
    GroebnerBasis basis = closed_form_basis(opts.n, opts.k, order);
    bool verified = false;
    std::string diff;
    if (verify) {
        GroebnerBasis oracle =
            reduce_basis(buchberger(aci_generators(opts.n, opts.k, order), order));
        verified = bases_equal(basis, oracle);
        if (!verified) {
            std::ostringstream d;
            d << "closed form (" << basis.generators.size() << " elements):\n"
              << basis_to_cas(basis) << "oracle (" << oracle.generators.size()
              << " elements):\n"
              << basis_to_cas(oracle);
            diff = d.str();
        }
    }
    if (opts.format == "json") {
        json j = json::parse(basis_to_json(basis, opts.n, opts.k));
        if (verify) j["verified"] = verified;
        std::cout << j.dump(2) << "\n";
    } else if (opts.format == "cas") {
        std::cout << basis_to_cas(basis);
    } else {
        std::cout << "reduced basis for n=" << opts.n << " k=" << opts.k << " under "
                  << order_to_string(order) << " (" << basis.generators.size()
                  << " elements):\n";
        std::cout << basis_to_cas(basis);
        if (verify) std::cout << (verified ? "oracle check: OK\n" : "oracle check: MISMATCH\n");
    }
    if (verify && !verified) {
        std::cerr << diff;
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_hilbert(const CommonOpts& opts) {
    check_nk(opts);
    HilbertSeries hs = hilbert_series(opts.n, opts.k);
    if (opts.format == "json") {
        json j;
        j["n"] = opts.n;
        j["k"] = opts.k;
        json coeffs = json::array();
        for (const BigInt& c : hs.coefficients) coeffs.push_back(c.get_str());
        j["coefficients"] = coeffs;
        std::cout << j.dump(2) << "\n";
    } else {
        bool first = true;
        for (const BigInt& c : hs.coefficients) {
            if (!first) std::cout << " ";
            std::cout << c.get_str();
            first = false;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_wlp(const CommonOpts& opts, bool show_witness, bool original) {
    check_nk(opts, 2);
    int threads = resolve_threads(opts.threads);
    WlpVerdict verdict = verify_wlp(opts.n, opts.k, opts.trials, opts.seed, original, threads);
    bool expected = classify_wlp(opts.n, opts.k);
    if (opts.format == "json") {
        json j;
        j["n"] = opts.n;
        j["k"] = opts.k;
        j["holds"] = verdict.holds;
        j["classified"] = expected;
        j["inconclusive"] = verdict.inconclusive;
        json failing = json::array();
        for (const WlpFailingMap& f : verdict.failing)
            failing.push_back({{"from", f.from},
                               {"to", f.to},
                               {"rank", f.rank},
                               {"required", f.required},
                               {"trials", f.trials}});
        j["failing"] = failing;
        if (verdict.witness.has_value()) {
            j["witness"] = witness_to_json(*verdict.witness);
            j["kernel_verified"] = verdict.kernel_verified;
            if (verdict.kernel_element.has_value())
                j["kernel_element"] = to_text(*verdict.kernel_element);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wlp n=" << opts.n << " k=" << opts.k << ": "
                  << (verdict.holds ? "holds" : "fails") << "\n";
        for (const WlpFailingMap& f : verdict.failing)
            std::cout << "  map degree " << f.from << " -> " << f.to << ": rank " << f.rank
                      << " of required " << f.required << "\n";
        if (verdict.witness.has_value()) {
            std::cout << "  kernel element "
                      << (verdict.kernel_verified ? "verified" : "unverified");
            if (verdict.kernel_element.has_value())
                std::cout << ": " << to_text(*verdict.kernel_element);
            std::cout << "\n";
            if (show_witness) std::cout << witness_identity_text(*verdict.witness);
        }
        if (verdict.inconclusive) std::cout << "  WARNING: inconclusive\n";
    }
    if (verdict.inconclusive || verdict.holds != expected) return kExitMismatch;
    return kExitOk;
}

int cmd_betti(const CommonOpts& opts, const std::string& method, bool shape) {
    check_nk(opts, 2);
    if (opts.k > opts.n) throw std::invalid_argument("require k <= n");
    auto staircase = [&]() {
        std::vector<Monomial> gens = squarefree_staircase_generators(opts.n, opts.k);
        for (int v = 1; v <= opts.n; ++v) gens.push_back(Monomial::variable(opts.n, v, 2));
        return MonomialIdeal::from_generators(opts.n, gens);
    };
    auto [pd, reg] = pd_reg(opts.n, opts.k);

    BettiTable table;
    std::optional<bool> certified;
    bool agree = true;
    std::ostringstream text;
    if (method == "ghp") {
        table = betti_ghp(opts.n, opts.k);
        text << "squarefree-part table (generator sum = closed form):\n"
             << render_betti_diagram(table);
    } else if (method == "murai") {
        table = betti_murai(opts.n, opts.k);
        text << render_betti_diagram(table);
    } else if (method == "mvt") {
        MvtBettiResult result = betti_mvt(staircase());
        table = result.graded;
        certified = result.minimal_certified;
        text << render_betti_diagram(table);
        text << "minimal resolution certificate: " << (result.minimal_certified ? "yes" : "NO")
             << "\n";
    } else if (method == "all") {
        BettiTable murai = betti_murai(opts.n, opts.k);
        MvtBettiResult mvt = betti_mvt(staircase());
        BettiTable ghp = betti_ghp(opts.n, opts.k);
        agree = (murai == mvt.graded) && mvt.minimal_certified;
        table = murai;
        certified = mvt.minimal_certified;
        text << "murai:\n" << render_betti_diagram(murai);
        text << "mayer-vietoris:\n" << render_betti_diagram(mvt.graded);
        text << "squarefree part:\n" << render_betti_diagram(ghp);
        text << (agree ? "agreement: murai = mayer-vietoris, certificate OK\n"
                       : "agreement: MISMATCH\n");
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }

    std::optional<ShapeReport> shape_report;
    if (shape) {
        if ((opts.n - opts.k) % 2 != 0)
            throw std::invalid_argument("--shape needs n - k even");
        shape_report = betti_shape_check(opts.n, opts.k);
    }

    if (opts.format == "json") {
        json j;
        j["n"] = opts.n;
        j["k"] = opts.k;
        j["method"] = method;
        j["betti"] = betti_to_json(table);
        j["pd"] = pd;
        j["reg"] = reg;
        j["minimal_certified"] = certified.has_value() ? json(*certified) : json(nullptr);
        if (method == "all") j["agreement"] = agree;
        if (shape_report.has_value()) {
            j["shape_ok"] = shape_report->all_ok;
            j["shape_failures"] = shape_report->failures;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text.str();
        std::cout << "pd = " << pd << ", reg = " << reg << "\n";
        if (shape_report.has_value()) {
            std::cout << "shape checks: " << (shape_report->all_ok ? "all hold" : "FAILED")
                      << " (" << shape_report->checks.size() << " facts)\n";
            for (const std::string& f : shape_report->failures) std::cout << "  " << f << "\n";
        }
    }
    if (!agree || (shape_report.has_value() && !shape_report->all_ok)) return kExitMismatch;
    return kExitOk;
}

int cmd_count(const CommonOpts& opts, const std::string& what, int degree, int max_enum) {
    check_nk(opts, 2);
    json j;
    j["n"] = opts.n;
    j["k"] = opts.k;
    j["what"] = what;
    std::ostringstream text;
    if (what == "generators") {
        auto counts = count_generators_by_degree(opts.n, opts.k);
        json values = json::object();
        bool first = true;
        for (const auto& [d, c] : counts) {
            values[std::to_string(d)] = c.get_str();
            if (!first) text << ", ";
            text << "degree " << d << ": " << c.get_str();
            first = false;
        }
        j["values"] = values;
        text << "\n";
    } else if (what == "bases") {
        BigInt count = count_distinct_bases(opts.n, opts.k);
        j["value"] = count.get_str();
        text << count.get_str() << "\n";
    } else if (what == "standard-monomials") {
        if (degree < 0) throw std::invalid_argument("--degree is required");
        BigInt count = count_standard_monomials(opts.n, opts.k, degree);
        j["degree"] = degree;
        j["value"] = count.get_str();
        text << count.get_str() << "\n";
    } else if (what == "touching-paths") {
        // Exhaustive 2^n scan of length-n paths with `degree` north steps
        // that touch y = x + k. Guarded by the enumeration cap.
        if (degree < 0) throw std::invalid_argument("--degree is required");
        BigInt count = count_paths_touching_exhaustive(opts.n, degree, opts.k, max_enum);
        j["degree"] = degree;
        j["value"] = count.get_str();
        text << count.get_str() << "\n";
    } else {
        throw std::invalid_argument("unknown count target '" + what + "'");
    }
    if (opts.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return kExitOk;
}

int cmd_paper_tables(const std::string& format) {
    std::ostringstream out;
    TermOrder o5 = degrevlex(5);

    out << "== degree-3 generating system of the (5,2) ideal ==\n";
    for (int i = 1; i <= 5; ++i)
        out << "f_{" << i << "} = " << to_text(f_polynomial({i}, 5, 2, o5)) << "\n";

    out << "\n== triangular-system coefficients, d=3 k=2, and the expansion ==\n";
    LambdaVector lambda = lambda_coefficients(3, 2);
    out << "lambda = (";
    for (size_t i = 0; i < lambda.values.size(); ++i)
        out << (i ? ", " : "") << lambda.values[i].get_str();
    out << ")\n";
    IndexSetA a134{{1, 3, 4}};
    Polynomial expansion = g_via_f_expansion(a134, 5, 2, o5);
    out << "g_{134} = " << to_text(expansion)
        << (expansion == g_polynomial(a134, 5, 2, o5) ? "   [matches the direct construction]"
                                                      : "   [MISMATCH]")
        << "\n";

    out << "\n== reduced basis, n=5 k=2 ==\n";
    GroebnerBasis basis = closed_form_basis(5, 2, o5);
    out << basis_to_cas(basis);

    out << "\n== numbers of distinct reduced bases ==\n";
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 2}, {5, 3}, {6, 3}, {7, 3}})
        out << "N_{" << n << "," << k << "} = " << count_distinct_bases(n, k).get_str() << "\n";

    out << "\n== betti diagram of the (4,2) staircase ==\n";
    out << render_betti_diagram(betti_murai(4, 2));
    auto [pd, reg] = pd_reg(4, 2);
    out << "pd = " << pd << ", reg = " << reg << "\n";

    out << "\n== lattice path of x1*x3*x4 (n=5) ==\n";
    out << render_path(tau_inverse(Monomial::from_support(5, std::vector<int>{1, 3, 4}), 5));

    if (format == "json") {
        json j;
        j["report"] = out.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for the ideals (x1^2,...,xn^2,(x1+...+xn)^k)"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool verify = false, show_witness = false, original = false, shape = false;
    std::string method = "murai", what = "generators";
    int degree = -1;
    int max_enum = kDefaultEnumerationCap;

    auto add_common = [&](CLI::App* cmd, bool needs_nk = true) {
        if (needs_nk) {
            cmd->add_option("--n", opts.n, "number of variables")->required();
            cmd->add_option("--k", opts.k, "exponent of the linear-form power")->required();
        }
        cmd->add_option("--order", opts.order_family, "order family: degrevlex or lex");
        cmd->add_option("--perm", opts.perm, "variable ranking, e.g. 2,1,3 (highest first)");
        cmd->add_option("--format", opts.format, "output format: text, json, or cas");
        cmd->add_option("--trials", opts.trials, "random trials for rank protocols");
        cmd->add_option("--seed", opts.seed, "seed for all randomized steps");
        cmd->add_option("--threads", opts.threads, "parallelism (default GBSF_THREADS or 1)");
    };

    CLI::App* gb = app.add_subcommand("gb", "closed-form reduced Groebner basis");
    add_common(gb);
    gb->add_flag("--verify", verify, "re-derive the basis with the Buchberger engine and diff");

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    add_common(hilbert);

    CLI::App* wlp = app.add_subcommand("wlp", "weak Lefschetz classification and verification");
    add_common(wlp);
    wlp->add_flag("--witness", show_witness, "print the syzygy witness identity on failure");
    wlp->add_flag("--original", original, "rank checks on the original algebra (cross-check)");

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of the initial ideal");
    add_common(betti);
    betti->add_option("--method", method, "ghp, murai, mvt, or all");
    betti->add_flag("--shape", shape, "also verify the structural facts about the diagram");

    CLI::App* count = app.add_subcommand("count", "counting invariants");
    add_common(count);
    count->add_option("--what", what, "generators, bases, standard-monomials, or touching-paths");
    count->add_option("--degree", degree, "degree for standard-monomials / touching-paths");
    count->add_option("--max-enum", max_enum, "raise the exhaustive enumeration cap");

    CLI::App* tables = app.add_subcommand("paper-tables", "regenerate the worked-example report");
    tables->add_option("--format", opts.format, "output format: text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (gb->parsed()) return cmd_gb(opts, verify);
        if (hilbert->parsed()) return cmd_hilbert(opts);
        if (wlp->parsed()) return cmd_wlp(opts, show_witness, original);
        if (betti->parsed()) return cmd_betti(opts, method, shape);
        if (count->parsed()) return cmd_count(opts, what, degree, max_enum);
        if (tables->parsed()) return cmd_paper_tables(opts.format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitBadInput;
}
