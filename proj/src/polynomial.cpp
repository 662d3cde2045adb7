#include "gbsf/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace gbsf {

namespace {

void sort_descending(std::vector<Term>& terms, const TermOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
}

}  // namespace

Polynomial Polynomial::constant(const Rational& c, const TermOrder& order) {
    return monomial(c, Monomial(order.nvars()), order);
}

Polynomial Polynomial::monomial(const Rational& c, const Monomial& m, const TermOrder& order) {
    if (m.nvars() != order.nvars())
        throw std::invalid_argument("Polynomial::monomial: variable count mismatch");
    Polynomial p(order);
    if (c != 0) p.terms_.push_back(Term{c, m});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const TermOrder& order) {
    std::map<Monomial, Rational> acc;
    for (Term& t : terms) {
        if (t.mono.nvars() != order.nvars())
            throw std::invalid_argument("Polynomial::from_terms: variable count mismatch");
        acc[t.mono] += t.coeff;
    }
    Polynomial p(order);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back(Term{c, m});
    sort_descending(p.terms_, order);
    return p;
}

bool Polynomial::equals(const Polynomial& other) const {
    if (nvars() != other.nvars()) return false;
    if (terms_.size() != other.terms_.size()) return false;
    if (order_ == other.order_) {
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
                return false;
        return true;
    }
    std::map<Monomial, Rational> lhs;
    for (const Term& t : terms_) lhs.emplace(t.mono, t.coeff);
    for (const Term& t : other.terms_) {
        auto it = lhs.find(t.mono);
        if (it == lhs.end() || it->second != t.coeff) return false;
    }
    return true;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_compatible(other);
    const Polynomial& rhs = (order_ == other.order_) ? other : other.with_order(order_);
    Polynomial r(order_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        auto cmp = order_.compare(terms_[i].mono, rhs.terms_[j].mono);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(rhs.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (c != 0) r.terms_.push_back(Term{std::move(c), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    Polynomial r(order_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back(Term{std::move(c), m});
    sort_descending(r.terms_, order_);
    return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return Polynomial(order_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff *= scalar;
    return r;
}

Polynomial Polynomial::times_monomial(const Rational& coeff, const Monomial& m) const {
    if (m.nvars() != nvars())
        throw std::invalid_argument("Polynomial::times_monomial: variable count mismatch");
    if (coeff == 0) return Polynomial(order_);
    Polynomial r(order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * coeff, t.mono * m});
    return r;
}

Polynomial Polynomial::with_order(const TermOrder& order) const {
    if (order.nvars() != nvars())
        throw std::invalid_argument("Polynomial::with_order: variable count mismatch");
    Polynomial r(order);
    r.terms_ = terms_;
    sort_descending(r.terms_, order);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

Polynomial sfp(const Polynomial& f) {
    std::vector<Term> keep;
    keep.reserve(f.terms().size());
    for (const Term& t : f.terms())
        if (t.mono.is_squarefree()) keep.push_back(t);
    return Polynomial::from_terms(std::move(keep), f.order());
}

Polynomial multiply_sfp(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("multiply_sfp: ambient variable counts differ");
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const Term& s : a.terms()) {
        if (!s.mono.is_squarefree()) continue;
        for (const Term& t : b.terms()) {
            if (!s.mono.coprime(t.mono)) continue;
            if (!t.mono.is_squarefree()) continue;
            acc[s.mono * t.mono] += s.coeff * t.coeff;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back(Term{c, m});
    return Polynomial::from_terms(std::move(terms), a.order());
}

Polynomial elementary_symmetric(int d, std::span<const int> vars, const TermOrder& order) {
    if (d < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
    if (d > static_cast<int>(vars.size()))
        throw std::invalid_argument("elementary_symmetric: degree exceeds variable count");
    std::vector<Term> terms;
    std::vector<int> pick(static_cast<size_t>(d));
    // Enumerates d-subsets of vars by index.
    auto emit = [&](auto&& self, int start, int depth) -> void {
        if (depth == d) {
            std::vector<int> chosen;
            chosen.reserve(static_cast<size_t>(d));
            for (int i : pick) chosen.push_back(vars[static_cast<size_t>(i)]);
            terms.push_back(Term{Rational(1), Monomial::from_support(order.nvars(), chosen)});
            return;
        }
        for (int i = start; i <= static_cast<int>(vars.size()) - (d - depth); ++i) {
            pick[static_cast<size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    emit(emit, 0, 0);
    return Polynomial::from_terms(std::move(terms), order);
}

Polynomial elementary_symmetric(int d, const std::vector<int>& vars, const TermOrder& order) {
    return elementary_symmetric(d, std::span<const int>(vars), order);
}

Polynomial expand_power_linear(std::span<const Rational> coeffs, int k, const TermOrder& order) {
    if (k < 0) throw std::invalid_argument("expand_power_linear: negative exponent");
    if (static_cast<int>(coeffs.size()) != order.nvars())
        throw std::invalid_argument("expand_power_linear: coefficient count mismatch");
    int n = order.nvars();
    std::vector<Term> terms;
    std::vector<int> exps(static_cast<size_t>(n), 0);
    BigInt kfac = factorial(k);
    // Walks exponent vectors summing to k; multinomial coefficient times the
    // coefficient powers gives each term.
    auto walk = [&](auto&& self, int var, int remaining, const Rational& partial) -> void {
        if (var == n) {
            if (remaining == 0) terms.push_back(Term{partial, Monomial::from_exponents(exps)});
            return;
        }
        if (var == n - 1) {
            exps[static_cast<size_t>(var)] = remaining;
            Rational c = partial;
            for (int i = 0; i < remaining; ++i) c *= coeffs[static_cast<size_t>(var)];
            self(self, n, 0, c);
            exps[static_cast<size_t>(var)] = 0;
            return;
        }
        Rational c = partial;
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0) c *= coeffs[static_cast<size_t>(var)];
            if (c == 0 && e > 0) break;
            exps[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e, c);
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    walk(walk, 0, k, Rational(1));
    // Scale by k!/(prod e_i!).
    for (Term& t : terms) {
        BigInt denom = 1;
        for (int e : t.mono.exponents()) denom *= factorial(e);
        t.coeff *= make_rational(kfac, denom);
    }
    return Polynomial::from_terms(std::move(terms), order);
}

Polynomial expand_power_linear(const std::vector<Rational>& coeffs, int k, const TermOrder& order) {
    return expand_power_linear(std::span<const Rational>(coeffs), k, order);
}

Polynomial sum_of_variables(const TermOrder& order) {
    std::vector<Term> terms;
    for (int v = 1; v <= order.nvars(); ++v)
        terms.push_back(Term{Rational(1), Monomial::variable(order.nvars(), v)});
    return Polynomial::from_terms(std::move(terms), order);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order) {
    if (G.empty()) throw std::invalid_argument("normal_form: empty reducer list");
    std::vector<Polynomial> reducers;
    reducers.reserve(G.size());
    for (const Polynomial& g : G) {
        if (g.nvars() != f.nvars())
            throw std::invalid_argument("normal_form: ambient variable counts differ");
        if (g.is_zero()) continue;
        reducers.push_back(g.order() == order ? g : g.with_order(order));
    }
    // Workspace sorted descending under the order; the front entry is the
    // current leading term. Reduction updates entries in place.
    auto desc = [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
    std::map<Monomial, Rational, decltype(desc)> work(desc);
    for (const Term& t : f.terms()) work.emplace(t.mono, t.coeff);
    std::vector<Term> result;
    while (!work.empty()) {
        auto lead = work.begin();
        if (lead->second == 0) {
            work.erase(lead);
            continue;
        }
        const Polynomial* reducer = nullptr;
        for (const Polynomial& g : reducers) {
            if (g.leading_monomial().divides(lead->first)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            result.push_back(Term{lead->second, lead->first});
            work.erase(lead);
            continue;
        }
        Rational c = lead->second / reducer->leading_coefficient();
        Monomial m = lead->first.divide_exact(reducer->leading_monomial());
        for (const Term& t : reducer->terms()) {
            Monomial shifted = t.mono * m;
            auto it = work.find(shifted);
            if (it == work.end()) {
                work.emplace(std::move(shifted), -(t.coeff * c));
            } else {
                it->second -= t.coeff * c;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return Polynomial::from_terms(std::move(result), order);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order) {
    return normal_form(f, std::span<const Polynomial>(G), order);
}

}  // namespace gbsf
