#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "gbsf/monomial.hpp"
#include "gbsf/rational.hpp"
#include "gbsf/term_order.hpp"

namespace gbsf {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted descending under the active term order, so the leading term is
// terms().front(). Values are immutable once built; all arithmetic returns
// fresh polynomials.
class Polynomial {
  public:
    explicit Polynomial(TermOrder order) : order_(std::move(order)) {}

    static Polynomial zero(const TermOrder& order) { return Polynomial(order); }

    static Polynomial constant(const Rational& c, const TermOrder& order);

    static Polynomial monomial(const Rational& c, const Monomial& m, const TermOrder& order);

    // Collects arbitrary (coeff, monomial) pairs: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(std::vector<Term> terms, const TermOrder& order);

    const TermOrder& order() const { return order_; }
    int nvars() const { return order_.nvars(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; the zero polynomial has no degree.
    int degree() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
        int d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    const Term& leading_term() const {
        if (is_zero()) throw std::domain_error("leading term of the zero polynomial is undefined");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    // Same terms regardless of the active orders.
    bool equals(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const { return equals(other); }

    Rational coefficient_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;

    // Multiplication by a monomial preserves term order, so this is a plain map.
    Polynomial times_monomial(const Rational& coeff, const Monomial& m) const;

    // Re-sorted copy under a different order.
    Polynomial with_order(const TermOrder& order) const;

    // Divides by the leading coefficient.
    Polynomial monic() const;

    // Divides by the rational content; the result has coprime integer
    // coefficients and a positive leading coefficient.
    Polynomial primitive_part() const;

    bool is_homogeneous() const;

  private:
    void check_compatible(const Polynomial& other) const {
        if (nvars() != other.nvars())
            throw std::invalid_argument("Polynomial: ambient variable counts differ");
    }

    TermOrder order_;
    std::vector<Term> terms_;  // descending under order_, no zero coefficients
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

// Normal form with respect to the monomial ideal (x1^2,...,xn^2): keeps the
// squarefree terms and drops the rest. Linear and idempotent.
Polynomial sfp(const Polynomial& f);

// Product reduced on the fly modulo (x1^2,...,xn^2); avoids building the
// non-squarefree bulk of large products.
Polynomial multiply_sfp(const Polynomial& a, const Polynomial& b);

// e_d over the 1-based variable subset `vars`: the sum of all C(|vars|, d)
// squarefree degree-d monomials supported in vars.
Polynomial elementary_symmetric(int d, std::span<const int> vars, const TermOrder& order);
Polynomial elementary_symmetric(int d, const std::vector<int>& vars, const TermOrder& order);

// Multinomial expansion of (coeffs[0] x1 + ... + coeffs[n-1] xn)^k.
Polynomial expand_power_linear(std::span<const Rational> coeffs, int k, const TermOrder& order);
Polynomial expand_power_linear(const std::vector<Rational>& coeffs, int k, const TermOrder& order);

// x1 + ... + xn.
Polynomial sum_of_variables(const TermOrder& order);

// Total reduction of f modulo G under the given order. The result contains no
// term divisible by a leading monomial of G, and f - result lies in (G).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);

}  // namespace gbsf
