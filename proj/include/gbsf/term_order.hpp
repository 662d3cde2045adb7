#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbsf/monomial.hpp"

namespace gbsf {

enum class OrderFamily { degrevlex, lex };

inline std::string to_string(OrderFamily f) {
    return f == OrderFamily::degrevlex ? "degrevlex" : "lex";
}

inline OrderFamily order_family_from_string(const std::string& s) {
    if (s == "degrevlex" || s == "drl") return OrderFamily::degrevlex;
    if (s == "lex") return OrderFamily::lex;
    throw std::invalid_argument("unknown order family '" + s + "'");
}

// A monomial comparison rule: an order family together with a variable
// ranking sigma, meaning x_{sigma(1)} > x_{sigma(2)} > ... > x_{sigma(n)}.
class TermOrder {
  public:
    TermOrder(OrderFamily family, int nvars) : family_(family), ranking_(static_cast<size_t>(nvars)) {
        if (nvars < 0) throw std::invalid_argument("TermOrder: negative variable count");
        std::iota(ranking_.begin(), ranking_.end(), 1);
    }

    // ranking[r] is the 1-based variable of rank r (rank 0 = highest).
    TermOrder(OrderFamily family, std::vector<int> ranking) : family_(family), ranking_(std::move(ranking)) {
        std::vector<bool> seen(ranking_.size(), false);
        for (int v : ranking_) {
            if (v < 1 || v > static_cast<int>(ranking_.size()) || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("TermOrder: ranking is not a permutation");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }

    OrderFamily family() const { return family_; }
    int nvars() const { return static_cast<int>(ranking_.size()); }
    const std::vector<int>& ranking() const { return ranking_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars() || b.nvars() != nvars())
            throw std::invalid_argument("TermOrder: monomial length mismatch");
        if (family_ == OrderFamily::degrevlex) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da <=> db;
            // Scan from the lowest-ranked variable upward; the first variable
            // where the exponents differ decides, smaller exponent wins.
            for (int r = nvars() - 1; r >= 0; --r) {
                int v = ranking_[static_cast<size_t>(r)];
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return eb <=> ea;
            }
            return std::strong_ordering::equal;
        }
        for (int r = 0; r < nvars(); ++r) {
            int v = ranking_[static_cast<size_t>(r)];
            int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea <=> eb;
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const TermOrder& other) const = default;

  private:
    OrderFamily family_;
    std::vector<int> ranking_;
};

inline TermOrder degrevlex(int nvars) { return TermOrder(OrderFamily::degrevlex, nvars); }
inline TermOrder lex(int nvars) { return TermOrder(OrderFamily::lex, nvars); }

}  // namespace gbsf
