#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbsf {

// Dense exponent vector over a fixed ambient variable count. Variables are
// 1-based in every public interface (x1..xn); storage is 0-based.
class Monomial {
  public:
    explicit Monomial(int nvars) : exps_(static_cast<size_t>(check_nvars(nvars)), 0) {}

    static Monomial from_exponents(std::vector<int> exps) {
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        Monomial m(static_cast<int>(exps.size()));
        m.exps_ = std::move(exps);
        return m;
    }

    static Monomial variable(int nvars, int var, int power = 1) {
        Monomial m(nvars);
        m.set_exponent(var, power);
        return m;
    }

    // Squarefree monomial x_S for a 1-based index set S.
    static Monomial from_support(int nvars, std::span<const int> vars) {
        Monomial m(nvars);
        for (int v : vars) {
            if (m.exponent(v) != 0) throw std::invalid_argument("Monomial: repeated support index");
            m.set_exponent(v, 1);
        }
        return m;
    }

    int nvars() const { return static_cast<int>(exps_.size()); }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    int exponent(int var) const {
        check_var(var);
        return exps_[static_cast<size_t>(var - 1)];
    }

    void set_exponent(int var, int value) {
        check_var(var);
        if (value < 0) throw std::invalid_argument("Monomial: negative exponent");
        exps_[static_cast<size_t>(var - 1)] = value;
    }

    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
    }

    // 1-based indices of variables with positive exponent, ascending.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i)
            if (exps_[static_cast<size_t>(i)] > 0) s.push_back(i + 1);
        return s;
    }

    int max_support() const {
        for (int i = nvars(); i >= 1; --i)
            if (exps_[static_cast<size_t>(i - 1)] > 0) return i;
        return 0;  // the monomial 1
    }

    bool divides(const Monomial& other) const {
        check_same(other);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        check_same(other);
        Monomial r(nvars());
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
        return r;
    }

    // this / other; requires other | this.
    Monomial divide_exact(const Monomial& other) const {
        check_same(other);
        Monomial r(nvars());
        for (size_t i = 0; i < exps_.size(); ++i) {
            if (other.exps_[i] > exps_[i]) throw std::invalid_argument("Monomial: inexact division");
            r.exps_[i] = exps_[i] - other.exps_[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& other) const {
        check_same(other);
        Monomial r(nvars());
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        return r;
    }

    Monomial gcd(const Monomial& other) const {
        check_same(other);
        Monomial r(nvars());
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
        return r;
    }

    bool coprime(const Monomial& other) const {
        check_same(other);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && other.exps_[i] > 0) return false;
        return true;
    }

    // Sets the given variable's exponent to zero (evaluation at 1).
    Monomial evaluate_at_one(int var) const {
        Monomial r = *this;
        r.set_exponent(var, 0);
        return r;
    }

    bool operator==(const Monomial& other) const = default;

    // Order-independent canonical comparison, used for map keys only.
    std::strong_ordering operator<=>(const Monomial& other) const {
        check_same(other);
        return exps_ <=> other.exps_;
    }

  private:
    static int check_nvars(int nvars) {
        if (nvars < 0) throw std::invalid_argument("Monomial: negative variable count");
        return nvars;
    }
    void check_var(int var) const {
        if (var < 1 || var > nvars()) throw std::out_of_range("Monomial: variable index out of range");
    }
    void check_same(const Monomial& other) const {
        if (nvars() != other.nvars())
            throw std::invalid_argument("Monomial: ambient variable counts differ");
    }

    std::vector<int> exps_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int e : m.exponents()) {
            h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace gbsf
