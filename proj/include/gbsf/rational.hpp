#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>

namespace gbsf {

// Exact arithmetic carriers. mpq_class keeps values in lowest terms with a
// positive denominator; every helper below preserves that canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// Accepts "num" or "num/den" in base 10.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// C(n, k); zero outside the Pascal triangle.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// n! / (parts[0]! * parts[1]! * ...); the parts must sum to n.
inline BigInt multinomial(long n, std::span<const long> parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

}  // namespace gbsf
