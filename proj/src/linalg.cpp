#include "gbsf/linalg.hpp"

#include <stdexcept>

namespace gbsf {

namespace {

// Clears denominators row by row; rank is unchanged.
std::vector<std::vector<BigInt>> integerize(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(m.size());
    size_t cols = m.empty() ? 0 : m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("rank: ragged matrix");
        BigInt lcm = 1;
        for (const Rational& q : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<BigInt> irow;
        irow.reserve(cols);
        for (const Rational& q : row) {
            Rational scaled = q * Rational(lcm);
            irow.push_back(scaled.get_num());
        }
        out.push_back(std::move(irow));
    }
    return out;
}

}  // namespace

int rank_exact(const RationalMatrix& m) {
    auto a = integerize(m);
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    BigInt prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        // Pick the nonzero pivot of smallest bit size to slow entry growth.
        size_t pivot = rows;
        size_t best_bits = 0;
        for (size_t r = rank; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            size_t bits = mpz_sizeinbase(a[r][col].get_mpz_t(), 2);
            if (pivot == rows || bits < best_bits) {
                pivot = r;
                best_bits = bits;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                a[r][c] = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t powmod(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

uint64_t to_fp(const Rational& q) {
    BigInt p(static_cast<unsigned long>(kPrime));
    BigInt num = q.get_num() % p;
    if (num < 0) num += p;
    BigInt den = q.get_den() % p;
    uint64_t n = mpz_get_ui(num.get_mpz_t());
    uint64_t d = mpz_get_ui(den.get_mpz_t());
    if (d == 0) throw std::domain_error("rank_mod_p: denominator divisible by p");
    return mulmod(n, invmod(d));
}

}  // namespace

int rank_mod_p(const RationalMatrix& m) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<uint64_t>> a(rows);
    for (size_t r = 0; r < rows; ++r) {
        if (m[r].size() != cols) throw std::invalid_argument("rank: ragged matrix");
        a[r].reserve(cols);
        for (const Rational& q : m[r]) a[r].push_back(to_fp(q));
    }
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rows;
        for (size_t r = rank; r < rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        uint64_t inv = invmod(a[rank][col]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t factor = mulmod(a[r][col], inv);
            for (size_t c = col; c < cols; ++c) {
                uint64_t sub = mulmod(factor, a[rank][c]);
                a[r][c] = (a[r][c] >= sub) ? a[r][c] - sub : a[r][c] + kPrime - sub;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace gbsf
