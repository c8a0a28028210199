#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qfib {

/// Sign-split prime factorization: value = sign * prod p^e, primes strictly
/// increasing, exponents >= 1.
struct Factorization {
    std::int64_t value = 1;
    int sign = 1;
    std::vector<std::pair<std::int64_t, int>> factors; // (prime, exponent)

    std::int64_t recompose() const;
};

/// n = core * cofactor^2 with core square-free, sign(core) = sign(n),
/// cofactor >= 1.
struct SquarefreeCore {
    std::int64_t core = 1;
    std::int64_t cofactor = 1;
};

/// Smallest-prime-factor sieve. Built once, shared read-only; every query is
/// O(log n).
class SpfTable {
public:
    /// Builds the table for 2 <= n <= limit. Throws qfib::resource_error if
    /// (limit+1) * 4 bytes exceeds budget_bytes.
    explicit SpfTable(std::uint64_t limit,
                      std::uint64_t budget_bytes = default_budget_bytes);

    static constexpr std::uint64_t default_budget_bytes = 2ull << 30;

    std::uint64_t limit() const { return limit_; }

    /// Least prime dividing n; n must be in [2, limit].
    std::uint32_t spf(std::uint64_t n) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

Factorization factorize(std::int64_t n, const SpfTable& table);
SquarefreeCore squarefree_core(std::int64_t n, const SpfTable& table);
bool is_squarefree(std::int64_t n, const SpfTable& table);

/// Legendre symbol (a|p) in {-1,0,+1}; p must be an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// n = p^v * unit with p not dividing unit; n != 0, p prime.
struct PAdicValuation {
    int v = 0;
    std::int64_t unit = 1;
};
PAdicValuation p_adic_valuation(std::int64_t n, std::int64_t p);

/// True iff n = k^2 for some integer k >= 0.
bool is_perfect_square(std::int64_t n);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// floor(sqrt(n)) in exact integer arithmetic.
std::uint64_t isqrt(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Quadratic-residue bitmaps for every odd prime p <= limit; turns Legendre
/// symbols of nonzero residues into O(1) lookups in counting loops.
class QuadraticResidueTables {
public:
    explicit QuadraticResidueTables(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    bool covers(std::int64_t p) const;

    /// True iff a mod p is a nonzero square; a may be any integer with
    /// a % p != 0.
    bool is_residue(std::int64_t a, std::int64_t p) const;

    /// Lookup by reduced residue r in (0, p).
    bool is_residue_reduced(std::uint32_t r, std::int64_t p) const {
        std::uint64_t bit = offset_[prime_index_[p]] + r;
        return (bits_[bit >> 6] >> (bit & 63)) & 1;
    }

private:
    std::uint32_t limit_;
    std::vector<std::int32_t> prime_index_;
    std::vector<std::uint64_t> offset_;
    std::vector<std::uint64_t> bits_;
};

} // namespace qfib
