#include "qfib/arithmetic.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qfib/errors.hpp"

namespace qfib {

std::int64_t Factorization::recompose() const {
    std::int64_t n = sign;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i)
            n *= p;
    return n;
}

SpfTable::SpfTable(std::uint64_t limit, std::uint64_t budget_bytes)
    : limit_(limit) {
    if (limit < 2)
        throw std::domain_error("SpfTable: limit must be >= 2");
    std::uint64_t bytes = (limit + 1) * sizeof(std::uint32_t);
    if (bytes > budget_bytes)
        throw resource_error("SpfTable: limit " + std::to_string(limit) +
                             " exceeds memory budget");
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf_[j] == 0)
                    spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::uint32_t SpfTable::spf(std::uint64_t n) const {
    if (n < 2 || n > limit_)
        throw std::out_of_range("SpfTable::spf: n out of table range");
    return spf_[n];
}

Factorization factorize(std::int64_t n, const SpfTable& table) {
    if (n == 0)
        throw std::domain_error("factorize: n must be nonzero");
    Factorization f;
    f.value = n;
    f.sign = n < 0 ? -1 : 1;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                            : static_cast<std::uint64_t>(n);
    if (m > table.limit())
        throw std::out_of_range("factorize: |n| exceeds table limit");
    while (m > 1) {
        std::uint32_t p = table.spf(m);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

SquarefreeCore squarefree_core(std::int64_t n, const SpfTable& table) {
    Factorization f = factorize(n, table);
    SquarefreeCore c;
    std::int64_t u = 1, m = 1;
    for (auto [p, e] : f.factors) {
        for (int i = 0; i < e / 2; ++i)
            m *= p;
        if (e % 2)
            u *= p;
    }
    c.core = f.sign * u;
    c.cofactor = m;
    return c;
}

bool is_squarefree(std::int64_t n, const SpfTable& table) {
    if (n == 0)
        throw std::domain_error("is_squarefree: n must be nonzero");
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                            : static_cast<std::uint64_t>(n);
    if (m > table.limit())
        throw std::out_of_range("is_squarefree: |n| exceeds table limit");
    while (m > 1) {
        std::uint32_t p = table.spf(m);
        m /= p;
        if (m % p == 0)
            return false;
    }
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("legendre_symbol: p must be an odd prime");
    std::int64_t r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    std::uint64_t e = powmod(static_cast<std::uint64_t>(r),
                             static_cast<std::uint64_t>((p - 1) / 2),
                             static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

PAdicValuation p_adic_valuation(std::int64_t n, std::int64_t p) {
    if (n == 0)
        throw std::domain_error("p_adic_valuation: n must be nonzero");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("p_adic_valuation: p must be prime");
    PAdicValuation r;
    r.unit = n;
    while (r.unit % p == 0) {
        r.unit /= p;
        ++r.v;
    }
    return r;
}

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0)
        return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0)
        return false;
    std::uint64_t r = isqrt(static_cast<std::uint64_t>(n));
    return r * r == static_cast<std::uint64_t>(n);
}

QuadraticResidueTables::QuadraticResidueTables(std::uint32_t limit)
    : limit_(limit), prime_index_(limit + 1, -1) {
    std::uint64_t total = 0;
    std::vector<std::uint32_t> odd_primes;
    // simple sieve just for the prime list
    std::vector<bool> comp(limit + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (comp[i])
            continue;
        if (i > 2)
            odd_primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit;
             j += i)
            comp[j] = true;
    }
    offset_.reserve(odd_primes.size());
    for (std::uint32_t p : odd_primes) {
        prime_index_[p] = static_cast<std::int32_t>(offset_.size());
        offset_.push_back(total);
        total += p;
    }
    bits_.assign((total + 63) / 64, 0);
    for (std::uint32_t p : odd_primes) {
        std::uint64_t base = offset_[prime_index_[p]];
        for (std::uint64_t r = 1; r <= (p - 1) / 2; ++r) {
            std::uint64_t sq = r * r % p;
            std::uint64_t bit = base + sq;
            bits_[bit >> 6] |= 1ull << (bit & 63);
        }
    }
}

bool QuadraticResidueTables::covers(std::int64_t p) const {
    return p >= 3 && static_cast<std::uint64_t>(p) <= limit_ &&
           prime_index_[p] >= 0;
}

bool QuadraticResidueTables::is_residue(std::int64_t a, std::int64_t p) const {
    std::int64_t r = a % p;
    if (r < 0)
        r += p;
    return is_residue_reduced(static_cast<std::uint32_t>(r), p);
}

} // namespace qfib
