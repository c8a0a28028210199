#include "qfib/sieve_model.hpp"

#include <cmath>
#include <stdexcept>

#include "qfib/arithmetic.hpp"
#include "qfib/errors.hpp"

namespace qfib {
namespace {

void check_residues(const std::array<std::int64_t, 4>& r, std::int64_t p) {
    for (std::int64_t c : r)
        if (c < 0 || c >= p)
            throw std::domain_error("omega_membership: residue out of [0,p)");
}

// nonsquare unit test for a product r*s of two nonzero residues
template <typename Chi>
bool product_is_nonsquare_unit(std::int64_t r, std::int64_t s, std::int64_t p,
                               Chi chi) {
    if (p == 2)
        return false; // the only unit mod 2 is a square
    std::int64_t m = (p - (r * s) % p) % p; // -r*s mod p
    if (m == 0)
        return false;
    return !chi(m);
}

template <typename Chi>
OmegaMembership omega_membership_impl(const std::array<std::int64_t, 4>& r,
                                      std::int64_t p, Chi chi) {
    check_residues(r, p);
    const bool z0 = r[0] == 0, z1 = r[1] == 0, z2 = r[2] == 0, z3 = r[3] == 0;
    if (z0 + z1 + z2 + z3 != 1)
        return std::nullopt; // each component has exactly one vanishing slot
    if (z0 || z1) {
        if (z0 && !z1 && !z2 && !z3 &&
            product_is_nonsquare_unit(r[2], r[3], p, chi))
            return 0;
        if (z1 && !z0 && !z2 && !z3 &&
            product_is_nonsquare_unit(r[2], r[3], p, chi))
            return 1;
        return std::nullopt;
    }
    if (z2 && product_is_nonsquare_unit(r[0], r[1], p, chi))
        return 2;
    if (z3 && product_is_nonsquare_unit(r[0], r[1], p, chi))
        return 3;
    return std::nullopt;
}

} // namespace

OmegaMembership omega_membership(const std::array<std::int64_t, 4>& r,
                                 std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("omega_membership: p must be prime");
    return omega_membership_impl(r, p, [p](std::int64_t m) {
        return p == 2 || legendre_symbol(m, p) == 1;
    });
}

OmegaMembership omega_membership(const std::array<std::int64_t, 4>& r,
                                 std::int64_t p,
                                 const QuadraticResidueTables& qr) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("omega_membership: p must be prime");
    return omega_membership_impl(r, p, [&qr, p](std::int64_t m) {
        return qr.is_residue_reduced(static_cast<std::uint32_t>(m), p);
    });
}

std::int64_t omega_size_formula(std::int64_t p) {
    if (p == 2)
        throw std::domain_error("omega_size_formula: stated for p > 2 only");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("omega_size_formula: p must be prime");
    std::int64_t q = p - 1;
    return 2 * q * q * q;
}

std::int64_t omega_size_bruteforce(std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("omega_size_bruteforce: p must be prime");
    double p4 = std::pow(static_cast<double>(p), 4.0);
    if (p4 > 1e9)
        throw resource_error("omega_size_bruteforce: p^4 exceeds 10^9");
    std::int64_t count = 0;
    if (p == 2) {
        for (std::int64_t r0 = 0; r0 < 2; ++r0)
            for (std::int64_t r1 = 0; r1 < 2; ++r1)
                for (std::int64_t r2 = 0; r2 < 2; ++r2)
                    for (std::int64_t r3 = 0; r3 < 2; ++r3)
                        count += omega_membership({r0, r1, r2, r3}, 2)
                                     .has_value();
        return count;
    }
    QuadraticResidueTables qr(static_cast<std::uint32_t>(p));
    std::array<std::int64_t, 4> r;
    for (r[0] = 0; r[0] < p; ++r[0])
        for (r[1] = 0; r[1] < p; ++r[1])
            for (r[2] = 0; r[2] < p; ++r[2])
                for (r[3] = 0; r[3] < p; ++r[3])
                    count += omega_membership(r, p, qr).has_value();
    return count;
}

namespace {

// |Omega_p| / (p^4 - |Omega_p|) as an exact rational; zero at p = 2
mpq_class local_factor(std::int64_t p) {
    if (p == 2)
        return mpq_class(0);
    mpz_class w = omega_size_formula(p);
    mpz_class p4 = mpz_class(p) * p * p * p;
    mpq_class q(w, p4 - w);
    q.canonicalize();
    return q;
}

} // namespace

SieveEvaluation f_of_L(std::int64_t L, bool force_exact) {
    if (L < 1)
        throw std::domain_error("f_of_L: L must be >= 1");
    const bool exact = force_exact || L <= f_exact_default_limit;
    if (exact && L > f_exact_hard_limit)
        throw resource_error("f_of_L: exact evaluation capped at L = 10^5");
    SieveEvaluation out;
    out.L = L;
    if (L == 1) {
        out.exact = mpq_class(1);
        out.value = 1.0;
        return out;
    }
    SpfTable table(static_cast<std::uint64_t>(L));

    if (exact) {
        mpq_class total(1);
        for (std::int64_t n = 3; n <= L; n += 2) { // even terms vanish
            if (!is_squarefree(n, table))
                continue;
            mpq_class term(1);
            std::int64_t m = n;
            while (m > 1) {
                std::int64_t p = table.spf(static_cast<std::uint64_t>(m));
                term *= local_factor(p);
                m /= p;
            }
            total += term;
        }
        out.exact = total;
        out.value = total.get_d();
        return out;
    }

    // Kahan-compensated floating summation for large L
    double sum = 1.0, comp = 0.0;
    for (std::int64_t n = 3; n <= L; n += 2) {
        if (!is_squarefree(n, table))
            continue;
        double term = 1.0;
        std::int64_t m = n;
        while (m > 1) {
            std::int64_t p = table.spf(static_cast<std::uint64_t>(m));
            double q = static_cast<double>(p - 1);
            double w = 2.0 * q * q * q;
            double p4 = static_cast<double>(p) * p * p * p;
            term *= w / (p4 - w);
            m /= p;
        }
        double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                                : (term - t) + sum;
        sum = t;
    }
    out.value = sum + comp;
    return out;
}

double large_sieve_bound(const std::array<double, 4>& U, std::int64_t L) {
    if (L < 1)
        throw std::domain_error("large_sieve_bound: L must be >= 1");
    double L2 = static_cast<double>(L) * static_cast<double>(L);
    double num = 1.0;
    for (double u : U) {
        if (u <= 0)
            throw std::domain_error("large_sieve_bound: U_i must be > 0");
        num *= u + L2;
    }
    return num / f_of_L(L).value;
}

std::vector<std::pair<std::int64_t, double>>
f_growth_table(const std::vector<std::int64_t>& Ls) {
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(Ls.size());
    for (std::int64_t L : Ls) {
        if (L < 2)
            throw std::domain_error("f_growth_table: each L must be >= 2");
        double lg = std::log(static_cast<double>(L));
        rows.emplace_back(L, f_of_L(L).value / (lg * lg));
    }
    return rows;
}

} // namespace qfib
