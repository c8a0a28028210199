#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qfib {

class QuadraticResidueTables;

/// Index i of the component Omega_{p,i} containing a residue vector, if any.
/// The four components are pairwise disjoint: each fixes a different
/// vanishing coordinate and requires the other three nonzero.
using OmegaMembership = std::optional<int>;

/// Membership of r in Omega_p = union of Omega_{p,0..3}:
///   i in {0,1}: r_i = 0, the other three nonzero, -r2 r3 a nonsquare unit;
///   i in {2,3}: r_i = 0, the other three nonzero, -r0 r1 a nonsquare unit.
/// Components must lie in [0, p). For p = 2 every unit is a square, so the
/// result is always nullopt.
OmegaMembership omega_membership(const std::array<std::int64_t, 4>& r,
                                 std::int64_t p);

/// Same test with Legendre lookups served from a precomputed table
/// (qr.covers(p) required); used by the brute-force counter.
OmegaMembership omega_membership(const std::array<std::int64_t, 4>& r,
                                 std::int64_t p,
                                 const QuadraticResidueTables& qr);

/// |Omega_p| = 2 p^3 (1 - 1/p)^3 = 2 (p-1)^3, valid for odd primes only.
std::int64_t omega_size_formula(std::int64_t p);

/// Exhaustive count of r in F_p^4 with omega_membership(r) != nullopt.
/// Requires p^4 <= 10^9 (resource error beyond).
std::int64_t omega_size_bruteforce(std::int64_t p);

/// F(L) = sum over square-free n <= L of prod_{p | n} |Omega_p| /
/// (p^4 - |Omega_p|), with |Omega_2| = 0 killing all even terms.
struct SieveEvaluation {
    std::int64_t L = 1;
    std::optional<mpq_class> exact; // present when computed exactly
    double value = 1.0;
};

/// Exact rational evaluation for L <= exact_limit (default on), compensated
/// floating summation beyond. force_exact extends the exact path to larger L
/// at the caller's expense; above 10^5 it throws qfib::resource_error.
SieveEvaluation f_of_L(std::int64_t L, bool force_exact = false);

constexpr std::int64_t f_exact_default_limit = 10'000;
constexpr std::int64_t f_exact_hard_limit = 100'000;

/// Main term prod_i (U_i + L^2) / F(L) of the large-sieve bound; an
/// order-of-magnitude diagnostic, not a certified bound (the absolute
/// implied constant is unknowable here).
double large_sieve_bound(const std::array<double, 4>& U, std::int64_t L);

/// Rows (L, F(L) / (log L)^2), natural log; numeric probe of the
/// F(L) >> (log L)^2 growth lemma.
std::vector<std::pair<std::int64_t, double>>
f_growth_table(const std::vector<std::int64_t>& Ls);

} // namespace qfib
