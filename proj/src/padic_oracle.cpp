#include "qfib/padic_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/kernels.hpp"

namespace qfib {
namespace {

struct VarMaps {
    std::vector<std::uint8_t> any; // value attained by some x
    std::vector<std::uint8_t> nz;  // attained with x not divisible by p
    std::vector<std::uint8_t> low; // attained with v_p(2 a x) <= m
};

// Value maps of x -> a_eff * x^2 (mod M) over all residues x, with the
// divisibility and Hensel-level flags of an attaining x. a_eff is the
// coefficient reduced mod M (already negated by the caller for the second
// half); v2a is v_p(2a) of the original coefficient.
VarMaps build_var_maps(std::uint32_t a_eff, std::uint32_t M, std::int64_t p,
                       int v2a, int m) {
    VarMaps maps;
    maps.any.assign(M, 0);
    maps.nz.assign(M, 0);
    maps.low.assign(M, 0);
    const bool low_unit = v2a <= m;
    constexpr std::size_t chunk = 8192;
    std::vector<std::uint32_t> buf(std::min<std::size_t>(chunk, M));
    std::uint32_t pc = 0; // x mod p, maintained incrementally
    for (std::uint32_t x0 = 0; x0 < M; x0 += chunk) {
        std::size_t len = std::min<std::size_t>(chunk, M - x0);
        kernels::square_mod_values(a_eff, M, x0, buf.data(), len);
        for (std::size_t i = 0; i < len; ++i) {
            std::uint32_t x = x0 + static_cast<std::uint32_t>(i);
            std::uint32_t v = buf[i];
            maps.any[v] = 1;
            if (pc != 0) {
                maps.nz[v] = 1;
                if (low_unit)
                    maps.low[v] = 1;
            } else if (x != 0) {
                int e = 0;
                std::uint32_t y = x;
                while (y % p == 0) {
                    y /= static_cast<std::uint32_t>(p);
                    ++e;
                }
                if (v2a + e <= m)
                    maps.low[v] = 1;
            }
            if (++pc == p)
                pc = 0;
        }
    }
    return maps;
}

// Sumset of two variables' value maps: HALF[s] holds iff some (x_i, x_j)
// attains s, with the same flag semantics (nz / low hold if either
// coordinate provides them).
VarMaps combine_pair(const VarMaps& vi, const VarMaps& vj, std::uint32_t M) {
    VarMaps half;
    half.any.assign(M, 0);
    half.nz.assign(M, 0);
    half.low.assign(M, 0);
    for (std::uint32_t v = 0; v < M; ++v) {
        if (!vi.any[v])
            continue;
        std::size_t shift = v == 0 ? 0 : M - v;
        kernels::or_rotated(half.any.data(), vj.any.data(), M, shift);
        kernels::or_rotated(half.nz.data(),
                            vi.nz[v] ? vj.any.data() : vj.nz.data(), M,
                            shift);
        kernels::or_rotated(half.low.data(),
                            vi.low[v] ? vj.any.data() : vj.low.data(), M,
                            shift);
    }
    return half;
}

std::uint32_t reduce_coeff(std::int64_t a, std::uint32_t M, bool negate) {
    std::int64_t r = a % static_cast<std::int64_t>(M);
    if (r < 0)
        r += M;
    if (negate && r != 0)
        r = M - r;
    return static_cast<std::uint32_t>(r);
}

int vp(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

struct StageResult {
    bool primitive_zero;
    bool certified_zero;
};

// One search stage mod M = p^k; m = floor((k-1)/2). check_cert may be
// disabled for an even final depth (its certificate level was already
// covered by the previous odd stage).
StageResult run_stage(const DiagonalForm& form, std::int64_t p,
                      std::uint32_t M, int m, bool check_cert) {
    const int rank = form.rank();
    std::vector<int> v2a(rank);
    for (int i = 0; i < rank; ++i)
        v2a[i] = vp(2 * form.coeff(i), p);

    VarMaps half_a;
    {
        VarMaps v0 = build_var_maps(reduce_coeff(form.coeff(0), M, false), M,
                                    p, v2a[0], m);
        VarMaps v1 = build_var_maps(reduce_coeff(form.coeff(1), M, false), M,
                                    p, v2a[1], m);
        half_a = combine_pair(v0, v1, M);
    }
    VarMaps half_b; // built on negated values: index s means "sums to -s"
    if (rank == 4) {
        VarMaps v2 = build_var_maps(reduce_coeff(form.coeff(2), M, true), M,
                                    p, v2a[2], m);
        VarMaps v3 = build_var_maps(reduce_coeff(form.coeff(3), M, true), M,
                                    p, v2a[3], m);
        half_b = combine_pair(v2, v3, M);
    } else {
        half_b = build_var_maps(reduce_coeff(form.coeff(2), M, true), M, p,
                                v2a[2], m);
    }

    StageResult r{};
    r.primitive_zero =
        kernels::any_and(half_a.nz.data(), half_b.any.data(), M) ||
        kernels::any_and(half_a.any.data(), half_b.nz.data(), M);
    r.certified_zero =
        check_cert &&
        (kernels::any_and(half_a.low.data(), half_b.any.data(), M) ||
         kernels::any_and(half_a.any.data(), half_b.low.data(), M));
    return r;
}

} // namespace

int default_oracle_depth(const DiagonalForm& form, std::int64_t p) {
    int maxv = 0;
    for (std::int64_t c : form.coefficients())
        maxv = std::max(maxv, vp(c, p));
    return 2 * maxv + (p == 2 ? 5 : 3);
}

OracleVerdict oracle_isotropic_mod_pk(const DiagonalForm& form,
                                      std::int64_t p, int depth) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("oracle_isotropic_mod_pk: p must be prime");
    if (depth < 1)
        throw std::domain_error("oracle_isotropic_mod_pk: depth must be >= 1");
    constexpr std::uint64_t budget = 100'000'000;
    std::uint64_t M = 1;
    for (int i = 0; i < depth; ++i) {
        M *= static_cast<std::uint64_t>(p);
        if (M > budget)
            throw resource_error(
                "oracle_isotropic_mod_pk: p^depth exceeds search budget");
    }

    // Escalate through odd k: "no primitive zero mod p^k" already rules out
    // zeros mod p^depth, and a Hensel certificate at any level 2m+1 <= depth
    // is final, so shallow stages settle most forms cheaply.
    std::uint64_t Mk = 1;
    for (int k = 1; k <= depth; k += 2) {
        Mk = Mk == 1 ? static_cast<std::uint64_t>(p) : Mk * p * p;
        StageResult s = run_stage(form, p, static_cast<std::uint32_t>(Mk),
                                  (k - 1) / 2, true);
        if (!s.primitive_zero)
            return OracleVerdict::Anisotropic;
        if (s.certified_zero)
            return OracleVerdict::Isotropic;
        if (k == depth)
            return OracleVerdict::Unknown;
    }
    // even depth: one more zero-existence stage at the full modulus
    StageResult s = run_stage(form, p, static_cast<std::uint32_t>(M),
                              (depth - 1) / 2, false);
    if (!s.primitive_zero)
        return OracleVerdict::Anisotropic;
    return OracleVerdict::Unknown;
}

} // namespace qfib
