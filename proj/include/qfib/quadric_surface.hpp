#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "qfib/arithmetic.hpp"
#include "qfib/local_solubility.hpp"

namespace qfib {

enum class PointClass { Nondegenerate, Degenerate };

/// Primitive integer point on the split quadric y0 y1 = y2 y3 in canonical
/// projective form (first nonzero coordinate positive). The quadric forces
/// zero coordinates, when present, to come in pairs.
class SurfacePoint {
public:
    /// Validating factory; throws std::domain_error on any invariant
    /// violation.
    static SurfacePoint make(std::array<std::int64_t, 4> y);

    /// Enumeration-internal constructor: the caller guarantees the
    /// invariants by construction (tests pin the enumerators against a
    /// brute-force scan built through make()).
    static SurfacePoint trusted(std::array<std::int64_t, 4> y,
                                PointClass cls) {
        SurfacePoint pt;
        pt.y_ = y;
        pt.cls_ = cls;
        return pt;
    }

    const std::array<std::int64_t, 4>& y() const { return y_; }
    std::int64_t operator[](int i) const { return y_[i]; }
    PointClass cls() const { return cls_; }

    bool operator==(const SurfacePoint&) const = default;
    auto operator<=>(const SurfacePoint&) const = default;

private:
    SurfacePoint() = default;
    std::array<std::int64_t, 4> y_{};
    PointClass cls_ = PointClass::Nondegenerate;
};

/// Parameter quadruple with y = (t0 t2, t1 t3, t0 t3, t1 t2); the gauge
/// t0 > 0, t2 > 0 with gcd(t0,t1) = gcd(t2,t3) = 1 picks a unique
/// representative per nondegenerate canonical point.
struct TParam {
    std::array<std::int64_t, 4> t{1, 1, 1, 1};

    static TParam make(std::array<std::int64_t, 4> t);
};

/// Anticanonical height (max_i |y_i|)^2.
std::int64_t height(const SurfacePoint& point);

SurfacePoint param_to_point(const TParam& t);

/// Inverse of param_to_point on nondegenerate points; throws
/// std::domain_error on degenerate input.
TParam point_to_param(const SurfacePoint& point);

/// The fiber form <y0,y1,y2,y3>; degenerate points have no valid diagonal
/// fiber form and throw std::domain_error.
DiagonalForm fiber_form(const SurfacePoint& point);

/// <u0 u2, u1 u3, u0 u3, u1 u2> for u_i the square-free core of t_i; local
/// solubility of the fiber depends only on this reduced form.
DiagonalForm reduced_fiber_form(const TParam& t, const SpfTable& table);

/// True iff -y0 y2 or -y0 y3 is a perfect square (nondegenerate points
/// only).
bool thin_set_member(const SurfacePoint& point);

/// True iff y0 + y2 = 0 and y1 + y3 = 0.
bool anti_diagonal_member(const SurfacePoint& point);

/// Streams every canonical point of height <= B exactly once.
using PointVisitor = std::function<void(const SurfacePoint&, PointClass)>;
void enumerate_points(std::int64_t B, const PointVisitor& visit);

namespace surface_detail {

/// Nondegenerate stratum t0 = fixed: all gauge TParams with every
/// |y_i| <= sqrt(B). Strata over t0 in [1, isqrt(B)] partition the
/// nondegenerate points, so downstream aggregation may run them in any
/// order or in parallel. Visit(const TParam&, const SurfacePoint&).
template <class Visit>
void for_each_in_stratum(std::int64_t B, std::int64_t t0, Visit&& visit) {
    const std::int64_t S =
        static_cast<std::int64_t>(qfib::isqrt(static_cast<std::uint64_t>(B)));
    if (t0 < 1 || t0 > S)
        return;
    const std::int64_t n = S / t0; // bound for t2 and |t3|

    // coprime-to-t0 bitmap over [1, S]: the t1 loop is the hot one
    std::vector<std::uint8_t> coprime(static_cast<std::size_t>(S) + 1, 1);
    {
        std::int64_t m = t0;
        for (std::int64_t p = 2; p * p <= m; ++p) {
            if (m % p)
                continue;
            while (m % p == 0)
                m /= p;
            for (std::int64_t j = p; j <= S; j += p)
                coprime[j] = 0;
        }
        if (m > 1)
            for (std::int64_t j = m; j <= S; j += m)
                coprime[j] = 0;
    }

    for (std::int64_t t2 = 1; t2 <= n; ++t2) {
        for (std::int64_t a3 = 1; a3 <= n; ++a3) {
            if (std::gcd(t2, a3) != 1)
                continue;
            const std::int64_t m1 = S / std::max(t2, a3);
            for (std::int64_t t3 : {a3, -a3}) {
                const std::int64_t y2 = t0 * t3;
                for (std::int64_t a1 = 1; a1 <= m1; ++a1) {
                    if (!coprime[a1])
                        continue;
                    for (std::int64_t t1 : {a1, -a1}) {
                        TParam t{{t0, t1, t2, t3}};
                        SurfacePoint pt = SurfacePoint::trusted(
                            {t0 * t2, t1 * t3, y2, t1 * t2},
                            PointClass::Nondegenerate);
                        visit(static_cast<const TParam&>(t), pt);
                    }
                }
            }
        }
    }
}

/// All degenerate points of height <= B: the four two-zero coordinate
/// patterns with both free coordinates nonzero, plus the four axis points
/// (each of which would otherwise be produced by two patterns).
/// Visit(const SurfacePoint&).
template <class Visit>
void for_each_degenerate(std::int64_t B, Visit&& visit) {
    const std::int64_t S =
        static_cast<std::int64_t>(qfib::isqrt(static_cast<std::uint64_t>(B)));
    auto emit = [&](std::array<std::int64_t, 4> y) {
        visit(SurfacePoint::trusted(y, PointClass::Degenerate));
    };
    for (std::int64_t a = 1; a <= S; ++a) {
        for (std::int64_t b1 = 1; b1 <= S; ++b1) {
            if (std::gcd(a, b1) != 1)
                continue;
            for (std::int64_t b : {b1, -b1}) {
                emit({0, a, 0, b}); // y0 = y2 = 0
                emit({0, a, b, 0}); // y0 = y3 = 0
                emit({a, 0, 0, b}); // y1 = y2 = 0
                emit({a, 0, b, 0}); // y1 = y3 = 0
            }
        }
    }
    emit({1, 0, 0, 0});
    emit({0, 1, 0, 0});
    emit({0, 0, 1, 0});
    emit({0, 0, 0, 1});
}

} // namespace surface_detail

} // namespace qfib
