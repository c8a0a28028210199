#include "qfib/quadric_surface.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace qfib {
namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t gcd4(const std::array<std::int64_t, 4>& y) {
    std::int64_t g = 0;
    for (std::int64_t v : y)
        g = std::gcd(g, abs64(v));
    return g;
}

} // namespace

SurfacePoint SurfacePoint::make(std::array<std::int64_t, 4> y) {
    if (y[0] * y[1] != y[2] * y[3])
        throw std::domain_error("SurfacePoint: y0*y1 != y2*y3");
    if (gcd4(y) != 1)
        throw std::domain_error("SurfacePoint: coordinates not primitive");
    int zeros = 0;
    std::int64_t lead = 0;
    for (std::int64_t v : y) {
        if (v == 0)
            ++zeros;
        else if (lead == 0)
            lead = v;
    }
    if (lead <= 0)
        throw std::domain_error(
            "SurfacePoint: first nonzero coordinate must be positive");
    if (zeros == 1 || zeros == 4)
        throw std::domain_error("SurfacePoint: impossible zero pattern");
    return trusted(y, zeros ? PointClass::Degenerate
                            : PointClass::Nondegenerate);
}

TParam TParam::make(std::array<std::int64_t, 4> t) {
    for (std::int64_t v : t)
        if (v == 0)
            throw std::domain_error("TParam: components must be nonzero");
    if (t[0] <= 0 || t[2] <= 0)
        throw std::domain_error("TParam: gauge requires t0 > 0 and t2 > 0");
    if (std::gcd(abs64(t[0]), abs64(t[1])) != 1 ||
        std::gcd(abs64(t[2]), abs64(t[3])) != 1)
        throw std::domain_error("TParam: gcd(t0,t1) and gcd(t2,t3) must be 1");
    return TParam{t};
}

std::int64_t height(const SurfacePoint& point) {
    std::int64_t m = 0;
    for (std::int64_t v : point.y())
        m = std::max(m, abs64(v));
    return m * m;
}

SurfacePoint param_to_point(const TParam& t) {
    const auto& v = t.t;
    // primitive by the two gcd conditions; y0 = t0 t2 > 0 gives the gauge
    return SurfacePoint::make(
        {v[0] * v[2], v[1] * v[3], v[0] * v[3], v[1] * v[2]});
}

TParam point_to_param(const SurfacePoint& point) {
    if (point.cls() == PointClass::Degenerate)
        throw std::domain_error("point_to_param: degenerate point");
    const auto& y = point.y();
    std::int64_t t0 = std::gcd(abs64(y[0]), abs64(y[2]));
    std::int64_t t2 = y[0] / t0;
    std::int64_t t3 = y[2] / t0;
    std::int64_t t1 = y[1] / t3;
    // canonical nondegenerate points have y0 > 0, hence t2 = y0/t0 > 0;
    // TParam::make re-checks the gauge and the gcd invariants
    return TParam::make({t0, t1, t2, t3});
}

DiagonalForm fiber_form(const SurfacePoint& point) {
    if (point.cls() == PointClass::Degenerate)
        throw std::domain_error("fiber_form: degenerate point");
    const auto& y = point.y();
    return DiagonalForm({y[0], y[1], y[2], y[3]});
}

DiagonalForm reduced_fiber_form(const TParam& t, const SpfTable& table) {
    std::array<std::int64_t, 4> u;
    for (int i = 0; i < 4; ++i)
        u[i] = squarefree_core(t.t[i], table).core;
    return DiagonalForm({u[0] * u[2], u[1] * u[3], u[0] * u[3], u[1] * u[2]});
}

bool thin_set_member(const SurfacePoint& point) {
    if (point.cls() == PointClass::Degenerate)
        throw std::domain_error("thin_set_member: degenerate point");
    const auto& y = point.y();
    return is_perfect_square(-y[0] * y[2]) || is_perfect_square(-y[0] * y[3]);
}

bool anti_diagonal_member(const SurfacePoint& point) {
    const auto& y = point.y();
    return y[0] + y[2] == 0 && y[1] + y[3] == 0;
}

void enumerate_points(std::int64_t B, const PointVisitor& visit) {
    if (B < 1)
        throw std::domain_error("enumerate_points: B must be >= 1");
    surface_detail::for_each_degenerate(B, [&](const SurfacePoint& pt) {
        visit(pt, PointClass::Degenerate);
    });
    const std::int64_t S =
        static_cast<std::int64_t>(qfib::isqrt(static_cast<std::uint64_t>(B)));
    for (std::int64_t t0 = 1; t0 <= S; ++t0)
        surface_detail::for_each_in_stratum(
            B, t0, [&](const TParam&, const SurfacePoint& pt) {
                visit(pt, PointClass::Nondegenerate);
            });
}

} // namespace qfib
