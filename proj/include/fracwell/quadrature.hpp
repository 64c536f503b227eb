#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fracwell {

// Tolerances and budget for adaptive integration. The split budget counts
// bisections, not seed panels.
struct QuadratureControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    std::size_t max_subdivisions = 2000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae (nonnegative half) and weights. Odd indices
// are the embedded Gauss-7 points.
inline constexpr double gk_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double resk = gk_wk[7] * fc;
    double resg = gk_wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * gk_x[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        resk += gk_wk[j] * (f1 + f2);
        if (j % 2 == 1)
            resg += gk_wg[j / 2] * (f1 + f2);
    }
    value = resk * half;
    error = std::abs((resk - resg) * half);
}

struct Segment {
    double a, b, value, error;
};

} // namespace detail

// Adaptive Gauss-Kronrod 7-15 over consecutive panels [points[i], points[i+1]]:
// repeatedly bisect the panel with the largest error estimate until the global
// estimate meets max(abs_tol, rel_tol |value|). Deterministic: ties resolve to
// the first worst panel.
template <class F>
QuadratureResult integrate(const F& f, const std::vector<double>& points,
                           const QuadratureControl& ctl = {}) {
    if (points.size() < 2)
        throw DomainError("integrate: need at least two breakpoints");
    std::vector<detail::Segment> segs;
    segs.reserve(points.size() + ctl.max_subdivisions);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1]))
            throw DomainError("integrate: breakpoints must be strictly increasing");
        detail::Segment s{points[i], points[i + 1], 0.0, 0.0};
        detail::gk15(f, s.a, s.b, s.value, s.error);
        segs.push_back(s);
    }
    std::size_t splits = 0;
    while (true) {
        double value = 0.0;
        double error = 0.0;
        for (const auto& s : segs) {
            value += s.value;
            error += s.error;
        }
        if (error <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(value)))
            return {value, error, splits};
        if (splits >= ctl.max_subdivisions)
            throw ToleranceNotMet("integrate: budget exhausted, error estimate " +
                                  std::to_string(error));
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const detail::Segment& p, const detail::Segment& r) { return p.error < r.error; });
        const double a = worst->a;
        const double b = worst->b;
        const double m = 0.5 * (a + b);
        detail::Segment left{a, m, 0.0, 0.0};
        detail::Segment right{m, b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        *worst = left;
        segs.push_back(right);
        ++splits;
    }
}

template <class F>
QuadratureResult integrate(const F& f, double a, double b,
                           const QuadratureControl& ctl = {}) {
    return integrate(f, std::vector<double>{a, b}, ctl);
}

} // namespace fracwell
