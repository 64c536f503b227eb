#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "errors.hpp"

namespace fracwell {

using Complex = std::complex<double>;

// Termination and budget control shared by all series and continued-fraction
// evaluations.
struct SeriesControl {
    double rel_tol = 1e-13;
    std::size_t max_terms = 10000;
};

// log Gamma(x) for x > 0. The C runtime lgamma meets the 1e-13 relative
// bound on this domain, so no custom Lanczos is carried.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("log_gamma: requires x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

// Generalized hypergeometric 1F2(a; b, c; z) by direct summation with the
// term ratio t_{n+1}/t_n = (a+n) z / ((b+n)(c+n)(n+1)). Terminates on two
// consecutive terms below rel_tol * |sum|.
inline double hyp1f2(double a, double b, double c, double z,
                     const SeriesControl& ctl = {}) {
    auto at_pole = [](double v) {
        return v <= 0.0 && std::abs(v - std::round(v)) < 1e-12;
    };
    if (at_pole(b) || at_pole(c))
        throw PoleInParameter("hyp1f2: lower parameter at a nonpositive integer: b=" +
                              std::to_string(b) + " c=" + std::to_string(c));
    double term = 1.0;
    double sum = 1.0;
    int small_run = 0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        term *= (a + double(n)) / ((b + double(n)) * (c + double(n))) * z / double(n + 1);
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            if (++small_run >= 2)
                return sum;
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("hyp1f2: series did not meet tolerance within max_terms");
}

namespace detail {

inline constexpr double euler_gamma = 0.5772156649015328606;

// Gamma(a, z) for base order a in (0, 1] and small |z|: Gamma(a) minus the
// damped lower-incomplete series gamma(a,z) = z^a e^{-z} sum z^n / (a...(a+n)).
inline Complex upper_gamma_base_series(double a, Complex z, const SeriesControl& ctl) {
    Complex term = 1.0 / a;
    Complex sum = term;
    int small_run = 0;
    for (std::size_t n = 1; n < ctl.max_terms; ++n) {
        term *= z / (a + double(n));
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            if (++small_run >= 2)
                return std::tgamma(a) - std::pow(z, a) * std::exp(-z) * sum;
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("upper_gamma: lower-incomplete series stalled");
}

// Gamma(0, z) = E1(z) for small |z|, principal branch of the logarithm.
inline Complex e1_series(Complex z, const SeriesControl& ctl) {
    Complex term = 1.0; // (-z)^n / n!
    Complex sum = 0.0;
    int small_run = 0;
    for (std::size_t n = 1; n < ctl.max_terms; ++n) {
        term *= -z / double(n);
        Complex contrib = term / double(n);
        sum += contrib;
        if (std::abs(contrib) <= ctl.rel_tol * std::max(std::abs(sum), 1e-300)) {
            if (++small_run >= 2)
                return -euler_gamma - std::log(z) - sum;
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("upper_gamma: E1 series stalled");
}

// Gamma(a, z) for large |z| by the modified Lentz continued fraction
//   e^{-z} z^a / (z + 1 - a - 1(1-a)/(z + 3 - a - 2(2-a)/(...))).
inline Complex upper_gamma_cf(double a, Complex z, const SeriesControl& ctl) {
    const double tiny = 1e-300;
    Complex b = z + (1.0 - a);
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (std::size_t i = 1; i < ctl.max_terms; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < ctl.rel_tol)
            return std::exp(-z) * std::pow(z, a) * h;
    }
    throw NoConvergence("upper_gamma: continued fraction stalled");
}

} // namespace detail

// Upper incomplete gamma Gamma(a, z) for real order a (any sign) and complex
// argument, principal branch. Base orders in (0, 1] are summed directly
// (series for |z| <= 8, Lentz continued fraction beyond; the switch radius is
// cross-validated in an overlap annulus by the tests). Negative orders come
// from the downward recurrence
//   Gamma(a-1, z) = (Gamma(a, z) - z^{a-1} e^{-z}) / (a - 1),
// applied ceil(-a) times. Integer orders a <= 0 would divide by zero passing
// through a = 0, so they start from Gamma(0, z) = E1(z) instead.
inline Complex upper_gamma(double a, Complex z, const SeriesControl& ctl = {}) {
    if (z == Complex(0.0, 0.0)) {
        if (a > 0.0)
            return std::tgamma(a);
        throw BranchPointArgument("upper_gamma: z = 0 is a branch point for a <= 0");
    }
    const bool large = std::abs(z) > 8.0;
    double rounded = std::round(a);
    int steps = 0;
    double base = a;
    if (a <= 0.0) {
        if (std::abs(a - rounded) < 1e-12) {
            base = 0.0;
            steps = int(-rounded);
        } else {
            steps = int(std::ceil(-a));
            base = a + double(steps);
        }
    }
    Complex g;
    if (base == 0.0)
        g = large ? detail::upper_gamma_cf(0.0, z, ctl) : detail::e1_series(z, ctl);
    else
        g = large ? detail::upper_gamma_cf(base, z, ctl)
                  : detail::upper_gamma_base_series(base, z, ctl);
    const Complex emz = std::exp(-z);
    double cur = base;
    for (int s = 0; s < steps; ++s) {
        double down = cur - 1.0;
        g = (g - std::pow(z, down) * emz) / down;
        cur = down;
    }
    return g;
}

// Mittag-Leffler E_{alpha,beta}(z) for real z by the defining series, with
// term magnitudes built in log space. Validated window: |z| <= 25 and
// |z|^{1/alpha} <= 30; the second bound caps the peak term near e^30 so the
// alternating sum keeps at least ~3 honest digits in double. Beyond the
// window the sum is cancellation garbage and is rejected.
inline double mittag_leffler(double alpha, double beta, double z,
                             const SeriesControl& ctl = {}) {
    if (!(alpha > 0.0))
        throw DomainError("mittag_leffler: requires alpha > 0");
    if (!(beta > 0.0))
        throw DomainError("mittag_leffler: requires beta > 0");
    const double az = std::abs(z);
    if (az > 25.0 * (1.0 + 1e-9) || (az > 1.0 && std::pow(az, 1.0 / alpha) > 30.0))
        throw OutOfValidatedRange("mittag_leffler: |z| = " + std::to_string(az) +
                                  " outside validated window for alpha = " +
                                  std::to_string(alpha));
    if (z == 0.0)
        return 1.0 / std::tgamma(beta);
    const double lnaz = std::log(az);
    const bool negative = z < 0.0;
    double sum = 0.0;
    double max_term = 0.0;
    int small_run = 0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        double lt = double(n) * lnaz - std::lgamma(alpha * double(n) + beta);
        double term = std::exp(lt);
        if (negative && (n % 2 == 1))
            term = -term;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        // Terms below the accumulated rounding floor cannot change the sum.
        double floor_tol = std::max(ctl.rel_tol * std::abs(sum), 1.1e-16 * max_term);
        if (std::abs(term) <= floor_tol) {
            if (++small_run >= 2)
                return sum;
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("mittag_leffler: series did not meet tolerance within max_terms");
}

} // namespace fracwell
