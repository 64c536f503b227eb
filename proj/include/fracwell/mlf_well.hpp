#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "riesz.hpp"
#include "specfun.hpp"

namespace fracwell {

// Which fractional-derivative convention the closed-form candidate solves.
enum class MlfDefinition { riemann, caputo };

// Closed-form eigenfunction candidate of the fractional well in terms of
// Mittag-Leffler functions, one per definition x parity:
//   riemann even: x^{a/2 - 1} E_{a, a/2}(-x^a)
//   riemann odd:  x^{a - 1}   E_{a, a}  (-x^a)
//   caputo even:              E_{a, 1}  (-x^a)
//   caputo odd:   x^{a/2}     E_{a, 1 + a/2}(-x^a)
// All four reduce to cos x / sin x at alpha = 2.
struct MlfEigenfunction {
    MlfDefinition definition;
    TrigMode::Parity parity;
    FractionalOrder order;
};

// Evaluate at x >= 0. The argument window of mittag_leffler limits x to
// min(25^{1/alpha}, 30); beyond it OutOfValidatedRange propagates. Forms with
// a negative power prefactor diverge at x = 0 (the Riemann even form for
// alpha < 2, the Riemann odd form for alpha < 1) and raise SingularOrigin.
inline double mlf_eigenfunction_eval(const MlfEigenfunction& fn, double x,
                                     const SeriesControl& ctl = {}) {
    if (x < 0.0)
        throw DomainError("mlf_eigenfunction_eval: requires x >= 0, got " +
                          std::to_string(x));
    const double a = fn.order.alpha;
    double power = 0.0;
    double beta = 1.0;
    if (fn.definition == MlfDefinition::riemann) {
        if (fn.parity == TrigMode::even) {
            power = a / 2.0 - 1.0;
            beta = a / 2.0;
        } else {
            power = a - 1.0;
            beta = a;
        }
    } else {
        if (fn.parity == TrigMode::even) {
            power = 0.0;
            beta = 1.0;
        } else {
            power = a / 2.0;
            beta = 1.0 + a / 2.0;
        }
    }
    if (x == 0.0 && power < 0.0)
        throw SingularOrigin("mlf_eigenfunction_eval: form diverges at x = 0 for "
                             "alpha = " + std::to_string(a));
    const double z = -std::pow(x, a);
    const double ml = mittag_leffler(a, beta, z, ctl);
    return power == 0.0 ? ml : std::pow(x, power) * ml;
}

// First `count` positive zeros: scan x = 0.05, 0.10, ... across the validated
// window, bisect each bracketed sign change to 1e-10. Raises WindowExhausted
// if the window ends first (at small alpha the Caputo even form is completely
// monotone and has no zeros at all).
inline std::vector<double> mlf_first_zeros(const MlfEigenfunction& fn, int count,
                                           const SeriesControl& ctl = {}) {
    if (count < 1)
        throw DomainError("mlf_first_zeros: count must be >= 1");
    const double a = fn.order.alpha;
    const double window = std::min(std::pow(25.0, 1.0 / a), 30.0);
    const double step = 0.05;
    std::vector<double> zeros;
    double x_prev = step;
    double f_prev = mlf_eigenfunction_eval(fn, x_prev, ctl);
    for (int i = 2; double(i) * step <= window && int(zeros.size()) < count; ++i) {
        const double x = double(i) * step;
        const double fx = mlf_eigenfunction_eval(fn, x, ctl);
        if (fx == 0.0) {
            zeros.push_back(x);
        } else if (f_prev * fx < 0.0) {
            double lo = x_prev, hi = x;
            double flo = f_prev;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double fm = mlf_eigenfunction_eval(fn, mid, ctl);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        x_prev = x;
        f_prev = fx;
    }
    if (int(zeros.size()) < count)
        throw WindowExhausted("mlf_first_zeros: found " + std::to_string(zeros.size()) +
                              " of " + std::to_string(count) +
                              " zeros inside the validated window (x <= " +
                              std::to_string(window) + ")");
    return zeros;
}

// Energy of an eigenfunction whose first zero is placed at the wall:
// E = (z / q)^alpha.
inline double mlf_zero_energy(double zero, const FractionalOrder& ord,
                              const WellGeometry& geom) {
    if (!(zero > 0.0))
        throw DomainError("mlf_zero_energy: zero must be positive");
    return std::pow(zero / geom.q, ord.alpha);
}

} // namespace fracwell
