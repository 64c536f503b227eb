#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "detail/dd.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "riesz.hpp"
#include "specfun.hpp"

namespace fracwell {

// Coefficients a_0..a_N of a parity power series sum_m a_m x^{2m + par}.
struct ParitySeries {
    TrigMode::Parity parity = TrigMode::even;
    std::vector<double> coeffs;
};

// Taylor companion matrix of one parity block: entries(n, m) is the n-th
// series coefficient of -(D_c applied to x^{2m + par}).
struct OperatorMatrix {
    TrigMode::Parity parity = TrigMode::even;
    int n = 0;
    Eigen::MatrixXd entries;
};

struct EigenPair {
    double energy = 0.0;
    ParitySeries series;
    double boundary_residual = 0.0;
    double oracle_residual = 0.0;
    bool convergence_suspect = false;
};

// Evaluate a parity series at x, |x| <= q.
inline double eval_series(const ParitySeries& s, const WellGeometry& geom, double x) {
    if (!(std::abs(x) <= geom.q))
        throw DomainError("eval_series: requires |x| <= q, got x = " + std::to_string(x));
    const double u = x * x;
    double acc = 0.0;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it)
        acc = acc * u + *it;
    return s.parity == TrigMode::odd ? acc * x : acc;
}

// Free-space energy of the k-th mode: (k pi / 2q)^alpha.
inline double free_energy(int k, const FractionalOrder& ord, const WellGeometry& geom) {
    if (k < 1)
        throw DomainError("free_energy: k must be >= 1");
    return std::pow(double(k) * std::numbers::pi / (2.0 * geom.q), ord.alpha);
}

// Classical well energy (k pi / 2q)^2, the alpha = 2 endpoint.
inline double classical_energy(int k, const WellGeometry& geom) {
    if (k < 1)
        throw DomainError("classical_energy: k must be >= 1");
    const double w = double(k) * std::numbers::pi / (2.0 * geom.q);
    return w * w;
}

// True when approx_energy(k, ...) uses the documented even-k extension
// rather than the printed odd-k closed form.
inline bool approx_energy_is_extension(int k) { return k % 2 == 0; }

// One-term approximate energy E~_k. Odd k: the closed form obtained by
// evaluating the confined operator on the cos mode at x = 0,
//   E~ = q^{-a}/2 Gamma(a) sin(pi a/2)/pi [k^2 pi^2/(2-a) 1F2(1 - a/2; 3/2,
//        2 - a/2; -k^2 pi^2 / 16) - 4 cos(k pi / 2)].
// Even k (documented extension): the operator on the sin mode at the
// pseudo-normalization anchor x = q/k. At alpha = 2 both reduce to the
// classical energy, which is returned directly.
inline double approx_energy(int k, const FractionalOrder& ord, const WellGeometry& geom,
                            const SeriesControl& ctl = {}) {
    if (k < 1)
        throw DomainError("approx_energy: k must be >= 1");
    if (ord.classical())
        return classical_energy(k, geom);
    const double a = ord.alpha;
    if (k % 2 == 0) {
        TrigMode mode(TrigMode::odd, k);
        return -confined_apply_trig(mode, ord, geom, geom.q / double(k), ctl);
    }
    const double kpi = double(k) * std::numbers::pi;
    const double h = hyp1f2(1.0 - a / 2.0, 1.5, 2.0 - a / 2.0, -kpi * kpi / 16.0, ctl);
    // cos(k pi / 2) vanishes identically for odd k; kept for the record.
    const double cos_half = 0.0;
    const double bracket = kpi * kpi / (2.0 - a) * h - 4.0 * cos_half;
    return 0.5 * std::pow(geom.q, -a) * std::tgamma(a) *
           std::sin(std::numbers::pi * a / 2.0) / std::numbers::pi * bracket;
}

namespace detail {

// Taylor columns of the pref-less confined operator on monomials at q = 1:
// cols[p][n] is the n-th coefficient of the operator applied to x^p. Built by
// the cancellation-free derivative recurrence
//   G_p' = p G_{p-1} - [(1-x)^{-1-a} - (-1)^p (1+x)^{-1-a}],
//   G_0  = -[(1-x)^{-a} + (1+x)^{-a}] / a,
// in double-double arithmetic: the chain amplifies seed rounding by about
// binomial(P, P/2), which costs all of plain double by P ~ 50.
inline std::vector<std::vector<dd>> monomial_columns(double alpha, int P) {
    const dd da(alpha);
    // kernel coefficients: (1-x)^{-1-a} = sum e_n x^n
    std::vector<dd> e(std::size_t(P) + 1);
    e[0] = dd(1.0);
    for (int n = 1; n <= P; ++n)
        e[n] = e[n - 1] * two_sum(double(n), alpha) / dd(double(n));
    std::vector<std::vector<dd>> cols;
    cols.reserve(std::size_t(P) + 1);
    for (int p = 0; p <= P; ++p) {
        std::vector<dd> a(std::size_t(P) + 1);
        if (p == 0) {
            dd b(1.0); // even coefficients of (1-x)^{-a} + (1+x)^{-a}, halved
            a[0] = dd(-2.0) / da;
            for (int n = 1; n <= P; ++n) {
                b = b * two_sum(double(n - 1), alpha) / dd(double(n));
                if (n % 2 == 0)
                    a[n] = dd(-2.0) * b / da;
            }
        } else {
            const std::vector<dd>& prev = cols.back();
            if (p % 2 == 0)
                a[0] = dd(2.0) / two_sum(double(p), -alpha);
            for (int n = 0; n < P; ++n) {
                dd corr = ((p + n) % 2 == 1) ? dd(2.0) * e[n] : dd(0.0);
                a[n + 1] = (dd(double(p)) * prev[n] - corr) / dd(double(n + 1));
                if (std::abs(a[n + 1].hi) > 1e250)
                    throw SeriesOverflow("monomial_columns: coefficient overflow at p = " +
                                         std::to_string(p));
            }
        }
        cols.push_back(std::move(a));
    }
    return cols;
}

} // namespace detail

// Companion matrix of one parity block, (n+1) x (n+1). Assembled at q = 1 and
// rescaled entry-wise by the exact law entry(q) = q^{2(m-n) - a} entry(1).
// At alpha = 2 the classical second-derivative pattern is returned.
inline OperatorMatrix build_operator_matrix(const FractionalOrder& ord,
                                            const WellGeometry& geom, int n,
                                            TrigMode::Parity parity) {
    if (n < 0)
        throw DomainError("build_operator_matrix: n must be >= 0");
    const int par = parity == TrigMode::odd ? 1 : 0;
    OperatorMatrix out;
    out.parity = parity;
    out.n = n;
    out.entries = Eigen::MatrixXd::Zero(n + 1, n + 1);
    if (ord.classical()) {
        for (int m = 1; m <= n; ++m) {
            const double p = double(2 * m + par);
            out.entries(m - 1, m) = -p * (p - 1.0);
        }
        return out;
    }
    const double pref = riesz_prefactor(ord);
    const auto cols = detail::monomial_columns(ord.alpha, 2 * n + par);
    for (int m = 0; m <= n; ++m) {
        const auto& col = cols[std::size_t(2 * m + par)];
        for (int r = 0; r <= n; ++r) {
            const double scale = std::pow(geom.q, 2.0 * double(m - r) - ord.alpha);
            const double entry = -pref * col[std::size_t(2 * r + par)].value() * scale;
            if (!std::isfinite(entry))
                throw SeriesOverflow("build_operator_matrix: entry overflow; N too "
                                     "large for double at q = " + std::to_string(geom.q));
            out.entries(r, m) = entry;
        }
    }
    return out;
}

namespace detail {

struct RawLevel {
    double lambda = 0.0; // eigenvalue of the q = 1 problem
    int par = 0;
    Eigen::VectorXd vec;
};

// Eigen-solve one parity block of the q = 1 problem. The boundary-row variant
// raises the basis degree by one (unknowns a_0..a_{N+1}, all N+1 matching rows
// kept) and eliminates a_{N+1} through Psi(1) = 0; the plain variant is the
// bare companion matrix, which carries no wall information.
inline void solve_parity_block(double alpha, int N, int par, bool boundary_row,
                               std::vector<RawLevel>& out) {
    const double pref = std::tgamma(1.0 + alpha) *
                        std::sin(std::numbers::pi * alpha / 2.0) / std::numbers::pi;
    Eigen::MatrixXd R(N + 1, N + 1);
    if (boundary_row) {
        const auto cols = monomial_columns(alpha, 2 * (N + 1) + par);
        const auto& top = cols[std::size_t(2 * (N + 1) + par)];
        for (int m = 0; m <= N; ++m) {
            const auto& col = cols[std::size_t(2 * m + par)];
            for (int r = 0; r <= N; ++r)
                R(r, m) = -pref * (col[std::size_t(2 * r + par)] -
                                   top[std::size_t(2 * r + par)]).value();
        }
    } else {
        const auto cols = monomial_columns(alpha, 2 * N + par);
        for (int m = 0; m <= N; ++m) {
            const auto& col = cols[std::size_t(2 * m + par)];
            for (int r = 0; r <= N; ++r)
                R(r, m) = -pref * col[std::size_t(2 * r + par)].value();
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(R);
    if (es.info() != Eigen::Success)
        throw NoConvergence("solve_well: eigensolver did not converge");
    for (int i = 0; i <= N; ++i) {
        const auto lam = es.eigenvalues()(i);
        if (std::abs(lam.imag()) <= 1e-8 * std::max(1.0, std::abs(lam.real())) &&
            lam.real() > 0.0) {
            RawLevel lvl;
            lvl.lambda = lam.real();
            lvl.par = par;
            lvl.vec = es.eigenvectors().col(i).real();
            out.push_back(std::move(lvl));
        }
    }
}

inline std::vector<RawLevel> raw_levels(double alpha, int N, bool boundary_row) {
    std::vector<RawLevel> all;
    solve_parity_block(alpha, N, 0, boundary_row, all);
    solve_parity_block(alpha, N, 1, boundary_row, all);
    std::sort(all.begin(), all.end(),
              [](const RawLevel& a, const RawLevel& b) { return a.lambda < b.lambda; });
    return all;
}

} // namespace detail

// Solve the confined spectral problem by Taylor matching on parity blocks of
// size N+1, returning the lowest `levels` states ordered by energy. The trust
// bound is levels <= N/3. Each returned series is normalized to max |Psi| = 1
// on [-q, q] with its lowest-order coefficient positive. The boundary-row
// variant is the default (see build notes); use_boundary_row = false selects
// the bare companion matrix. convergence_suspect flags levels that move by
// more than 5% between N and N-4.
inline std::vector<EigenPair> solve_well(const FractionalOrder& ord,
                                         const WellGeometry& geom, int n, int levels,
                                         bool use_boundary_row = true,
                                         const QuadratureControl& qctl = {}) {
    if (n < 8)
        throw DomainError("solve_well: N must be >= 8, got " + std::to_string(n));
    if (levels < 1 || 3 * levels > n)
        throw DomainError("solve_well: levels must satisfy 1 <= levels <= N/3");
    std::vector<EigenPair> out;
    const double q = geom.q;
    const std::size_t norm_samples = 801;

    if (ord.classical()) {
        // Analytic endpoint: truncated Taylor series of the trig modes.
        for (int k = 1; k <= levels; ++k) {
            const int par = (k % 2 == 0) ? 1 : 0;
            const double w = double(k) * std::numbers::pi / (2.0 * q);
            EigenPair pair;
            pair.energy = w * w;
            pair.series.parity = par ? TrigMode::odd : TrigMode::even;
            pair.series.coeffs.resize(std::size_t(n) + 1);
            double c = par ? w : 1.0;
            for (int m = 0; m <= n; ++m) {
                pair.series.coeffs[std::size_t(m)] = c;
                const double pw = double(2 * m + par);
                c *= -w * w / ((pw + 1.0) * (pw + 2.0));
            }
            pair.boundary_residual = std::abs(eval_series(pair.series, geom, q));
            // residual of the classical operator on the truncated series
            ParitySeries d2;
            d2.parity = pair.series.parity;
            d2.coeffs.resize(std::size_t(n));
            for (int m = 0; m + 1 <= n; ++m) {
                const double pw = double(2 * (m + 1) + par);
                d2.coeffs[std::size_t(m)] = pair.series.coeffs[std::size_t(m + 1)] * pw * (pw - 1.0);
            }
            double worst = 0.0;
            for (int i = 0; i < 17; ++i) {
                const double x = (-0.8 + 0.1 * double(i)) * q;
                const double r = std::abs(-eval_series(d2, geom, x) -
                                          pair.energy * eval_series(pair.series, geom, x)) /
                                 pair.energy;
                worst = std::max(worst, r);
            }
            pair.oracle_residual = worst;
            out.push_back(std::move(pair));
        }
        return out;
    }

    const auto raw = detail::raw_levels(ord.alpha, n, use_boundary_row);
    if (int(raw.size()) < levels)
        throw NoConvergence("solve_well: fewer admissible eigenvalues than levels");
    // reference solve at N-4 for the convergence flag
    const auto ref = detail::raw_levels(ord.alpha, n - 4, use_boundary_row);

    for (int lev = 0; lev < levels; ++lev) {
        const auto& r = raw[std::size_t(lev)];
        EigenPair pair;
        pair.energy = std::pow(q, -ord.alpha) * r.lambda;
        pair.series.parity = r.par ? TrigMode::odd : TrigMode::even;
        pair.series.coeffs.resize(std::size_t(n) + 1);
        for (int m = 0; m <= n; ++m)
            pair.series.coeffs[std::size_t(m)] =
                r.vec(m) * std::pow(q, -double(2 * m + r.par));
        // normalize to max |Psi| = 1 on the (parity-symmetric) half [0, q]
        double amax = 0.0;
        for (std::size_t i = 0; i < norm_samples; ++i) {
            const double x = q * double(i) / double(norm_samples - 1);
            amax = std::max(amax, std::abs(eval_series(pair.series, geom, x)));
        }
        double cmax = 0.0;
        for (double c : pair.series.coeffs)
            cmax = std::max(cmax, std::abs(c));
        double flip = 1.0;
        for (double c : pair.series.coeffs) {
            if (std::abs(c) > 1e-13 * cmax) {
                flip = c < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (double& c : pair.series.coeffs)
            c *= flip / amax;
        pair.boundary_residual = std::abs(eval_series(pair.series, geom, q));
        if (std::size_t(lev) < ref.size()) {
            const double drift = std::abs(r.lambda - ref[std::size_t(lev)].lambda) / r.lambda;
            pair.convergence_suspect = drift > 0.05;
        } else {
            pair.convergence_suspect = true; // nothing to compare against
        }
        // PDE residual against the quadrature oracle on a 17-point grid
        auto psi = [&](double x) { return eval_series(pair.series, geom, x); };
        double worst = 0.0;
        for (int i = 0; i < 17; ++i) {
            const double x = (-0.8 + 0.1 * double(i)) * q;
            const double lhs = quadrature_oracle(psi, ord, geom, x, qctl);
            worst = std::max(worst, std::abs(lhs + pair.energy * psi(x)) / pair.energy);
        }
        pair.oracle_residual = worst;
        out.push_back(std::move(pair));
    }
    return out;
}

// Pseudo-normalized operator action g_k(x) = (D_c f_k)(x) / (D_c f_k)(anchor):
// anchor x = 0 for cos modes, x = q/k for sin modes (where the mode is 1).
// At alpha = 2 this is exactly the trig mode itself.
inline std::vector<double> pseudo_normalized_g(const TrigMode& mode,
                                               const FractionalOrder& ord,
                                               const WellGeometry& geom,
                                               const std::vector<double>& xs,
                                               const SeriesControl& ctl = {}) {
    const double anchor = mode.parity == TrigMode::even ? 0.0 : geom.q / double(mode.k);
    const double denom = confined_apply_trig(mode, ord, geom, anchor, ctl);
    if (std::abs(denom) < 1e-12)
        throw AnchorDegenerate("pseudo_normalized_g: anchor value " +
                               std::to_string(denom) + " too small");
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs)
        out.push_back(confined_apply_trig(mode, ord, geom, x, ctl) / denom);
    return out;
}

} // namespace fracwell
