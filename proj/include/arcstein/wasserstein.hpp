#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arcstein/arcsine.hpp"
#include "arcstein/chung_feller.hpp"
#include "arcstein/discrete_measure.hpp"
#include "arcstein/test_function.hpp"

namespace arcstein {

/// Right-continuous step CDF of a finitely supported law on [0, 1].
struct StepCdf {
    std::vector<double> atoms; ///< strictly increasing, in [0, 1]
    std::vector<double> cum;   ///< cum[i] = P(X <= atoms[i])

    /// Cumulative sums computed in exact arithmetic, then rounded.
    static StepCdf from_pmf(const ExactPmf& pmf);
    /// Cumulative sums accumulated with compensation.
    static StepCdf from_measure(const DiscreteMeasure& measure);

    double operator()(double x) const;
};

/// Integral of |F(x) - F_nu(x)| over [0, 1]: the Wasserstein-1 distance to the
/// arcsine law. Each interval between atoms contributes in closed form; the
/// crossing with F_nu is at quantile(level). Pieces are evaluated in parallel
/// and reduced serially with compensation, so the result is thread-count
/// independent.
double w1_to_arcsine(const StepCdf& cdf);
double w1_discrete_vs_arcsine(const ExactPmf& pmf);
double w1_discrete_vs_arcsine(const DiscreteMeasure& measure);

/// Composite-midpoint integration of |F - F_nu| with n_nodes nodes (>= 100).
double w1_quadrature_oracle(const StepCdf& cdf, std::int64_t n_nodes);
double w1_quadrature_oracle(const ExactPmf& pmf, std::int64_t n_nodes);

namespace serial {
double w1_to_arcsine(const StepCdf& cdf);
double w1_quadrature_oracle(const StepCdf& cdf, std::int64_t n_nodes);
} // namespace serial

/// max over the family of |E_pmf[h] - nu(h)|. Every member is checked to be
/// 1-Lipschitz on a uniform grid; violations raise ArgumentError.
double lipschitz_lower_bound(const ExactPmf& pmf, std::span<const TestFunction> family,
                             const ArcsineMeasure& nu = ArcsineMeasure{});
double lipschitz_lower_bound(const DiscreteMeasure& measure, std::span<const TestFunction> family,
                             const ArcsineMeasure& nu = ArcsineMeasure{});

/// The 1-Lipschitz h with h' = sign(F_nu - F), h(0) = 0. It attains the
/// supremum: E[h(X)] - nu(h) equals the Wasserstein-1 distance.
TestFunction optimal_dual_potential(const StepCdf& cdf);

} // namespace arcstein
