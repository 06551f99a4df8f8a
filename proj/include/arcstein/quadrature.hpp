#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace arcstein {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(std::size_t order);

    std::size_t order() const { return nodes_.size(); }
    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct QuadratureConfig {
    /// Gauss-Legendre points per panel.
    std::size_t order = 16;
    /// Panels spanning a reference length of pi/2; shorter intervals get
    /// proportionally fewer (at least one).
    std::size_t panels = 32;
};

/// Composite Gauss-Legendre integration on [a, b], split at the supplied
/// breakpoints so that integrands with kinks stay piecewise smooth.
class CompositeQuadrature {
public:
    explicit CompositeQuadrature(QuadratureConfig config = {});

    const QuadratureConfig& config() const { return config_; }

    double integrate(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breakpoints = {}) const;

private:
    double integrate_smooth(const std::function<double(double)>& f, double a, double b) const;

    QuadratureConfig config_;
    GaussLegendreRule rule_;
    double panel_width_;
};

} // namespace arcstein
