#include "arcstein/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"

namespace arcstein {

namespace {

struct Legendre {
    double value;
    double derivative;
};

Legendre legendre(std::size_t n, double x)
{
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
        const auto kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
    }
    const auto nn = static_cast<double>(n);
    return {p1, nn * (x * p1 - p0) / (x * x - 1.0)};
}

} // namespace

GaussLegendreRule::GaussLegendreRule(std::size_t order)
    : nodes_(order), weights_(order)
{
    if (order == 0)
        throw ArgumentError("Gauss-Legendre order must be positive");

    const auto n = static_cast<double>(order);
    // Roots are symmetric; Newton iteration on P_n from the Chebyshev guess.
    for (std::size_t i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(order, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double dp = legendre(order, x).derivative;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[order - 1 - i] = x;
        weights_[i] = w;
        weights_[order - 1 - i] = w;
    }
    if (order % 2 == 1)
        nodes_[order / 2] = 0.0;
}

CompositeQuadrature::CompositeQuadrature(QuadratureConfig config)
    : config_(config),
      rule_(config.order),
      panel_width_(0.0)
{
    if (config_.panels == 0)
        throw ArgumentError("quadrature panel count must be positive");
    panel_width_ = (std::numbers::pi / 2.0) / static_cast<double>(config_.panels);
}

double CompositeQuadrature::integrate_smooth(const std::function<double(double)>& f,
                                             double a, double b) const
{
    const double length = b - a;
    if (length == 0.0)
        return 0.0;
    const auto panels = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::abs(length) / panel_width_ - 1e-9)));
    const double h = length / static_cast<double>(panels);
    const auto nodes = rule_.nodes();
    const auto weights = rule_.weights();

    CompensatedSum total;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double mid = lo + 0.5 * h;
        double panel = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            panel += weights[i] * f(mid + 0.5 * h * nodes[i]);
        total.add(0.5 * h * panel);
    }
    return total.value();
}

double CompositeQuadrature::integrate(const std::function<double(double)>& f, double a, double b,
                                      std::span<const double> breakpoints) const
{
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw ArgumentError("integration limits must be finite");
    if (a == b)
        return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    std::vector<double> cuts{lo};
    for (double x : breakpoints) {
        if (x > lo && x < hi)
            cuts.push_back(x);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    CompensatedSum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total.add(integrate_smooth(f, cuts[i], cuts[i + 1]));
    return sign * total.value();
}

} // namespace arcstein
