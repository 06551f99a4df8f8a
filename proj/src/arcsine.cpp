#include "arcstein/arcsine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "arcstein/errors.hpp"

namespace arcstein {

namespace {

void require_unit_interval(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << what << ": argument " << x << " outside [0, 1]";
        throw DomainError(msg.str());
    }
}

} // namespace

ArcsineMeasure::ArcsineMeasure(QuadratureConfig config)
    : quadrature_(config)
{
}

double ArcsineMeasure::pdf(double x)
{
    if (x < 0.0 || x > 1.0)
        return 0.0;
    if (x == 0.0 || x == 1.0)
        return kEndpointDensity;
    return 1.0 / (std::numbers::pi * std::sqrt(x * (1.0 - x)));
}

double ArcsineMeasure::cdf(double x)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    return 2.0 * std::numbers::inv_pi * std::asin(std::sqrt(x));
}

double ArcsineMeasure::cdf_antiderivative(double x)
{
    require_unit_interval(x, "cdf_antiderivative");
    return std::numbers::inv_pi
        * ((2.0 * x - 1.0) * std::asin(std::sqrt(x)) + std::sqrt(x * (1.0 - x)));
}

double ArcsineMeasure::quantile(double c)
{
    require_unit_interval(c, "quantile");
    const double s = std::sin(0.5 * std::numbers::pi * c);
    return s * s;
}

double ArcsineMeasure::to_angle(double x)
{
    require_unit_interval(x, "to_angle");
    return std::asin(std::sqrt(x));
}

double ArcsineMeasure::angular_integral(const TestFunction& g, double a, double b) const
{
    std::vector<double> breaks;
    breaks.reserve(g.kinks.size());
    for (double k : g.kinks) {
        if (k > 0.0 && k < 1.0)
            breaks.push_back(to_angle(k));
    }
    const auto integrand = [&g](double theta) {
        const double s = std::sin(theta);
        const double v = g.value(s * s);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "non-finite sample of " << g.label << " at x=" << s * s;
            throw NumericError(msg.str());
        }
        return v;
    };
    return quadrature_.integrate(integrand, to_angle(a), to_angle(b), breaks);
}

double ArcsineMeasure::expect(const TestFunction& h) const
{
    return 2.0 * std::numbers::inv_pi * angular_integral(h, 0.0, 1.0);
}

} // namespace arcstein
