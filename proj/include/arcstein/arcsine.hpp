#pragma once

#include <limits>

#include "arcstein/quadrature.hpp"
#include "arcstein/test_function.hpp"

namespace arcstein {

/// The arcsine law Beta(1/2, 1/2) on [0, 1].
///
/// Integrals against the law go through the substitution x = sin^2(theta),
/// which maps it to the uniform law on (0, pi/2) with density 2/pi and
/// removes the endpoint singularity of the density.
class ArcsineMeasure {
public:
    /// Value returned by pdf() at x = 0 and x = 1, where the density is unbounded.
    static constexpr double kEndpointDensity = std::numeric_limits<double>::infinity();

    explicit ArcsineMeasure(QuadratureConfig config = {});

    /// q(x) = 1 / (pi sqrt(x(1-x))) on (0,1), 0 outside [0,1].
    static double pdf(double x);
    /// F(x) = (2/pi) asin(sqrt(x)), clamped to [0,1].
    static double cdf(double x);
    /// G(x) = integral of F over [0, x]. Throws DomainError outside [0,1].
    static double cdf_antiderivative(double x);
    /// sin^2(pi c / 2). Throws DomainError outside [0,1].
    static double quantile(double c);

    /// theta(x) = asin(sqrt(x)), the substitution variable for x in [0,1].
    static double to_angle(double x);

    /// nu(h), the expectation of h under the arcsine law.
    double expect(const TestFunction& h) const;

    /// Integral of g(sin^2 theta) d theta over [theta(a), theta(b)]; kinks of g
    /// (given in x-space) are honoured as quadrature breakpoints.
    double angular_integral(const TestFunction& g, double a, double b) const;

    const CompositeQuadrature& quadrature() const { return quadrature_; }

private:
    CompositeQuadrature quadrature_;
};

} // namespace arcstein
