#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace arcstein {

/// A real function on [0,1] together with what the integrators need to know
/// about it: where it fails to be smooth and, when known, its derivative and
/// Lipschitz constant.
struct TestFunction {
    std::string label;
    std::function<double(double)> value;
    /// Empty when no closed-form derivative is available.
    std::function<double(double)> derivative;
    /// Points in (0,1) where value or derivative is non-smooth.
    std::vector<double> kinks;
    /// sup |h'| on [0,1]; NaN when unknown.
    double lipschitz = std::numeric_limits<double>::quiet_NaN();

    double operator()(double x) const { return value(x); }
};

namespace functions {

TestFunction constant(double c);
/// h(x) = x^n.
TestFunction power(unsigned n);
/// h(x) = sin(freq * pi * x).
TestFunction sine(double freq);
/// h(x) = exp(x).
TestFunction exponential();
/// x, x^2, x^3, sin(pi x), cos(pi x), exp(x).
std::vector<TestFunction> smooth_family();
/// h(x) = |x - t|.
TestFunction abs_deviation(double t);
/// Linear interpolation through (xs[i], ys[i]); xs strictly increasing with
/// xs.front() == 0 and xs.back() == 1.
TestFunction piecewise_linear(std::vector<double> xs, std::vector<double> ys);
/// Random piecewise-linear function with up to `max_knots` interior knots and
/// node values uniform in [-1, 1]. Deterministic in `seed`.
TestFunction random_piecewise_linear(std::uint64_t seed, int max_knots = 5);

} // namespace functions

} // namespace arcstein
