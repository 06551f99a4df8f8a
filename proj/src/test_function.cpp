#include "arcstein/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "arcstein/errors.hpp"

namespace arcstein::functions {

TestFunction constant(double c)
{
    std::ostringstream label;
    label << "const(" << c << ")";
    return {label.str(), [c](double) { return c; }, [](double) { return 0.0; }, {}, 0.0};
}

TestFunction power(unsigned n)
{
    TestFunction h;
    h.label = "x^" + std::to_string(n);
    h.value = [n](double x) { return std::pow(x, static_cast<double>(n)); };
    h.derivative = [n](double x) {
        return n == 0 ? 0.0 : static_cast<double>(n) * std::pow(x, static_cast<double>(n - 1));
    };
    h.lipschitz = static_cast<double>(n);
    return h;
}

TestFunction sine(double freq)
{
    TestFunction h;
    std::ostringstream label;
    label << "sin(" << freq << " pi x)";
    h.label = label.str();
    const double w = freq * std::numbers::pi;
    h.value = [w](double x) { return std::sin(w * x); };
    h.derivative = [w](double x) { return w * std::cos(w * x); };
    h.lipschitz = std::abs(w);
    return h;
}

TestFunction exponential()
{
    TestFunction h;
    h.label = "exp(x)";
    h.value = [](double x) { return std::exp(x); };
    h.derivative = [](double x) { return std::exp(x); };
    h.lipschitz = std::numbers::e;
    return h;
}

std::vector<TestFunction> smooth_family()
{
    TestFunction cosine;
    cosine.label = "cos(pi x)";
    cosine.value = [](double x) { return std::cos(std::numbers::pi * x); };
    cosine.derivative = [](double x) { return -std::numbers::pi * std::sin(std::numbers::pi * x); };
    cosine.lipschitz = std::numbers::pi;
    return {power(1), power(2), power(3), sine(1.0), std::move(cosine), exponential()};
}

TestFunction abs_deviation(double t)
{
    TestFunction h;
    std::ostringstream label;
    label << "|x-" << t << "|";
    h.label = label.str();
    h.value = [t](double x) { return std::abs(x - t); };
    h.derivative = [t](double x) { return x < t ? -1.0 : 1.0; };
    if (t > 0.0 && t < 1.0)
        h.kinks = {t};
    h.lipschitz = 1.0;
    return h;
}

TestFunction piecewise_linear(std::vector<double> xs, std::vector<double> ys)
{
    if (xs.size() < 2 || xs.size() != ys.size())
        throw ArgumentError("piecewise_linear needs at least two nodes and matching sizes");
    if (xs.front() != 0.0 || xs.back() != 1.0)
        throw ArgumentError("piecewise_linear nodes must span [0, 1]");
    if (!std::is_sorted(xs.begin(), xs.end(), std::less_equal<>{}))
        throw ArgumentError("piecewise_linear nodes must be strictly increasing");

    std::vector<double> slopes(xs.size() - 1);
    double lip = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        slopes[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        lip = std::max(lip, std::abs(slopes[i]));
    }

    auto segment = [xs](double x) {
        const auto it = std::upper_bound(xs.begin() + 1, xs.end() - 1, x);
        return static_cast<std::size_t>(it - xs.begin()) - 1;
    };

    TestFunction h;
    std::ostringstream label;
    label << "pwl[" << xs.size() - 2 << " knots]";
    h.label = label.str();
    h.value = [xs, ys, slopes, segment](double x) {
        const std::size_t i = segment(x);
        return ys[i] + slopes[i] * (x - xs[i]);
    };
    h.derivative = [slopes, segment](double x) { return slopes[segment(x)]; };
    h.kinks.assign(xs.begin() + 1, xs.end() - 1);
    h.lipschitz = lip;
    return h;
}

TestFunction random_piecewise_linear(std::uint64_t seed, int max_knots)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> knot_count(1, std::max(1, max_knots));
    std::uniform_real_distribution<double> position(0.02, 0.98);
    std::uniform_real_distribution<double> level(-1.0, 1.0);

    const int knots = knot_count(rng);
    std::vector<double> xs{0.0, 1.0};
    while (static_cast<int>(xs.size()) < knots + 2) {
        const double x = position(rng);
        // Keep knots separated so no segment is degenerate.
        if (std::none_of(xs.begin(), xs.end(), [x](double y) { return std::abs(x - y) < 0.02; }))
            xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> ys(xs.size());
    for (double& y : ys)
        y = level(rng);

    auto h = piecewise_linear(std::move(xs), std::move(ys));
    h.label = "random-pwl(seed=" + std::to_string(seed) + ")";
    return h;
}

} // namespace arcstein::functions
