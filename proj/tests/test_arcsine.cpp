#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "arcstein/arcsine.hpp"
#include "arcstein/errors.hpp"
#include "arcstein/quadrature.hpp"
#include "oracles.hpp"

using namespace arcstein;
using doctest::Approx;

TEST_SUITE("quadrature")
{
    TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1 exactly")
    {
        for (std::size_t n : {1U, 2U, 5U, 16U, 17U}) {
            GaussLegendreRule rule(n);
            double wsum = 0.0;
            for (double w : rule.weights())
                wsum += w;
            CHECK(wsum == Approx(2.0).epsilon(1e-14));
            const auto deg = static_cast<double>(2 * n - 1);
            // integral of x^deg + x^(deg-1) over [-1,1]
            double q = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = rule.nodes()[i];
                q += rule.weights()[i] * (std::pow(x, deg) + std::pow(x, deg - 1));
            }
            CHECK(q == Approx(2.0 / deg).epsilon(1e-13));
        }
        CHECK_THROWS_AS(GaussLegendreRule(0), ArgumentError);
    }

    TEST_CASE("breakpoints make kinked integrands exact")
    {
        CompositeQuadrature quad({16, 4});
        const auto kink = [](double x) { return std::abs(x - 0.3137); };
        const double exact = 0.5 * 0.3137 * 0.3137 + 0.5 * (1.0 - 0.3137) * (1.0 - 0.3137);
        const double cut[] = {0.3137};
        CHECK(quad.integrate(kink, 0.0, 1.0, cut) == Approx(exact).epsilon(1e-15));
        CHECK(quad.integrate(kink, 1.0, 0.0, cut) == Approx(-exact).epsilon(1e-15));
        CHECK(quad.integrate(kink, 0.5, 0.5) == 0.0);
    }
}

TEST_SUITE("arcsine")
{
    TEST_CASE("pdf")
    {
        CHECK(ArcsineMeasure::pdf(0.5) == Approx(2.0 / std::numbers::pi).epsilon(1e-15));
        CHECK(ArcsineMeasure::pdf(-0.5) == 0.0);
        CHECK(ArcsineMeasure::pdf(1.5) == 0.0);
        // 4 / (pi sqrt 3), evaluated at 40 digits
        CHECK(ArcsineMeasure::pdf(0.25) == Approx(0.73510519389572273268).epsilon(1e-15));
        CHECK(ArcsineMeasure::pdf(0.0) == ArcsineMeasure::kEndpointDensity);
        CHECK(ArcsineMeasure::pdf(1.0) == ArcsineMeasure::kEndpointDensity);

        // pdf is the derivative of cdf
        for (double x = 0.01; x < 1.0; x += 0.0137) {
            const double h = 1e-6;
            const double fd = (ArcsineMeasure::cdf(x + h) - ArcsineMeasure::cdf(x - h)) / (2 * h);
            CHECK(ArcsineMeasure::pdf(x) == Approx(fd).epsilon(1e-7));
        }
        // normalization of q after x = u^2 (integrand 2/(pi sqrt(1-u^2)) on [0, sqrt(1-d)])
        const double d = 1e-10;
        const double mass = oracle::adaptive_simpson(
            [](double u) { return 2.0 * u * ArcsineMeasure::pdf(u * u); }, 1e-100, std::sqrt(1.0 - d), 1e-12);
        CHECK(mass == Approx(1.0).epsilon(1e-4));
    }

    TEST_CASE("cdf")
    {
        CHECK(ArcsineMeasure::cdf(0.0) == 0.0);
        CHECK(ArcsineMeasure::cdf(-3.0) == 0.0);
        CHECK(ArcsineMeasure::cdf(7.0) == 1.0);
        CHECK(ArcsineMeasure::cdf(1.0) == 1.0);
        CHECK(ArcsineMeasure::cdf(0.5) == Approx(0.5).epsilon(1e-15));
        CHECK(ArcsineMeasure::cdf(0.25) == Approx(1.0 / 3.0).epsilon(1e-15));

        // quadrature of q over [0, 1/4] with x = u^2
        const double q = oracle::adaptive_simpson(
            [](double u) { return 2.0 / (std::numbers::pi * std::sqrt(1.0 - u * u)); }, 0.0, 0.5);
        CHECK(q == Approx(1.0 / 3.0).epsilon(1e-13));

        for (double x = 0.0; x <= 0.5; x += 0.01)
            CHECK(ArcsineMeasure::cdf(1.0 - x) == Approx(1.0 - ArcsineMeasure::cdf(x)).epsilon(1e-14));
        double prev = -1.0;
        for (int i = 1; i < 1000; ++i) {
            const double v = ArcsineMeasure::cdf(i / 1000.0);
            CHECK(v > prev);
            prev = v;
        }
    }

    TEST_CASE("cdf antiderivative")
    {
        CHECK(ArcsineMeasure::cdf_antiderivative(0.0) == 0.0);
        CHECK(ArcsineMeasure::cdf_antiderivative(0.5)
              == Approx(0.15915494309189533577).epsilon(1e-15));
        CHECK(ArcsineMeasure::cdf_antiderivative(1.0) == Approx(0.5).epsilon(1e-15));
        CHECK_THROWS_AS(ArcsineMeasure::cdf_antiderivative(-0.1), DomainError);
        CHECK_THROWS_AS(ArcsineMeasure::cdf_antiderivative(1.1), DomainError);

        // matches quadrature of cdf on a 10^3 grid; x = u^2 keeps the integrand smooth
        const auto integrand = [](double u) { return 2.0 * u * ArcsineMeasure::cdf(u * u); };
        double running = 0.0;
        double prev_u = 0.0;
        double worst = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double x = i / 1000.0;
            const double u = std::sqrt(x);
            running += oracle::adaptive_simpson(integrand, prev_u, u, 1e-15);
            prev_u = u;
            worst = std::max(worst, std::abs(running - ArcsineMeasure::cdf_antiderivative(x)));
        }
        CHECK(worst <= 1e-10);

        // G' = F by central differences
        for (double x = 0.05; x < 0.96; x += 0.05) {
            const double h = 1e-5;
            const double fd = (ArcsineMeasure::cdf_antiderivative(x + h)
                               - ArcsineMeasure::cdf_antiderivative(x - h)) / (2 * h);
            CHECK(fd == Approx(ArcsineMeasure::cdf(x)).epsilon(1e-8));
        }
    }

    TEST_CASE("quantile inverts cdf")
    {
        CHECK(ArcsineMeasure::quantile(0.5) == Approx(0.5).epsilon(1e-15));
        CHECK(ArcsineMeasure::quantile(1.0 / 3.0) == Approx(0.25).epsilon(1e-15));
        CHECK(ArcsineMeasure::quantile(0.0) == 0.0);
        CHECK_THROWS_AS(ArcsineMeasure::quantile(1.5), DomainError);
        CHECK_THROWS_AS(ArcsineMeasure::quantile(-1e-9), DomainError);

        double worst = 0.0;
        for (int i = 1; i < 10000; ++i) {
            const double x = i / 10000.0;
            worst = std::max(worst, std::abs(ArcsineMeasure::quantile(ArcsineMeasure::cdf(x)) - x));
        }
        CHECK(worst <= 1e-12);
    }

    TEST_CASE("expect")
    {
        const ArcsineMeasure nu;
        CHECK(std::abs(nu.expect(functions::constant(1.0)) - 1.0) <= 1e-13);
        CHECK(std::abs(nu.expect(functions::power(1)) - 0.5) <= 1e-13);
        CHECK(std::abs(nu.expect(functions::power(2)) - 0.375) <= 1e-13);
        // E|X - 1/2| = 1/pi
        CHECK(std::abs(nu.expect(functions::abs_deviation(0.5)) - std::numbers::inv_pi) <= 1e-13);

        TestFunction bad{"nan", [](double) { return std::nan(""); }, {}, {}, 0.0};
        CHECK_THROWS_AS(nu.expect(bad), NumericError);
    }

    TEST_CASE("expect is reflection invariant for random polynomials")
    {
        const ArcsineMeasure nu;
        std::mt19937_64 rng(20240601);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        std::uniform_int_distribution<int> degree(0, 8);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> c(static_cast<std::size_t>(degree(rng)) + 1);
            for (double& v : c)
                v = coef(rng);
            auto poly = [c](double x) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it)
                    acc = acc * x + *it;
                return acc;
            };
            TestFunction h{"poly", poly, {}, {}, 0.0};
            TestFunction r{"poly-reflected", [poly](double x) { return poly(1.0 - x); }, {}, {}, 0.0};
            CHECK(std::abs(nu.expect(h) - nu.expect(r)) <= 1e-11);
        }
    }
}
