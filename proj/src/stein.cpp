#include "arcstein/stein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"

namespace arcstein {

namespace {

void require_open_unit(double x, const char* what)
{
    if (!(x > 0.0 && x < 1.0)) {
        std::ostringstream msg;
        msg << what << ": x=" << x << " outside (0, 1)";
        throw DomainError(msg.str());
    }
}

double checked(double v, const char* what, double x)
{
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << ": non-finite value at x=" << x;
        throw NumericError(msg.str());
    }
    return v;
}

} // namespace

SteinSolution::SteinSolution(TestFunction h, QuadratureConfig config)
    : h_(std::move(h)),
      nu_(config),
      nu_h_(0.0)
{
    if (!h_.value)
        throw ArgumentError("solve_stein: test function has no value");
    nu_h_ = nu_.expect(h_);
    centered_ = h_;
    centered_.value = [h = h_.value, nu = nu_h_](double x) { return h(x) - nu; };
}

double SteinSolution::f_left(double x) const
{
    require_open_unit(x, "SteinSolution::f");
    const double integral = nu_.angular_integral(centered_, 0.0, x);
    return checked(2.0 * integral / std::sqrt(x * (1.0 - x)), "SteinSolution::f", x);
}

double SteinSolution::f_right(double x) const
{
    require_open_unit(x, "SteinSolution::f");
    const double integral = nu_.angular_integral(centered_, x, 1.0);
    return checked(-2.0 * integral / std::sqrt(x * (1.0 - x)), "SteinSolution::f", x);
}

double SteinSolution::f(double x) const
{
    return x <= 0.5 ? f_left(x) : f_right(x);
}

double SteinSolution::fprime(double x) const
{
    const double fx = f(x);
    return checked((h_.value(x) - nu_h_ - (0.5 - x) * fx) / (x * (1.0 - x)),
                   "SteinSolution::fprime", x);
}

double SteinSolution::residual(double x, double fprime_value) const
{
    return x * (1.0 - x) * fprime_value + (0.5 - x) * f(x) - (h_.value(x) - nu_h_);
}

SteinSolution solve_stein(TestFunction h, QuadratureConfig config)
{
    return SteinSolution(std::move(h), config);
}

double check_continuous_characterization(const DiscreteMeasure& dist,
                                         std::span<const TestFunction> family)
{
    if (family.empty())
        throw ArgumentError("check_continuous_characterization: empty test family");
    validate(dist);
    double worst = 0.0;
    for (const auto& f : family) {
        if (!f.value || !f.derivative)
            throw ArgumentError("characterization test function " + f.label + " lacks a derivative");
        CompensatedSum gap;
        for (std::size_t i = 0; i < dist.atoms.size(); ++i) {
            const double x = dist.atoms[i];
            const double w = dist.weights[i];
            gap.add(w * x * (1.0 - x) * f.derivative(x));
            gap.add(-w * (x - 0.5) * f.value(x));
        }
        worst = std::max(worst, std::abs(gap.value()));
    }
    return worst;
}

BoundsAudit bounds_audit(const SteinSolution& solution, BoundKind kind,
                         const BoundsAuditOptions& options)
{
    if (options.grid_size < 2)
        throw ArgumentError("bounds_audit: grid size must be at least 2");
    const auto& h = solution.h();
    const double nu_h = solution.nu_h();
    const auto n = static_cast<double>(options.grid_size);

    BoundsAudit audit;
    audit.label = h.label;
    audit.kind = kind;

    double sup_h_centered = 0.0;
    auto visit_h = [&](double x) { sup_h_centered = std::max(sup_h_centered, std::abs(h(x) - nu_h)); };
    visit_h(0.0);
    visit_h(1.0);
    for (double k : h.kinks)
        visit_h(k);

    for (std::size_t i = 1; i < options.grid_size; ++i) {
        const double x = static_cast<double>(i) / n;
        const double fx = solution.f(x);
        const double fpx = (h(x) - nu_h - (0.5 - x) * fx) / (x * (1.0 - x));
        if (!std::isfinite(fx) || !std::isfinite(fpx)) {
            std::ostringstream msg;
            msg << "bounds_audit: non-finite Stein solution for " << h.label << " at x=" << x;
            throw NumericError(msg.str());
        }
        audit.sup_f = std::max(audit.sup_f, std::abs(fx));
        audit.sup_fprime = std::max(audit.sup_fprime, std::abs(fpx));
        visit_h(x);
    }

    if (options.h_norm) {
        audit.h_norm = *options.h_norm;
    } else if (kind == BoundKind::bounded) {
        audit.h_norm = sup_h_centered;
    } else {
        if (std::isnan(h.lipschitz))
            throw ArgumentError("bounds_audit: Lipschitz constant of " + h.label + " unknown");
        audit.h_norm = h.lipschitz;
    }
    audit.bound = 2.0 * audit.h_norm;
    audit.holds = audit.sup_f <= audit.bound + options.tolerance;
    if (kind == BoundKind::bounded) {
        audit.median_bound = std::numbers::pi * audit.h_norm;
        audit.median_bound_holds = audit.sup_f <= *audit.median_bound + options.tolerance;
    }

    if (!std::isnan(h.lipschitz) && h.lipschitz > 0.0)
        audit.fprime_over_lipschitz = audit.sup_fprime / h.lipschitz;
    double sup_h = 0.0;
    for (std::size_t i = 0; i <= options.grid_size; ++i)
        sup_h = std::max(sup_h, std::abs(h(static_cast<double>(i) / n)));
    if (sup_h > 0.0)
        audit.fprime_over_sup = audit.sup_fprime / sup_h;
    return audit;
}

DiscreteSteinOperator::DiscreteSteinOperator(std::int64_t m, std::vector<Rational> difference_coeff,
                                             std::vector<Rational> value_coeff)
    : m_(m),
      difference_coeff_(std::move(difference_coeff)),
      value_coeff_(std::move(value_coeff))
{
    const auto expected = static_cast<std::size_t>(m) + 1;
    if (m < 1 || difference_coeff_.size() != expected || value_coeff_.size() != expected)
        throw ArgumentError("DiscreteSteinOperator: coefficient vectors must cover 0..m");
}

const Rational& DiscreteSteinOperator::difference_coeff(std::int64_t k) const
{
    return difference_coeff_.at(static_cast<std::size_t>(k));
}

const Rational& DiscreteSteinOperator::value_coeff(std::int64_t k) const
{
    return value_coeff_.at(static_cast<std::size_t>(k));
}

Rational DiscreteSteinOperator::apply(const DiscreteFunction& f, std::int64_t k) const
{
    if (f.size() < static_cast<std::size_t>(m_) + 2)
        throw ArgumentError("discrete function must be defined on -1..m");
    if (k < 0 || k > m_)
        throw ArgumentError("operator argument k=" + std::to_string(k) + " outside [0, m]");
    const auto i = static_cast<std::size_t>(k);
    const Rational& fk = f[i + 1];
    const Rational& fprev = f[i];
    return Rational(difference_coeff_[i] * (fk - fprev) + value_coeff_[i] * fk);
}

Rational DiscreteSteinOperator::expectation(const ExactPmf& pmf, const DiscreteFunction& f) const
{
    if (pmf.m() != m_)
        throw ArgumentError("pmf and operator disagree on m");
    return expectation(std::span<const Rational>(pmf.probs()), f);
}

Rational DiscreteSteinOperator::expectation(std::span<const Rational> probs,
                                            const DiscreteFunction& f) const
{
    if (probs.size() != static_cast<std::size_t>(m_) + 1)
        throw ArgumentError("pmf must cover 0..m");
    if (f.empty() || f[0] != 0)
        throw ArgumentError("discrete Stein functions must satisfy f(-1) = 0");
    Rational total(0);
    for (std::int64_t k = 0; k <= m_; ++k)
        total += probs[static_cast<std::size_t>(k)] * apply(f, k);
    return total;
}

DiscreteSteinOperator build_discrete_operator(std::int64_t m)
{
    if (m < 1)
        throw ArgumentError("build_discrete_operator: m must be positive");
    std::vector<Rational> diff;
    std::vector<Rational> value;
    diff.reserve(static_cast<std::size_t>(m) + 1);
    value.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t k = 0; k <= m; ++k) {
        Rational a(mpz_class(k * (2 * (m - k) + 1)), mpz_class(2));
        Rational b(mpz_class(m - 2 * k), mpz_class(2));
        a.canonicalize();
        b.canonicalize();
        diff.push_back(std::move(a));
        value.push_back(std::move(b));
    }
    return {m, std::move(diff), std::move(value)};
}

DiscreteSteinOperator build_general_operator(const ExactPmf& pmf,
                                             const std::function<Rational(std::int64_t)>& c)
{
    const std::int64_t m = pmf.m();
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(m) + 2);
    for (std::int64_t k = -1; k <= m; ++k) {
        Rational ck = c(k);
        if (k >= 0 && ck == 0)
            throw ArgumentError("build_general_operator: c vanishes at k=" + std::to_string(k));
        weights.push_back(std::move(ck));
    }
    auto weight = [&weights](std::int64_t k) -> const Rational& {
        return weights[static_cast<std::size_t>(k + 1)];
    };

    std::vector<Rational> diff;
    std::vector<Rational> value;
    for (std::int64_t k = 0; k <= m; ++k) {
        diff.push_back(weight(k - 1));
        value.emplace_back(weight(k) * psi(pmf, k) + (weight(k) - weight(k - 1)));
    }
    return {m, std::move(diff), std::move(value)};
}

DiscreteFunction random_discrete_function(std::int64_t m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(-1000, 1000);
    std::uniform_int_distribution<long> denominator(1, 100);
    DiscreteFunction f;
    f.reserve(static_cast<std::size_t>(m) + 2);
    f.emplace_back(0);
    for (std::int64_t k = 0; k <= m; ++k) {
        const long num = numerator(rng);
        const long den = denominator(rng);
        Rational v{mpz_class(num), mpz_class(den)};
        v.canonicalize();
        f.push_back(std::move(v));
    }
    return f;
}

} // namespace arcstein
