#include "arcstein/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"

namespace arcstein {

namespace {

constexpr std::int64_t kOracleBlock = 4096;

/// One interval [lo, hi] on which the step CDF equals `level`.
struct Piece {
    double lo;
    double hi;
    double level;
};

std::size_t piece_count(const StepCdf& cdf)
{
    return cdf.atoms.size() + 1;
}

/// Piece i covers [atoms[i-1], atoms[i]) with atoms[-1] := 0, atoms[n] := 1.
Piece piece(const StepCdf& cdf, std::size_t i)
{
    const std::size_t n = cdf.atoms.size();
    const double lo = i == 0 ? 0.0 : cdf.atoms[i - 1];
    const double hi = i == n ? 1.0 : cdf.atoms[i];
    const double level = i == 0 ? 0.0 : cdf.cum[i - 1];
    return {lo, hi, level};
}

double crossing(const Piece& p)
{
    const double x = ArcsineMeasure::quantile(std::clamp(p.level, 0.0, 1.0));
    return std::clamp(x, p.lo, p.hi);
}

double piece_integral(const Piece& p)
{
    if (!(p.hi > p.lo))
        return 0.0;
    const double c = p.level;
    const double x = crossing(p);
    const double g_lo = ArcsineMeasure::cdf_antiderivative(p.lo);
    const double g_x = ArcsineMeasure::cdf_antiderivative(x);
    const double g_hi = ArcsineMeasure::cdf_antiderivative(p.hi);
    // F_nu <= c on [lo, x], F_nu >= c on [x, hi].
    const double below = c * (x - p.lo) - (g_x - g_lo);
    const double above = (g_hi - g_x) - c * (p.hi - x);
    return below + above;
}

void validate(const StepCdf& cdf)
{
    if (cdf.atoms.empty() || cdf.atoms.size() != cdf.cum.size())
        throw ArgumentError("step CDF needs matching, nonempty atoms and cumulative values");
    for (std::size_t i = 0; i < cdf.atoms.size(); ++i) {
        if (!(cdf.atoms[i] >= 0.0 && cdf.atoms[i] <= 1.0))
            throw ArgumentError("step CDF atom outside [0, 1]");
        if (i > 0 && !(cdf.atoms[i] > cdf.atoms[i - 1]))
            throw ArgumentError("step CDF atoms must be strictly increasing");
        if (i > 0 && cdf.cum[i] < cdf.cum[i - 1])
            throw ArgumentError("step CDF must be nondecreasing");
    }
    if (std::abs(cdf.cum.back() - 1.0) > 1e-12)
        throw ArgumentError("step CDF must end at 1, got " + std::to_string(cdf.cum.back()));
}

double oracle_block(const StepCdf& cdf, std::int64_t block, std::int64_t n_nodes)
{
    const double h = 1.0 / static_cast<double>(n_nodes);
    const std::int64_t begin = block * kOracleBlock;
    const std::int64_t end = std::min(n_nodes, begin + kOracleBlock);
    CompensatedSum acc;
    for (std::int64_t i = begin; i < end; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * h;
        acc.add(std::abs(cdf(x) - ArcsineMeasure::cdf(x)));
    }
    return acc.value() * h;
}

void require_nodes(std::int64_t n_nodes)
{
    if (n_nodes < 100)
        throw ArgumentError("w1_quadrature_oracle: at least 100 nodes required");
}

void require_lipschitz(const TestFunction& h)
{
    constexpr int grid = 10000;
    double prev = h(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        const double cur = h(x);
        if (std::abs(cur - prev) * grid > 1.0 + 1e-9) {
            throw ArgumentError("test function " + h.label + " is not 1-Lipschitz near x="
                                + std::to_string(x));
        }
        prev = cur;
    }
}

} // namespace

StepCdf StepCdf::from_pmf(const ExactPmf& pmf)
{
    StepCdf out;
    const auto m = static_cast<double>(pmf.m());
    out.atoms.reserve(pmf.size());
    out.cum.reserve(pmf.size());
    Rational running(0);
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        running += pmf.probs()[k];
        out.atoms.push_back(static_cast<double>(k) / m);
        out.cum.push_back(running.get_d());
    }
    return out;
}

StepCdf StepCdf::from_measure(const DiscreteMeasure& measure)
{
    validate(measure);
    StepCdf out;
    out.atoms = measure.atoms;
    out.cum.reserve(measure.weights.size());
    CompensatedSum running;
    for (double w : measure.weights) {
        running.add(w);
        out.cum.push_back(std::min(1.0, running.value()));
    }
    return out;
}

double StepCdf::operator()(double x) const
{
    const auto it = std::upper_bound(atoms.begin(), atoms.end(), x);
    if (it == atoms.begin())
        return 0.0;
    return cum[static_cast<std::size_t>(it - atoms.begin()) - 1];
}

double w1_to_arcsine(const StepCdf& cdf)
{
    validate(cdf);
    const auto n = static_cast<std::int64_t>(piece_count(cdf));
    std::vector<double> pieces(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        pieces[static_cast<std::size_t>(i)] = piece_integral(piece(cdf, static_cast<std::size_t>(i)));
    return compensated_sum(pieces);
}

double w1_discrete_vs_arcsine(const ExactPmf& pmf)
{
    return w1_to_arcsine(StepCdf::from_pmf(pmf));
}

double w1_discrete_vs_arcsine(const DiscreteMeasure& measure)
{
    return w1_to_arcsine(StepCdf::from_measure(measure));
}

double w1_quadrature_oracle(const StepCdf& cdf, std::int64_t n_nodes)
{
    require_nodes(n_nodes);
    validate(cdf);
    const std::int64_t blocks = (n_nodes + kOracleBlock - 1) / kOracleBlock;
    std::vector<double> sums(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b)
        sums[static_cast<std::size_t>(b)] = oracle_block(cdf, b, n_nodes);
    return compensated_sum(sums);
}

double w1_quadrature_oracle(const ExactPmf& pmf, std::int64_t n_nodes)
{
    return w1_quadrature_oracle(StepCdf::from_pmf(pmf), n_nodes);
}

namespace serial {

double w1_to_arcsine(const StepCdf& cdf)
{
    validate(cdf);
    CompensatedSum acc;
    for (std::size_t i = 0; i < piece_count(cdf); ++i)
        acc.add(piece_integral(piece(cdf, i)));
    return acc.value();
}

double w1_quadrature_oracle(const StepCdf& cdf, std::int64_t n_nodes)
{
    require_nodes(n_nodes);
    validate(cdf);
    const std::int64_t blocks = (n_nodes + kOracleBlock - 1) / kOracleBlock;
    CompensatedSum acc;
    for (std::int64_t b = 0; b < blocks; ++b)
        acc.add(oracle_block(cdf, b, n_nodes));
    return acc.value();
}

} // namespace serial

double lipschitz_lower_bound(const DiscreteMeasure& measure, std::span<const TestFunction> family,
                             const ArcsineMeasure& nu)
{
    if (family.empty())
        throw ArgumentError("lipschitz_lower_bound: empty test family");
    validate(measure);
    double best = 0.0;
    for (const auto& h : family) {
        require_lipschitz(h);
        CompensatedSum e;
        for (std::size_t i = 0; i < measure.atoms.size(); ++i)
            e.add(measure.weights[i] * h(measure.atoms[i]));
        best = std::max(best, std::abs(e.value() - nu.expect(h)));
    }
    return best;
}

double lipschitz_lower_bound(const ExactPmf& pmf, std::span<const TestFunction> family,
                             const ArcsineMeasure& nu)
{
    return lipschitz_lower_bound(law_of_w(pmf), family, nu);
}

TestFunction optimal_dual_potential(const StepCdf& cdf)
{
    validate(cdf);
    std::vector<double> xs{0.0};
    std::vector<double> ys{0.0};
    auto extend = [&](double x, double slope) {
        if (x <= xs.back())
            return;
        ys.push_back(ys.back() + slope * (x - xs.back()));
        xs.push_back(x);
    };
    for (std::size_t i = 0; i < piece_count(cdf); ++i) {
        const Piece p = piece(cdf, i);
        if (!(p.hi > p.lo))
            continue;
        const double x = crossing(p);
        extend(x, -1.0);
        extend(p.hi, 1.0);
    }
    auto h = functions::piecewise_linear(std::move(xs), std::move(ys));
    h.label = "dual-potential";
    return h;
}

} // namespace arcstein
