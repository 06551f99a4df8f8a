#include "arcstein/discrete_measure.hpp"

#include <cmath>
#include <string>

#include "arcstein/chung_feller.hpp"
#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"

namespace arcstein {

DiscreteMeasure law_of_w(const std::vector<double>& pmf)
{
    if (pmf.size() < 2)
        throw ArgumentError("law_of_w: pmf must cover {0..m} with m >= 1");
    const auto m = static_cast<double>(pmf.size() - 1);
    DiscreteMeasure out;
    out.atoms.resize(pmf.size());
    for (std::size_t k = 0; k < pmf.size(); ++k)
        out.atoms[k] = static_cast<double>(k) / m;
    out.weights = pmf;
    return out;
}

DiscreteMeasure law_of_w(const ExactPmf& pmf)
{
    const auto view = pmf.float_view();
    return law_of_w(std::vector<double>(view.begin(), view.end()));
}

void validate(const DiscreteMeasure& measure, double tolerance)
{
    if (measure.atoms.empty() || measure.atoms.size() != measure.weights.size())
        throw ArgumentError("discrete measure needs matching, nonempty atoms and weights");
    CompensatedSum total;
    for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
        const double x = measure.atoms[i];
        if (!(x >= 0.0 && x <= 1.0))
            throw ArgumentError("atom " + std::to_string(x) + " outside [0, 1]");
        if (i > 0 && !(x > measure.atoms[i - 1]))
            throw ArgumentError("atoms must be strictly increasing");
        if (!(measure.weights[i] >= 0.0))
            throw ArgumentError("weights must be nonnegative");
        total.add(measure.weights[i]);
    }
    if (std::abs(total.value() - 1.0) > tolerance)
        throw ArgumentError("weights sum to " + std::to_string(total.value()) + ", not 1");
}

} // namespace arcstein
