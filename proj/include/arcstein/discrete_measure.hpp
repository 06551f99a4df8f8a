#pragma once

#include <vector>

namespace arcstein {

class ExactPmf;

/// Finitely supported probability measure on [0, 1].
struct DiscreteMeasure {
    std::vector<double> atoms;   ///< strictly increasing
    std::vector<double> weights; ///< nonnegative, summing to one

    static DiscreteMeasure point_mass(double x) { return {{x}, {1.0}}; }
};

/// L(W_m): atoms k/m with the float view of the exact pmf as weights.
DiscreteMeasure law_of_w(const ExactPmf& pmf);
/// Same from a floating-point pmf on {0..m}.
DiscreteMeasure law_of_w(const std::vector<double>& pmf);

/// Throws ArgumentError unless atoms are strictly increasing in [0,1] and
/// weights are nonnegative with sum one to within `tolerance`.
void validate(const DiscreteMeasure& measure, double tolerance = 1e-12);

} // namespace arcstein
