#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace arcstein {

using Rational = mpq_class;

/// u_{2j} = C(2j, j) 4^{-j}, the probability that the simple symmetric walk
/// is back at zero at time 2j.
///
/// Note: the 4^{-j} normalization is the one that makes
/// P(R_m = k) = u_{2k} u_{2m-2k} sum to one; a 2^{-j} variant seen in some
/// statements of the Chung-Feller theorem is a misprint.
Rational return_probability(std::int64_t j);

/// Exact law of R_m, the number of nonnegative step pairs of a walk of
/// length 2m: p(k) = u_{2k} u_{2m-2k} on k = 0..m.
class ExactPmf {
public:
    explicit ExactPmf(std::int64_t m);

    std::int64_t m() const { return m_; }
    std::size_t size() const { return probs_.size(); }

    /// p(k), with p(k) = 0 outside [0, m].
    Rational operator()(std::int64_t k) const;
    const std::vector<Rational>& probs() const { return probs_; }
    std::span<const double> float_view() const& { return float_view_; }
    std::span<const double> float_view() const&& = delete;

private:
    std::int64_t m_;
    std::vector<Rational> probs_;
    std::vector<double> float_view_;
};

ExactPmf build_pmf(std::int64_t m);

/// Discrete score psi(k) = (2k - m + 1) / ((k + 1)(2(m - k) - 1)).
Rational psi(std::int64_t m, std::int64_t k);
Rational psi(const ExactPmf& pmf, std::int64_t k);

/// psi computed directly as (p(k+1) - p(k)) / p(k) with p(m+1) = 0.
Rational psi_from_differences(const ExactPmf& pmf, std::int64_t k);

/// c(k) = (k + 1)(2(m - k) - 1), defined for -1 <= k <= m. c(-1) = 0.
Rational c_weight(std::int64_t m, std::int64_t k);

inline constexpr std::int64_t kDefaultFloatPmfLimit = 50'000'000;

/// Floating-point p(0..m) via the ratio recurrence p(k+1) = p(k)(1 + psi(k)),
/// anchored at p(0) = u_{2m} evaluated as a compensated sum of logarithms.
/// The upper half is mirrored from the lower half, so the result is exactly
/// symmetric. Throws ResourceError when m exceeds `max_m`.
std::vector<double> pmf_float(std::int64_t m, std::int64_t max_m = kDefaultFloatPmfLimit);

} // namespace arcstein
