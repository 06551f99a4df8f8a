#include "arcstein/chung_feller.hpp"

#include <cmath>
#include <string>

#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"

namespace arcstein {

namespace {

void require_positive_m(std::int64_t m)
{
    if (m < 1)
        throw ArgumentError("m must be a positive integer, got " + std::to_string(m));
}

void require_in_support(std::int64_t m, std::int64_t k)
{
    if (k < 0 || k > m) {
        throw ArgumentError("k=" + std::to_string(k) + " outside support [0, "
                            + std::to_string(m) + "]");
    }
}

/// C(2j, j) for j = 0..n via C(2j, j) = (4j - 2)/j * C(2j - 2, j - 1).
std::vector<mpz_class> central_binomials(std::int64_t n)
{
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1;
    for (std::int64_t j = 1; j <= n; ++j) {
        mpz_class next = out[static_cast<std::size_t>(j - 1)] * (4 * j - 2);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
        out[static_cast<std::size_t>(j)] = std::move(next);
    }
    return out;
}

} // namespace

Rational return_probability(std::int64_t j)
{
    if (j < 0)
        throw ArgumentError("return_probability: j must be nonnegative");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * j), static_cast<unsigned long>(j));
    mpz_class denom = 1;
    denom <<= static_cast<mp_bitcnt_t>(2 * j);
    Rational u(binom, denom);
    u.canonicalize();
    return u;
}

ExactPmf::ExactPmf(std::int64_t m)
    : m_(m)
{
    require_positive_m(m);
    const auto binoms = central_binomials(m);
    mpz_class denom = 1;
    denom <<= static_cast<mp_bitcnt_t>(2 * m);

    probs_.reserve(static_cast<std::size_t>(m) + 1);
    float_view_.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t k = 0; k <= m; ++k) {
        Rational p(binoms[static_cast<std::size_t>(k)] * binoms[static_cast<std::size_t>(m - k)],
                   denom);
        p.canonicalize();
        float_view_.push_back(p.get_d());
        probs_.push_back(std::move(p));
    }
}

Rational ExactPmf::operator()(std::int64_t k) const
{
    if (k < 0 || k > m_)
        return Rational(0);
    return probs_[static_cast<std::size_t>(k)];
}

ExactPmf build_pmf(std::int64_t m)
{
    return ExactPmf(m);
}

Rational psi(std::int64_t m, std::int64_t k)
{
    require_positive_m(m);
    require_in_support(m, k);
    Rational value(mpz_class(2 * k - m + 1), mpz_class((k + 1) * (2 * (m - k) - 1)));
    value.canonicalize();
    return value;
}

Rational psi(const ExactPmf& pmf, std::int64_t k)
{
    return psi(pmf.m(), k);
}

Rational psi_from_differences(const ExactPmf& pmf, std::int64_t k)
{
    require_in_support(pmf.m(), k);
    const Rational pk = pmf(k);
    return Rational((pmf(k + 1) - pk) / pk);
}

Rational c_weight(std::int64_t m, std::int64_t k)
{
    require_positive_m(m);
    if (k < -1 || k > m) {
        throw ArgumentError("c_weight: k=" + std::to_string(k) + " outside [-1, "
                            + std::to_string(m) + "]");
    }
    return Rational(mpz_class((k + 1) * (2 * (m - k) - 1)));
}

std::vector<double> pmf_float(std::int64_t m, std::int64_t max_m)
{
    require_positive_m(m);
    if (m > max_m) {
        throw ResourceError("pmf_float: m=" + std::to_string(m) + " exceeds the configured limit "
                            + std::to_string(max_m));
    }

    // log u_{2m} = sum_{j=1}^{m} log((2j - 1) / (2j)).
    CompensatedSum log_u;
    for (std::int64_t j = 1; j <= m; ++j)
        log_u.add(std::log1p(-1.0 / (2.0 * static_cast<double>(j))));

    std::vector<double> p(static_cast<std::size_t>(m) + 1);
    p[0] = std::exp(log_u.value());
    for (std::int64_t k = 0; k < m / 2 + m % 2; ++k) {
        // 1 + psi(k) = (2k + 1)(m - k) / ((k + 1)(2(m - k) - 1)), integers exact in double.
        const auto num = static_cast<double>((2 * k + 1) * (m - k));
        const auto den = static_cast<double>((k + 1) * (2 * (m - k) - 1));
        p[static_cast<std::size_t>(k + 1)] = p[static_cast<std::size_t>(k)] * (num / den);
    }
    for (std::int64_t k = 0; k < m / 2 + 1; ++k)
        p[static_cast<std::size_t>(m - k)] = p[static_cast<std::size_t>(k)];
    return p;
}

} // namespace arcstein
