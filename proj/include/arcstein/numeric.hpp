#pragma once

#include <cmath>
#include <span>

namespace arcstein {

/// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double value)
    {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            comp_ += (sum_ - t) + value;
        else
            comp_ += (value - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double value)
    {
        add(value);
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values)
{
    CompensatedSum acc;
    for (double v : values)
        acc.add(v);
    return acc.value();
}

} // namespace arcstein
