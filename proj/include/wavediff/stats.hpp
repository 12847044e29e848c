#pragma once

#include <span>

namespace wavediff::stats {

double mean(std::span<const double> x);

/// Sample standard deviation (n-1 denominator). Requires size >= 2.
double sample_sd(std::span<const double> x);

/// Median of a copy of x. Requires non-empty.
double median(std::span<const double> x);

}  // namespace wavediff::stats
