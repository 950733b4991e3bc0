#pragma once

#include <cstddef>
#include <vector>

namespace mescorr::poisson {

// Upper tail P(X > n) for X ~ Poisson(mean), i.e. 1 - Gamma(n+1, mean)/Gamma(n+1)
// complemented. Below the mode the tail is 1 - CDF; at and above the mode the
// tail is summed directly, so values deep in the tail keep relative precision.

/// P(X > n). Requires mean >= 0.
double upper_tail(std::size_t n, double mean);

/// P(X > n) for n = 0 .. count-1.
std::vector<double> upper_tails(std::size_t count, double mean);

/// Probability mass P(X = n).
double pmf(std::size_t n, double mean);

} // namespace mescorr::poisson
