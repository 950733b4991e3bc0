#include "mescorr/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "mescorr/error.hpp"

namespace mescorr::poisson {
namespace {

void check_mean(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("poisson: mean must be finite and >= 0");
    }
}

long double log_pmf(std::size_t n, long double mean) {
    const auto k = static_cast<long double>(n);
    return -mean + k * std::log(mean) - std::lgamma(k + 1.0L);
}

// Mass function on [0, last], built by the ratio recurrence
// p(j+1) = p(j) * mean / (j+1) outward from the mode. The mode itself is
// evaluated in log space, so large means do not underflow exp(-mean).
std::vector<long double> mass_table(std::size_t last, long double mean) {
    std::vector<long double> p(last + 1, 0.0L);
    const auto mode = std::min(static_cast<std::size_t>(std::floor(mean)), last);
    p[mode] = std::exp(log_pmf(mode, mean));
    for (std::size_t j = mode; j < last; ++j) {
        p[j + 1] = p[j] * mean / static_cast<long double>(j + 1);
    }
    for (std::size_t j = mode; j > 0; --j) {
        p[j - 1] = p[j] * static_cast<long double>(j) / mean;
    }
    return p;
}

} // namespace

double pmf(std::size_t n, double mean) {
    check_mean(mean);
    if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
    return static_cast<double>(std::exp(log_pmf(n, mean)));
}

std::vector<double> upper_tails(std::size_t count, double mean) {
    check_mean(mean);
    std::vector<double> tails(count, 0.0);
    if (count == 0 || mean == 0.0) return tails;

    const long double lambda = mean;
    const auto mode = static_cast<std::size_t>(std::floor(lambda));
    // Past mode + 40 sigma (+60 for small means) the remaining mass is far
    // below the smallest normal long double.
    const auto spread = static_cast<std::size_t>(std::ceil(40.0L * std::sqrt(lambda))) + 60;
    const std::size_t last = std::max(count - 1, mode) + spread;
    const auto p = mass_table(last, lambda);

    // Lower side: 1 - CDF while n < mode, where CDF stays below ~1/2.
    long double cdf = 0.0L;
    const std::size_t lower_end = std::min(mode, count);
    for (std::size_t n = 0; n < lower_end; ++n) {
        cdf += p[n];
        tails[n] = static_cast<double>(1.0L - cdf);
    }
    if (lower_end == count) return tails;

    // Upper side: backward summation of the mass beyond n.
    long double tail = 0.0L;
    for (std::size_t j = last; j > count - 1; --j) {
        tail += p[j];
    }
    for (std::size_t n = count; n-- > lower_end;) {
        tails[n] = static_cast<double>(tail);
        tail += p[n];
    }
    return tails;
}

double upper_tail(std::size_t n, double mean) {
    return upper_tails(n + 1, mean).back();
}

} // namespace mescorr::poisson
