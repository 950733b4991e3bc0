#include "mescorr/gmms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mescorr/error.hpp"

namespace mescorr {

double PhotonDistribution::total() const noexcept {
    long double acc = 0.0L;
    for (double p : probs) acc += p;
    return static_cast<double>(acc);
}

double PhotonDistribution::mean() const noexcept {
    long double acc = 0.0L;
    for (std::size_t n = 1; n < probs.size(); ++n) acc += static_cast<long double>(n) * probs[n];
    return static_cast<double>(acc);
}

GmmsDistribution gmms_distribution(double b, const TruncationPolicy& policy) {
    // Same truncation as the purified spectrum: c_n^2 = f(n, b).
    const auto spectrum = gmes_spectrum(b, policy);
    GmmsDistribution d;
    d.b = b;
    d.tail_bound = spectrum.tail_bound();
    d.probs = f_coefficients(b, spectrum.size());
    return d;
}

PhotonDistribution thermal_distribution(double nbar, const TruncationPolicy& policy) {
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw DomainError("thermal: mean photon number must be finite and >= 0");
    }
    policy.validate();
    PhotonDistribution d;
    if (nbar == 0.0) {
        d.probs = {1.0};
        return d;
    }
    const double q = nbar / (1.0 + nbar);
    const double estimate = std::ceil(std::log(policy.tol) / std::log(q)) - 1.0;
    if (estimate > static_cast<double>(policy.max_cutoff)) {
        throw TruncationError("thermal: cutoff exceeds cap for nbar = " + std::to_string(nbar));
    }
    double m = std::max(0.0, estimate);
    while (std::pow(q, m + 1.0) > policy.tol) m += 1.0;
    while (m > 0.0 && std::pow(q, m) <= policy.tol) m -= 1.0;

    const auto cutoff = static_cast<std::size_t>(m);
    d.probs.resize(cutoff + 1);
    const double ground = 1.0 / (1.0 + nbar);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        d.probs[n] = ground * std::pow(q, static_cast<double>(n));
    }
    d.tail_bound = std::pow(q, m + 1.0);
    return d;
}

SchmidtSpectrum purify(const PhotonDistribution& d) {
    std::vector<double> c(d.probs.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        const double p = d.probs[n];
        if (!std::isfinite(p) || p < 0.0) {
            throw DomainError("purify: probability " + std::to_string(n) + " is negative or not finite");
        }
        c[n] = std::sqrt(p);
    }
    return SchmidtSpectrum(std::move(c), d.tail_bound, SpectrumLabel::custom);
}

} // namespace mescorr
