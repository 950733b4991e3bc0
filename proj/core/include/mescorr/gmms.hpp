#pragma once

#include <vector>

#include "mescorr/states.hpp"

namespace mescorr {

/// Diagonal photon-number distribution p_n with a bound on the mass past the
/// last stored entry.
struct PhotonDistribution {
    std::vector<double> probs;
    double tail_bound = 0.0;

    double total() const noexcept;
    double mean() const noexcept;
};

/// Bounded Gaussian maximally mixed state: the normalized mixture of all
/// coherent states within radius b. Only the Fock diagonal p_n = f(n, b) is
/// stored; the state is diagonal in the number basis.
struct GmmsDistribution : PhotonDistribution {
    double b = 0.0;
};

GmmsDistribution gmms_distribution(double b, const TruncationPolicy& policy = {});

/// Thermal state p_n = nbar^n / (1 + nbar)^{n+1}, truncated at tail <= tol.
PhotonDistribution thermal_distribution(double nbar, const TruncationPolicy& policy = {});

/// Purification sum_n sqrt(p_n) |n>|n>. Throws DomainError on negative or
/// non-finite entries. The tail bound carries over.
SchmidtSpectrum purify(const PhotonDistribution& d);

} // namespace mescorr
