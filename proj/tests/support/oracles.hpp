#pragma once

// Reference computations for the test suites. None of these call into the
// code path they are used to check.

#include <array>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace mescorr::testing {

/// f(n, b) from the regularized lower incomplete gamma P(n+1, b^2) (Boost).
double f_reference(std::size_t n, double b);

/// TMSV qutrit coefficient tanh(r)^k / sqrt(1 + tanh^2 r + tanh^4 r).
double tmsv_ak_closed_form(int k, double r);

/// GMES qutrit coefficient sqrt(1 - G(k+1, b^2)/G(k+1)) /
/// sqrt(3 - e^{-b^2} - G(2, b^2) - G(3, b^2)/2), with G the upper incomplete
/// gamma, evaluated through Boost's regularized P.
double gmes_bk_closed_form(int k, double b);

/// Mean photon number of the GMES, sum_n n f(n, b) = b^2 / 2 exactly.
double gmes_mean_photon_closed_form(double b);

/// <psi| A (x) B |psi> with psi = sum_k a_k |kk>, via the explicit 9x9
/// Kronecker product.
std::complex<double> correlation_kronecker(const std::array<double, 3>& a, const Eigen::Matrix3cd& A,
                                           const Eigen::Matrix3cd& B);

/// Haar-distributed 3x3 unitary (QR of a complex Ginibre matrix).
Eigen::Matrix3cd haar_unitary(std::mt19937_64& rng);

/// Nonnegative unit vector with |N(0,1)| entries, sorted nonincreasing.
std::array<double, 3> random_schmidt_qutrit(std::mt19937_64& rng);

/// Schmidt coefficients of a Haar-random two-qutrit pure state: normalized
/// singular values of a 3x3 complex Ginibre matrix, nonincreasing.
std::array<double, 3> haar_schmidt_qutrit(std::mt19937_64& rng);

/// <alpha|beta> = exp(-(|alpha|^2 + |beta|^2)/2 + conj(alpha) beta).
std::complex<double> coherent_overlap(std::complex<double> alpha, std::complex<double> beta);

/// alpha^n e^{-|alpha|^2/2} / sqrt(n!) evaluated in log space.
std::complex<double> coherent_amplitude(std::complex<double> alpha, std::size_t n);

} // namespace mescorr::testing
