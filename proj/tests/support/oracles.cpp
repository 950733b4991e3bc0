#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/math/special_functions/gamma.hpp>

namespace mescorr::testing {

double f_reference(std::size_t n, double b) {
    const double mean = b * b;
    return boost::math::gamma_p(static_cast<double>(n) + 1.0, mean) / mean;
}

double tmsv_ak_closed_form(int k, double r) {
    const double t = std::tanh(r);
    return std::pow(t, k) / std::sqrt(1.0 + t * t + t * t * t * t);
}

double gmes_bk_closed_form(int k, double b) {
    // 1 - G(m, x) / G(m) is P(m, x); using the regularized form avoids the
    // cancellation the literal expression suffers at small b.
    using boost::math::gamma_p;
    const double x = b * b;
    const double numerator = gamma_p(k + 1.0, x);
    const double denominator = gamma_p(1.0, x) + gamma_p(2.0, x) + gamma_p(3.0, x);
    return std::sqrt(numerator) / std::sqrt(denominator);
}

double gmes_mean_photon_closed_form(double b) {
    return b * b / 2.0;
}

std::complex<double> correlation_kronecker(const std::array<double, 3>& a, const Eigen::Matrix3cd& A,
                                           const Eigen::Matrix3cd& B) {
    Eigen::Matrix<std::complex<double>, 9, 9> ab;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) ab.block<3, 3>(3 * i, 3 * j) = A(i, j) * B;
    }
    Eigen::Matrix<std::complex<double>, 9, 1> psi = Eigen::Matrix<std::complex<double>, 9, 1>::Zero();
    for (int k = 0; k < 3; ++k) psi(3 * k + k) = a[k];
    return (psi.adjoint() * ab * psi)(0, 0);
}

Eigen::Matrix3cd haar_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::Matrix3cd z;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) z(i, j) = {normal(rng), normal(rng)};
    }
    Eigen::HouseholderQR<Eigen::Matrix3cd> qr(z);
    Eigen::Matrix3cd q = qr.householderQ();
    const Eigen::Matrix3cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 3; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
    return q;
}

std::array<double, 3> random_schmidt_qutrit(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::array<double, 3> a{};
    for (double& v : a) v = std::abs(normal(rng));
    const double norm = std::hypot(a[0], a[1], a[2]);
    for (double& v : a) v /= norm;
    std::sort(a.begin(), a.end(), std::greater<>{});
    return a;
}

std::array<double, 3> haar_schmidt_qutrit(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::Matrix3cd z;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) z(i, j) = {normal(rng), normal(rng)};
    }
    const Eigen::Vector3d s = Eigen::JacobiSVD<Eigen::Matrix3cd>(z).singularValues() / z.norm();
    return {s(0), s(1), s(2)};
}

std::complex<double> coherent_overlap(std::complex<double> alpha, std::complex<double> beta) {
    return std::exp(-(std::norm(alpha) + std::norm(beta)) / 2.0 + std::conj(alpha) * beta);
}

std::complex<double> coherent_amplitude(std::complex<double> alpha, std::size_t n) {
    const double a = std::abs(alpha);
    if (a == 0.0) return n == 0 ? 1.0 : 0.0;
    const double k = static_cast<double>(n);
    const double log_mag = -a * a / 2.0 + k * std::log(a) - 0.5 * std::lgamma(k + 1.0);
    return std::polar(std::exp(log_mag), k * std::arg(alpha));
}

} // namespace mescorr::testing
