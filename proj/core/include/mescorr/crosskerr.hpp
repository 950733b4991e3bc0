#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace mescorr {

using complex = std::complex<double>;

/// Single-mode Fock amplitudes over n = 0..cutoff.
class FockVector {
public:
    FockVector(std::vector<complex> amps, double truncation_loss = 0.0);

    const std::vector<complex>& amps() const noexcept { return amps_; }
    std::size_t cutoff() const noexcept { return amps_.size() - 1; }
    double truncation_loss() const noexcept { return loss_; }
    double norm2() const noexcept;

    /// <this|other>, antilinear in this.
    complex inner(const FockVector& other) const;

private:
    std::vector<complex> amps_;
    double loss_;
};

/// Two-mode Fock amplitudes over (n1, n2) in [0, cutoff]^2, row-major in n1.
class TwoModeFock {
public:
    TwoModeFock(std::size_t cutoff, std::vector<complex> amps, double truncation_loss = 0.0);

    /// |u>|v>; both vectors must share a cutoff.
    static TwoModeFock product(const FockVector& u, const FockVector& v);

    std::size_t cutoff() const noexcept { return cutoff_; }
    std::size_t dim() const noexcept { return cutoff_ + 1; }
    complex operator()(std::size_t n1, std::size_t n2) const { return amps_[n1 * dim() + n2]; }
    complex& operator()(std::size_t n1, std::size_t n2) { return amps_[n1 * dim() + n2]; }
    const std::vector<complex>& amps() const noexcept { return amps_; }
    double truncation_loss() const noexcept { return loss_; }
    double norm2() const noexcept;

    complex inner(const TwoModeFock& other) const;

private:
    std::size_t cutoff_;
    std::vector<complex> amps_;
    double loss_;
};

/// ceil(|alpha|^2 + 8|alpha| + 20).
std::size_t default_kerr_cutoff(complex alpha);

/// Coherent state e^{-|alpha|^2/2} sum_n alpha^n / sqrt(n!) |n>, by the ratio
/// recurrence. Throws TruncationError when |alpha|^2 > cutoff / 2 or when the
/// discarded mass exceeds max_loss.
FockVector coherent_fock(complex alpha, std::size_t cutoff, double max_loss = 1e-10);

struct PseudoNumberComponent {
    FockVector state;  ///< unnormalized projection onto n = k (mod d)
    double norm;
};

/// Projection of v onto the Fock indices congruent to k modulo d.
PseudoNumberComponent pseudo_number_component(const FockVector& v, int d, int k);

/// amps(n1, n2) *= exp(2 pi i n1 n2 / d).
TwoModeFock cross_kerr_apply(const TwoModeFock& s, int d);

/// Gram matrix G_kl = <alpha w^k | alpha w^l> of the pseudo-phase states,
/// w = exp(2 pi i / d), from direct sums over the truncated Fock vectors.
Eigen::MatrixXcd pseudo_phase_gram(complex alpha, int d, std::size_t cutoff);

struct KerrReport {
    double fidelity = 0.0;
    std::size_t cutoff = 0;
    std::vector<double> component_norms2;  ///< ||P_k alpha||^2 for k = 0..d-1
    std::vector<double> gram_offdiag;      ///< |G_{0,dk}| for dk = 1..d-1
    double min_gram_eigenvalue = 0.0;
};

/// Fidelity of cross_kerr_apply(|alpha>|alpha>, d) with the ideal
/// (1/sqrt d) sum_k |k_d>|~k_d>, where |k_d> are the normalized pseudo-number
/// components of |alpha> and |~k_d> the Loewdin-orthonormalized pseudo-phase
/// states. Throws DegeneracyError if a component vanishes or the Gram matrix
/// is numerically singular.
KerrReport kerr_mes_fidelity(complex alpha, int d, std::optional<std::size_t> cutoff = std::nullopt);

} // namespace mescorr
