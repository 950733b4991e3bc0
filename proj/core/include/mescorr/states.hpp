#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mescorr {

enum class SpectrumLabel { tmsv, gmes, mes, custom };

std::string_view to_string(SpectrumLabel label);

/// Adaptive truncation of infinite spectra: the cutoff M is the first index
/// whose remaining squared-norm mass is <= tol.
struct TruncationPolicy {
    double tol = 1e-12;
    std::size_t max_cutoff = 200'000;

    /// Throws ConfigError unless 0 < tol < 1 and max_cutoff > 0.
    void validate() const;
};

/// Schmidt coefficients c_0..c_M of a two-mode pure state sum_n c_n |n>|n>,
/// together with a bound on the squared-norm mass beyond c_M.
///
/// Invariants, checked on construction: every c_n is finite and >= 0,
/// tail_bound >= 0 and 1 - tail_bound <= sum c_n^2 <= 1 (up to a 1e-12 rounding
/// allowance).
class SchmidtSpectrum {
public:
    SchmidtSpectrum(std::vector<double> coeffs, double tail_bound, SpectrumLabel label);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t cutoff() const noexcept { return coeffs_.size() - 1; }
    double operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : 0.0; }
    double tail_bound() const noexcept { return tail_bound_; }
    SpectrumLabel label() const noexcept { return label_; }

    /// sum_n c_n^2, accumulated in extended precision.
    double squared_norm() const noexcept;

private:
    std::vector<double> coeffs_;
    double tail_bound_;
    SpectrumLabel label_;
};

/// Physical parameters of the state families.
struct StateParams {
    double r = 0.0;      ///< squeezing parameter
    double b = 0.0;      ///< phase-space boundary radius
    std::int64_t N = 1;  ///< discrete dimension
    double nbar = 0.0;   ///< mean photon number per mode

    /// Throws DomainError if any field is negative or N < 1.
    void validate() const;
};

/// Two-mode squeezed vacuum: c_n = tanh(r)^n / cosh(r). The cutoff is the first
/// M >= 2 with the exact geometric tail tanh(r)^{2(M+1)} <= tol, which is
/// stored as tail_bound. r = 0 gives the single coefficient 1.
SchmidtSpectrum tmsv_spectrum(double r, const TruncationPolicy& policy = {});

/// Purification of the bounded maximally mixed state: c_n = sqrt(f(n, b)),
/// cut at the first M >= 2 with tail_bound = sum_{n > M} f(n, b) <= tol.
/// Rejects b <= 0.
SchmidtSpectrum gmes_spectrum(double b, const TruncationPolicy& policy = {});

/// Uniform N x N maximally entangled state, N copies of 1/sqrt(N).
SchmidtSpectrum mes_spectrum(std::int64_t N);

/// f(n, b) = (1 - sum_{k<=n} b^{2k} e^{-b^2} / k!) / b^2, the photon-number
/// distribution of the bounded maximally mixed state. Lies in [0, 1/b^2].
double f_coefficient(std::int64_t n, double b);

/// f(n, b) for n = 0 .. count-1.
std::vector<double> f_coefficients(double b, std::size_t count);

// First `count` Schmidt coefficients, with no truncation bookkeeping. Used
// where only a prefix matters (overlaps with an N-dimensional state) and the
// full spectrum would exceed the cutoff cap.
std::vector<double> tmsv_leading(double r, std::size_t count);
std::vector<double> gmes_leading(double b, std::size_t count);

/// Per-mode mean photon number sum_n n c_n^2.
double mean_photon(const SchmidtSpectrum& s);

/// arcsinh(sqrt(nbar)), the squeezing with mean photon number nbar.
double solve_r_for_nbar(double nbar);

struct BoundarySolverOptions {
    double tol = 1e-10;     ///< |mean_photon - nbar| target
    double b_max = 1'000.0; ///< give up bracketing past this radius
    int max_iterations = 200;
    TruncationPolicy truncation{};
};

/// Boundary radius b whose GMES has mean photon number nbar, by bracketing and
/// bisection on the increasing map b -> mean_photon(gmes_spectrum(b)).
double solve_b_for_nbar(double nbar, const BoundarySolverOptions& options = {});

} // namespace mescorr
