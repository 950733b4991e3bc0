#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mescorr/metrics.hpp"

namespace mescorr {

using Matrix3c = Eigen::Matrix3cd;

/// Measurement families over which the Bell oracle searches. Each observable
/// is U Omega U^dagger with Omega = diag(1, w, w^2), w = exp(2 pi i / 3), so the
/// spectrum is exactly the cube roots of unity.
///
///  - fourier_phase: U = exp(i (t1 L3 + t2 L8)) F, with F the 3x3 discrete
///    Fourier matrix and L3, L8 the diagonal Gell-Mann generators. Two
///    parameters per observable. The closed-form maximum is attained over this
///    family for Schmidt-ordered states.
///  - general_unitary: U = exp(i sum_g t_g L_g) over all eight Gell-Mann
///    generators. Eight parameters per observable; its maximum is the full
///    quantum value and can exceed the closed form.
enum class MeasurementFamily { fourier_phase, general_unitary };

/// Real parameters per observable in the given family.
std::size_t parameters_per_observable(MeasurementFamily family);

/// Omega = diag(1, w, w^2).
Matrix3c reference_observable();

/// The eight Gell-Mann matrices, L1..L8.
const std::array<Matrix3c, 8>& gell_mann_generators();

/// exp(iH) for Hermitian H, by eigendecomposition.
Matrix3c unitary_exp(const Matrix3c& hermitian);

/// Observable for one parameter block of the family.
Matrix3c observable_from_parameters(std::span<const double> params, MeasurementFamily family);

/// Two observables per party.
struct MeasurementSettings {
    Matrix3c A1, A2, B1, B2;

    /// Observables from 4 * parameters_per_observable(family) parameters,
    /// ordered A1, A2, B1, B2.
    static MeasurementSettings from_parameters(std::span<const double> params, MeasurementFamily family);

    /// All four set to Omega.
    static MeasurementSettings reference();
};

/// True if M is unitary to `tol` in max-norm.
bool is_unitary(const Matrix3c& m, double tol = 1e-10);

/// Q = <psi| A (x) B |psi> for psi = sum_k a_k |kk>. Throws DomainError if
/// either observable is not unitary to 1e-10.
std::complex<double> correlation(const QutritState& q, const Matrix3c& A, const Matrix3c& B);

/// Re[Q11 + Q12 - Q21 + Q22] + (1/sqrt 3) Im[Q11 - Q12 - Q21 + Q22].
double bell_value(const QutritState& q, const MeasurementSettings& m);

struct OracleOptions {
    int restarts = 32;
    std::uint64_t seed = 20180101;
    double step_tol = 1e-7;        ///< stop once the search step drops below this
    int max_iterations = 5'000;    ///< sweeps per restart
    double initial_step = 0.5;
    double shrink = 0.5;
    MeasurementFamily family = MeasurementFamily::fourier_phase;
};

struct BellResult {
    double value = 0.0;
    MeasurementSettings settings;
    std::vector<double> parameters;
    int restarts_used = 0;
    bool converged = false;  ///< the best restart reached step_tol
};

/// Derivative-free maximization of bell_value over the measurement family:
/// compass (coordinate) search with a shrinking step from `restarts` random
/// starts. Restart i draws its start from a generator seeded by (seed, i), so
/// the result is a deterministic function of the options and the best value
/// is nondecreasing in `restarts`.
BellResult maximize_bell(const QutritState& q, const OracleOptions& options = {});

} // namespace mescorr
