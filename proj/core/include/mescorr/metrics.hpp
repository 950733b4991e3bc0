#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "mescorr/states.hpp"

namespace mescorr {

/// Two-qutrit Schmidt state a0|00> + a1|11> + a2|22> with real a_k >= 0 and
/// unit norm (to 1e-12).
class QutritState {
public:
    explicit QutritState(std::array<double, 3> a);

    /// Rescales to unit norm. Throws DegeneracyError for the zero vector and
    /// DomainError for negative or non-finite entries.
    static QutritState normalized(std::array<double, 3> a);

    /// Uniform state (1, 1, 1) / sqrt(3).
    static QutritState uniform();

    const std::array<double, 3>& coeffs() const noexcept { return a_; }
    double operator[](std::size_t k) const noexcept { return a_[k]; }

    /// True when a0 >= a1 >= a2.
    bool schmidt_ordered() const noexcept;

    /// Same state with coefficients sorted nonincreasing (a local relabelling).
    QutritState sorted() const;

private:
    std::array<double, 3> a_;
};

/// |<psi|phi>| for two Schmidt-diagonal states in the same Fock x Fock basis:
/// sum_n c_n d_n over the common range. Clamped to [0, 1].
double fidelity(const SchmidtSpectrum& s, const SchmidtSpectrum& t);

/// Overlap of the N x N maximally entangled state with a state whose leading
/// Schmidt coefficients are given: (1/sqrt(N)) sum_{n < N} c_n. Missing
/// coefficients count as zero.
double mes_overlap(std::size_t N, std::span<const double> leading);

/// Renormalized first three Schmidt coefficients.
QutritState qutrit_truncate(const SchmidtSpectrum& s);

/// sqrt(18 + 9 sqrt(3)) / 2, the largest coefficient magnitude for which the
/// closed-form Bell maximum holds.
double bell_formula_coefficient_limit();

struct AnalyticBell {
    double value = 0.0;
    bool applicable = true;  ///< max_k |a_k| <= bell_formula_coefficient_limit()
};

/// 4|a0 a1| + (4/sqrt(3)) (|a0 a2| + |a1 a2|).
AnalyticBell bell_max_analytic(const QutritState& q);

/// Von Neumann entropy of either reduced state, in bits.
double entanglement_entropy(const SchmidtSpectrum& s);

} // namespace mescorr
