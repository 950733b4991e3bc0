#include "mescorr/crosskerr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mescorr/error.hpp"

namespace mescorr {
namespace {

constexpr double kGramSingular = 1e-12;

void check_modulus(int d) {
    if (d < 1) throw DomainError("modulus d must be >= 1, got " + std::to_string(d));
}

// exp(2 pi i m / d) with the exponent reduced mod d first, so large photon
// products do not lose the phase to rounding.
complex root_of_unity(std::size_t m, int d) {
    const auto r = static_cast<double>(m % static_cast<std::size_t>(d));
    return std::polar(1.0, 2.0 * std::numbers::pi * r / d);
}

} // namespace

FockVector::FockVector(std::vector<complex> amps, double truncation_loss)
    : amps_(std::move(amps)), loss_(truncation_loss) {
    if (amps_.empty()) throw DomainError("Fock vector needs at least one amplitude");
}

double FockVector::norm2() const noexcept {
    long double acc = 0.0L;
    for (const auto& a : amps_) acc += std::norm(a);
    return static_cast<double>(acc);
}

complex FockVector::inner(const FockVector& other) const {
    if (other.amps_.size() != amps_.size()) throw DomainError("Fock vectors differ in cutoff");
    complex acc{};
    for (std::size_t n = 0; n < amps_.size(); ++n) acc += std::conj(amps_[n]) * other.amps_[n];
    return acc;
}

TwoModeFock::TwoModeFock(std::size_t cutoff, std::vector<complex> amps, double truncation_loss)
    : cutoff_(cutoff), amps_(std::move(amps)), loss_(truncation_loss) {
    if (amps_.size() != dim() * dim()) throw DomainError("two-mode amplitude array has wrong size");
}

TwoModeFock TwoModeFock::product(const FockVector& u, const FockVector& v) {
    if (u.cutoff() != v.cutoff()) throw DomainError("product: cutoffs differ");
    const std::size_t n = u.cutoff() + 1;
    std::vector<complex> amps(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) amps[i * n + j] = u.amps()[i] * v.amps()[j];
    }
    const double kept = u.norm2() * v.norm2();
    return TwoModeFock(u.cutoff(), std::move(amps), std::max(0.0, 1.0 - kept));
}

double TwoModeFock::norm2() const noexcept {
    long double acc = 0.0L;
    for (const auto& a : amps_) acc += std::norm(a);
    return static_cast<double>(acc);
}

complex TwoModeFock::inner(const TwoModeFock& other) const {
    if (other.cutoff_ != cutoff_) throw DomainError("two-mode states differ in cutoff");
    complex acc{};
    for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

std::size_t default_kerr_cutoff(complex alpha) {
    const double a = std::abs(alpha);
    return static_cast<std::size_t>(std::ceil(a * a + 8.0 * a + 20.0));
}

FockVector coherent_fock(complex alpha, std::size_t cutoff, double max_loss) {
    const double a2 = std::norm(alpha);
    if (a2 > static_cast<double>(cutoff) / 2.0) {
        throw TruncationError("coherent_fock: |alpha|^2 = " + std::to_string(a2) +
                              " exceeds cutoff/2 = " + std::to_string(cutoff / 2.0));
    }
    std::vector<complex> amps(cutoff + 1);
    amps[0] = std::exp(-a2 / 2.0);
    for (std::size_t n = 1; n <= cutoff; ++n) {
        amps[n] = amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    FockVector probe(amps);
    const double loss = std::max(0.0, 1.0 - probe.norm2());
    if (loss > max_loss) {
        throw TruncationError("coherent_fock: truncation loss " + std::to_string(loss) +
                              " exceeds " + std::to_string(max_loss) + " at cutoff " + std::to_string(cutoff));
    }
    return FockVector(std::move(amps), loss);
}

PseudoNumberComponent pseudo_number_component(const FockVector& v, int d, int k) {
    check_modulus(d);
    if (k < 0 || k >= d) throw DomainError("residue k must lie in [0, d)");
    std::vector<complex> amps(v.amps().size());
    for (std::size_t n = static_cast<std::size_t>(k); n < amps.size(); n += static_cast<std::size_t>(d)) {
        amps[n] = v.amps()[n];
    }
    FockVector projected(std::move(amps), v.truncation_loss());
    const double norm = std::sqrt(projected.norm2());
    return {std::move(projected), norm};
}

TwoModeFock cross_kerr_apply(const TwoModeFock& s, int d) {
    check_modulus(d);
    TwoModeFock out = s;
    for (std::size_t n1 = 0; n1 < s.dim(); ++n1) {
        for (std::size_t n2 = 0; n2 < s.dim(); ++n2) {
            out(n1, n2) *= root_of_unity(n1 * n2, d);
        }
    }
    return out;
}

namespace {

std::vector<FockVector> pseudo_phase_states(complex alpha, int d, std::size_t cutoff) {
    std::vector<FockVector> states;
    states.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        states.push_back(coherent_fock(alpha * root_of_unity(static_cast<std::size_t>(k), d), cutoff));
    }
    return states;
}

Eigen::MatrixXcd gram_of(const std::vector<FockVector>& states) {
    const auto d = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXcd g(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) g(k, l) = states[k].inner(states[l]);
    }
    return g;
}

} // namespace

Eigen::MatrixXcd pseudo_phase_gram(complex alpha, int d, std::size_t cutoff) {
    check_modulus(d);
    return gram_of(pseudo_phase_states(alpha, d, cutoff));
}

KerrReport kerr_mes_fidelity(complex alpha, int d, std::optional<std::size_t> cutoff) {
    check_modulus(d);
    KerrReport report;
    report.cutoff = cutoff.value_or(default_kerr_cutoff(alpha));
    const std::size_t dim = report.cutoff + 1;

    const FockVector input = coherent_fock(alpha, report.cutoff);
    const TwoModeFock evolved = cross_kerr_apply(TwoModeFock::product(input, input), d);

    std::vector<FockVector> number_states;
    for (int k = 0; k < d; ++k) {
        auto component = pseudo_number_component(input, d, k);
        report.component_norms2.push_back(component.norm * component.norm);
        if (component.norm == 0.0) {
            throw DegeneracyError("kerr: pseudo-number component " + std::to_string(k) + " vanishes");
        }
        std::vector<complex> normalized = component.state.amps();
        for (auto& a : normalized) a /= component.norm;
        number_states.emplace_back(std::move(normalized));
    }

    const auto phase_states = pseudo_phase_states(alpha, d, report.cutoff);
    const Eigen::MatrixXcd gram = gram_of(phase_states);
    for (int dk = 1; dk < d; ++dk) report.gram_offdiag.push_back(std::abs(gram(0, dk)));

    // Loewdin: |~k> = sum_l |phi_l> (G^{-1/2})_{lk}
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    report.min_gram_eigenvalue = solver.eigenvalues().minCoeff();
    if (report.min_gram_eigenvalue < kGramSingular) {
        throw DegeneracyError("kerr: pseudo-phase Gram matrix is singular (min eigenvalue " +
                              std::to_string(report.min_gram_eigenvalue) + ")");
    }
    const Eigen::MatrixXcd inv_sqrt = solver.eigenvectors() *
                                      solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                      solver.eigenvectors().adjoint();

    std::vector<complex> target(dim * dim);
    const double weight = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        std::vector<complex> phase(dim);
        for (int l = 0; l < d; ++l) {
            const complex c = inv_sqrt(l, k);
            for (std::size_t n = 0; n < dim; ++n) phase[n] += phase_states[l].amps()[n] * c;
        }
        const auto& number = number_states[k].amps();
        for (std::size_t n1 = 0; n1 < dim; ++n1) {
            if (number[n1] == complex{}) continue;
            for (std::size_t n2 = 0; n2 < dim; ++n2) target[n1 * dim + n2] += weight * number[n1] * phase[n2];
        }
    }
    const TwoModeFock ideal(report.cutoff, std::move(target));
    report.fidelity = std::clamp(std::abs(ideal.inner(evolved)), 0.0, 1.0);
    return report;
}

} // namespace mescorr
