#include "mescorr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mescorr/error.hpp"

namespace mescorr {
namespace {

constexpr double kQutritNormTol = 1e-12;

void check_entries(const std::array<double, 3>& a) {
    for (double v : a) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("qutrit coefficients must be finite and >= 0");
        }
    }
}

} // namespace

QutritState::QutritState(std::array<double, 3> a) : a_(a) {
    check_entries(a_);
    const double norm2 = a_[0] * a_[0] + a_[1] * a_[1] + a_[2] * a_[2];
    if (std::abs(norm2 - 1.0) > kQutritNormTol) {
        throw DomainError("qutrit state is not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
}

QutritState QutritState::normalized(std::array<double, 3> a) {
    check_entries(a);
    const double norm = std::hypot(a[0], a[1], a[2]);
    if (norm == 0.0) throw DegeneracyError("qutrit coefficients are all zero");
    for (double& v : a) v /= norm;
    return QutritState(a);
}

QutritState QutritState::uniform() {
    const double c = 1.0 / std::sqrt(3.0);
    return QutritState({c, c, c});
}

bool QutritState::schmidt_ordered() const noexcept {
    return a_[0] >= a_[1] && a_[1] >= a_[2];
}

QutritState QutritState::sorted() const {
    auto a = a_;
    std::sort(a.begin(), a.end(), std::greater<>{});
    return QutritState(a);
}

double fidelity(const SchmidtSpectrum& s, const SchmidtSpectrum& t) {
    const std::size_t common = std::min(s.size(), t.size());
    long double acc = 0.0L;
    for (std::size_t n = 0; n < common; ++n) {
        acc += static_cast<long double>(s[n]) * t[n];
    }
    return std::clamp(static_cast<double>(acc), 0.0, 1.0);
}

double mes_overlap(std::size_t N, std::span<const double> leading) {
    if (N == 0) throw DomainError("mes_overlap: dimension must be >= 1");
    const std::size_t common = std::min(N, leading.size());
    long double acc = 0.0L;
    for (std::size_t n = 0; n < common; ++n) acc += leading[n];
    return std::clamp(static_cast<double>(acc / std::sqrt(static_cast<long double>(N))), 0.0, 1.0);
}

QutritState qutrit_truncate(const SchmidtSpectrum& s) {
    const std::array<double, 3> lead{s[0], s[1], s[2]};
    if (lead[0] == 0.0 && lead[1] == 0.0 && lead[2] == 0.0) {
        throw DegeneracyError("qutrit_truncate: leading three Schmidt coefficients vanish");
    }
    return QutritState::normalized(lead);
}

double bell_formula_coefficient_limit() {
    return std::sqrt(18.0 + 9.0 * std::sqrt(3.0)) / 2.0;
}

AnalyticBell bell_max_analytic(const QutritState& q) {
    const double a0 = std::abs(q[0]);
    const double a1 = std::abs(q[1]);
    const double a2 = std::abs(q[2]);
    AnalyticBell out;
    out.value = 4.0 * a0 * a1 + 4.0 / std::sqrt(3.0) * (a0 * a2 + a1 * a2);
    out.applicable = std::max({a0, a1, a2}) <= bell_formula_coefficient_limit();
    return out;
}

double entanglement_entropy(const SchmidtSpectrum& s) {
    long double acc = 0.0L;
    for (double c : s.coeffs()) {
        const long double p = static_cast<long double>(c) * c;
        if (p > 0.0L) acc -= p * std::log2(p);
    }
    return static_cast<double>(acc);
}

} // namespace mescorr
