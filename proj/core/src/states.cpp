#include "mescorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mescorr/error.hpp"
#include "mescorr/poisson.hpp"

namespace mescorr {
namespace {

constexpr double kNormSlack = 1e-12;

// Spectra always carry n = 0..2, even when the tail past n = 1 is already
// below tol, so the qutrit block read by qutrit_truncate is exact.
constexpr std::size_t kMinCutoff = 2;

void require_finite_nonnegative(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError(std::string(what) + " must be finite and >= 0, got " + std::to_string(value));
    }
}

// Truncating the GMES spectrum past this many photons leaves no representable
// mass: f(n, b) is an upper Poisson tail, negligible beyond mean + 40 sigma.
std::size_t gmes_support(double mean) {
    return static_cast<std::size_t>(std::floor(mean + 40.0 * std::sqrt(mean))) + 60;
}

} // namespace

std::string_view to_string(SpectrumLabel label) {
    switch (label) {
    case SpectrumLabel::tmsv: return "tmsv";
    case SpectrumLabel::gmes: return "gmes";
    case SpectrumLabel::mes: return "mes";
    case SpectrumLabel::custom: return "custom";
    }
    return "custom";
}

void TruncationPolicy::validate() const {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw ConfigError("truncation tolerance must lie in (0, 1), got " + std::to_string(tol));
    }
    if (max_cutoff == 0) {
        throw ConfigError("cutoff cap must be positive");
    }
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> coeffs, double tail_bound, SpectrumLabel label)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound), label_(label) {
    if (coeffs_.empty()) {
        throw DomainError("Schmidt spectrum needs at least one coefficient");
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c) || c < 0.0) {
            throw DomainError("Schmidt coefficients must be finite and >= 0");
        }
    }
    require_finite_nonnegative(tail_bound_, "tail bound");
    const double norm2 = squared_norm();
    if (norm2 > 1.0 + kNormSlack || norm2 < 1.0 - tail_bound_ - kNormSlack) {
        throw DomainError("Schmidt spectrum squared norm " + std::to_string(norm2) +
                          " inconsistent with tail bound " + std::to_string(tail_bound_));
    }
}

double SchmidtSpectrum::squared_norm() const noexcept {
    long double acc = 0.0L;
    for (double c : coeffs_) acc += static_cast<long double>(c) * c;
    return static_cast<double>(acc);
}

void StateParams::validate() const {
    require_finite_nonnegative(r, "r");
    require_finite_nonnegative(b, "b");
    require_finite_nonnegative(nbar, "nbar");
    if (N < 1) throw DomainError("dimension N must be >= 1");
}

std::vector<double> tmsv_leading(double r, std::size_t count) {
    require_finite_nonnegative(r, "squeezing parameter r");
    const double t = std::tanh(r);
    // (1 - t)(1 + t) = 1/cosh^2 r; forming it from t keeps sum c_n^2 consistent
    // with the geometric series in t even when 1 - t^2 is tiny.
    const double sech = std::sqrt((1.0 - t) * (1.0 + t));
    std::vector<double> c(count);
    for (std::size_t n = 0; n < count; ++n) {
        c[n] = (n == 0 ? 1.0 : std::pow(t, static_cast<double>(n))) * sech;
    }
    return c;
}

SchmidtSpectrum tmsv_spectrum(double r, const TruncationPolicy& policy) {
    require_finite_nonnegative(r, "squeezing parameter r");
    policy.validate();
    const double t = std::tanh(r);
    if (t == 0.0) {
        return SchmidtSpectrum({1.0}, 0.0, SpectrumLabel::tmsv);
    }
    if (t >= 1.0) {
        throw TruncationError("tmsv: tanh(r) rounds to 1, spectrum cannot be truncated (r = " +
                              std::to_string(r) + ")");
    }
    const auto tail_after = [t](double m) { return std::pow(t, 2.0 * (m + 1.0)); };
    const double estimate = std::ceil(std::log(policy.tol) / (2.0 * std::log(t))) - 1.0;
    if (estimate > static_cast<double>(policy.max_cutoff)) {
        throw TruncationError("tmsv: cutoff " + std::to_string(estimate) + " exceeds cap " +
                              std::to_string(policy.max_cutoff) + " for r = " + std::to_string(r));
    }
    double m = std::max(0.0, estimate);
    while (tail_after(m) > policy.tol) m += 1.0;
    while (m > 0.0 && tail_after(m - 1.0) <= policy.tol) m -= 1.0;
    m = std::max(m, static_cast<double>(kMinCutoff));
    const auto cutoff = static_cast<std::size_t>(m);
    if (cutoff > policy.max_cutoff) {
        throw TruncationError("tmsv: cutoff exceeds cap for r = " + std::to_string(r));
    }
    return SchmidtSpectrum(tmsv_leading(r, cutoff + 1), tail_after(m), SpectrumLabel::tmsv);
}

double f_coefficient(std::int64_t n, double b) {
    if (n < 0) throw DomainError("photon number index must be >= 0");
    if (!std::isfinite(b) || b <= 0.0) throw DomainError("boundary radius b must be > 0");
    const double mean = b * b;
    return poisson::upper_tail(static_cast<std::size_t>(n), mean) / mean;
}

std::vector<double> f_coefficients(double b, std::size_t count) {
    if (!std::isfinite(b) || b <= 0.0) throw DomainError("boundary radius b must be > 0");
    const double mean = b * b;
    auto f = poisson::upper_tails(count, mean);
    for (double& v : f) v /= mean;
    return f;
}

std::vector<double> gmes_leading(double b, std::size_t count) {
    auto c = f_coefficients(b, count);
    for (double& v : c) v = std::sqrt(v);
    return c;
}

SchmidtSpectrum gmes_spectrum(double b, const TruncationPolicy& policy) {
    if (!std::isfinite(b) || b <= 0.0) {
        throw DomainError("gmes: boundary radius b must be > 0 (b = 0 is the vacuum limit; use tmsv r = 0)");
    }
    policy.validate();
    const double mean = b * b;
    if (mean > static_cast<double>(policy.max_cutoff)) {
        throw TruncationError("gmes: b^2 = " + std::to_string(mean) + " exceeds cutoff cap " +
                              std::to_string(policy.max_cutoff));
    }
    const auto f = f_coefficients(b, gmes_support(mean));

    // after[m] = sum_{n > m} f(n)
    std::vector<long double> after(f.size(), 0.0L);
    for (std::size_t m = f.size() - 1; m-- > 0;) {
        after[m] = after[m + 1] + f[m + 1];
    }
    std::size_t cutoff = kMinCutoff;
    while (cutoff + 1 < f.size() && after[cutoff] > policy.tol) ++cutoff;
    if (cutoff > policy.max_cutoff) {
        throw TruncationError("gmes: cutoff " + std::to_string(cutoff) + " exceeds cap " +
                              std::to_string(policy.max_cutoff));
    }

    std::vector<double> c(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(cutoff + 1));
    for (double& v : c) v = std::sqrt(v);
    return SchmidtSpectrum(std::move(c), static_cast<double>(after[cutoff]), SpectrumLabel::gmes);
}

SchmidtSpectrum mes_spectrum(std::int64_t N) {
    if (N < 1) throw DomainError("mes: dimension N must be >= 1");
    const auto n = static_cast<std::size_t>(N);
    return SchmidtSpectrum(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(N))), 0.0,
                           SpectrumLabel::mes);
}

double mean_photon(const SchmidtSpectrum& s) {
    long double acc = 0.0L;
    const auto c = s.coeffs();
    for (std::size_t n = 1; n < c.size(); ++n) {
        acc += static_cast<long double>(n) * c[n] * c[n];
    }
    return static_cast<double>(acc);
}

double solve_r_for_nbar(double nbar) {
    require_finite_nonnegative(nbar, "mean photon number");
    return std::asinh(std::sqrt(nbar));
}

double solve_b_for_nbar(double nbar, const BoundarySolverOptions& options) {
    if (!std::isfinite(nbar) || nbar <= 0.0) {
        throw DomainError("solve_b_for_nbar: nbar must be > 0");
    }
    const auto photons = [&](double b) -> double {
        try {
            return mean_photon(gmes_spectrum(b, options.truncation));
        } catch (const TruncationError& e) {
            throw SolverError(std::string("solve_b_for_nbar: ") + e.what());
        }
    };

    double lo = 0.0;
    double hi = 1.0;
    while (photons(hi) < nbar) {
        lo = hi;
        hi *= 2.0;
        if (hi > options.b_max) {
            throw SolverError("solve_b_for_nbar: failed to bracket nbar = " + std::to_string(nbar) +
                              " within b in [0, " + std::to_string(options.b_max) + "]");
        }
    }

    // Near the floating-point resolution of b the residual is limited by
    // rounding in the photon sum; accept that floor rather than fail.
    const double floor_tol = std::max(options.tol, 64.0 * std::numeric_limits<double>::epsilon() * nbar);
    double best = hi;
    double best_err = std::abs(photons(hi) - nbar);
    for (int it = 0; it < options.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double err = photons(mid) - nbar;
        if (std::abs(err) < best_err) {
            best = mid;
            best_err = std::abs(err);
        }
        if (best_err <= options.tol) return best;
        (err < 0.0 ? lo : hi) = mid;
    }
    if (best_err <= floor_tol) return best;
    throw SolverError("solve_b_for_nbar: no convergence for nbar = " + std::to_string(nbar) +
                      ", bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "], residual " +
                      std::to_string(best_err));
}

} // namespace mescorr
