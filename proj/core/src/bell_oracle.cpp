#include "mescorr/bell_oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "mescorr/error.hpp"

namespace mescorr {
namespace {

using cd = std::complex<double>;

const cd kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

Matrix3c fourier_matrix() {
    Matrix3c f;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            f(j, k) = std::pow(kOmega, j * k) / std::sqrt(3.0);
        }
    }
    return f;
}

// Portable uniform draw in [lo, hi); std::uniform_real_distribution is not
// specified bit-for-bit across standard libraries.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Bell value with the state folded into W_kl = a_k a_l, so that
// Q(A, B) = sum_kl W_kl A_kl B_kl.
class BellObjective {
public:
    explicit BellObjective(const QutritState& q) {
        for (int k = 0; k < 3; ++k) {
            for (int l = 0; l < 3; ++l) weights_(k, l) = q[k] * q[l];
        }
    }

    cd correlation(const Matrix3c& A, const Matrix3c& B) const {
        return (weights_.cast<cd>().array() * A.array() * B.array()).sum();
    }

    double operator()(const std::array<Matrix3c, 4>& obs) const {
        const cd q11 = correlation(obs[0], obs[2]);
        const cd q12 = correlation(obs[0], obs[3]);
        const cd q21 = correlation(obs[1], obs[2]);
        const cd q22 = correlation(obs[1], obs[3]);
        return (q11 + q12 - q21 + q22).real() + (q11 - q12 - q21 + q22).imag() / std::sqrt(3.0);
    }

private:
    Eigen::Matrix3d weights_;
};

struct SearchOutcome {
    double value;
    std::vector<double> params;
    bool converged;
};

SearchOutcome compass_search(const BellObjective& objective, std::vector<double> x,
                             const OracleOptions& opt) {
    const std::size_t per = parameters_per_observable(opt.family);
    std::array<Matrix3c, 4> obs;
    for (std::size_t i = 0; i < 4; ++i) {
        obs[i] = observable_from_parameters(std::span<const double>(x).subspan(i * per, per), opt.family);
    }
    double best = objective(obs);
    double step = opt.initial_step;
    bool converged = false;

    for (int sweep = 0; sweep < opt.max_iterations; ++sweep) {
        bool improved = false;
        for (std::size_t p = 0; p < x.size(); ++p) {
            const std::size_t which = p / per;
            const double original = x[p];
            for (double direction : {1.0, -1.0}) {
                x[p] = original + direction * step;
                const Matrix3c saved = obs[which];
                obs[which] = observable_from_parameters(
                    std::span<const double>(x).subspan(which * per, per), opt.family);
                const double value = objective(obs);
                if (value > best) {
                    best = value;
                    improved = true;
                    break;
                }
                obs[which] = saved;
                x[p] = original;
            }
        }
        if (!improved) {
            step *= opt.shrink;
            if (step < opt.step_tol) {
                converged = true;
                break;
            }
        }
    }
    return {best, std::move(x), converged};
}

} // namespace

std::size_t parameters_per_observable(MeasurementFamily family) {
    return family == MeasurementFamily::fourier_phase ? 2 : 8;
}

Matrix3c reference_observable() {
    Matrix3c omega = Matrix3c::Zero();
    omega(0, 0) = 1.0;
    omega(1, 1) = kOmega;
    omega(2, 2) = kOmega * kOmega;
    return omega;
}

const std::array<Matrix3c, 8>& gell_mann_generators() {
    static const std::array<Matrix3c, 8> generators = [] {
        std::array<Matrix3c, 8> g;
        for (auto& m : g) m.setZero();
        const cd i{0.0, 1.0};
        g[0](0, 1) = g[0](1, 0) = 1.0;
        g[1](0, 1) = -i;
        g[1](1, 0) = i;
        g[2](0, 0) = 1.0;
        g[2](1, 1) = -1.0;
        g[3](0, 2) = g[3](2, 0) = 1.0;
        g[4](0, 2) = -i;
        g[4](2, 0) = i;
        g[5](1, 2) = g[5](2, 1) = 1.0;
        g[6](1, 2) = -i;
        g[6](2, 1) = i;
        g[7](0, 0) = g[7](1, 1) = 1.0 / std::sqrt(3.0);
        g[7](2, 2) = -2.0 / std::sqrt(3.0);
        return g;
    }();
    return generators;
}

Matrix3c unitary_exp(const Matrix3c& hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix3c> solver(hermitian);
    const Eigen::Vector3cd phases =
        solver.eigenvalues().unaryExpr([](double lambda) { return std::polar(1.0, lambda); });
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix3c observable_from_parameters(std::span<const double> params, MeasurementFamily family) {
    const std::size_t per = parameters_per_observable(family);
    if (params.size() != per) {
        throw DomainError("observable needs " + std::to_string(per) + " parameters, got " +
                          std::to_string(params.size()));
    }
    const auto& g = gell_mann_generators();
    Matrix3c u;
    if (family == MeasurementFamily::fourier_phase) {
        // exp(i (t1 L3 + t2 L8)) is diagonal.
        Eigen::Vector3cd d;
        for (int k = 0; k < 3; ++k) {
            d(k) = std::polar(1.0, params[0] * g[2](k, k).real() + params[1] * g[7](k, k).real());
        }
        static const Matrix3c f = fourier_matrix();
        u = d.asDiagonal() * f;
    } else {
        Matrix3c h = Matrix3c::Zero();
        for (std::size_t k = 0; k < 8; ++k) h += params[k] * g[k];
        u = unitary_exp(h);
    }
    return u * reference_observable() * u.adjoint();
}

MeasurementSettings MeasurementSettings::from_parameters(std::span<const double> params,
                                                         MeasurementFamily family) {
    const std::size_t per = parameters_per_observable(family);
    if (params.size() != 4 * per) {
        throw DomainError("measurement settings need " + std::to_string(4 * per) + " parameters");
    }
    return {observable_from_parameters(params.subspan(0, per), family),
            observable_from_parameters(params.subspan(per, per), family),
            observable_from_parameters(params.subspan(2 * per, per), family),
            observable_from_parameters(params.subspan(3 * per, per), family)};
}

MeasurementSettings MeasurementSettings::reference() {
    const Matrix3c omega = reference_observable();
    return {omega, omega, omega, omega};
}

bool is_unitary(const Matrix3c& m, double tol) {
    return ((m.adjoint() * m) - Matrix3c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

std::complex<double> correlation(const QutritState& q, const Matrix3c& A, const Matrix3c& B) {
    if (!is_unitary(A) || !is_unitary(B)) {
        throw DomainError("correlation: observables must be unitary");
    }
    return BellObjective(q).correlation(A, B);
}

double bell_value(const QutritState& q, const MeasurementSettings& m) {
    for (const Matrix3c* obs : {&m.A1, &m.A2, &m.B1, &m.B2}) {
        if (!is_unitary(*obs)) throw DomainError("bell_value: observables must be unitary");
    }
    return BellObjective(q)({m.A1, m.A2, m.B1, m.B2});
}

BellResult maximize_bell(const QutritState& q, const OracleOptions& options) {
    if (options.restarts < 1) throw DomainError("maximize_bell: restarts must be >= 1");
    if (!(options.shrink > 0.0 && options.shrink < 1.0) || !(options.step_tol > 0.0) ||
        !(options.initial_step > options.step_tol)) {
        throw ConfigError("maximize_bell: invalid step schedule");
    }
    const BellObjective objective(q);
    const std::size_t dim = 4 * parameters_per_observable(options.family);

    BellResult result;
    result.value = -std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                          static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(restart)};
        std::mt19937_64 rng(seq);
        std::vector<double> start(dim);
        for (double& v : start) v = uniform(rng, -std::numbers::pi, std::numbers::pi);

        auto outcome = compass_search(objective, std::move(start), options);
        if (outcome.value > result.value) {
            result.value = outcome.value;
            result.parameters = std::move(outcome.params);
            result.converged = outcome.converged;
        }
    }
    result.restarts_used = options.restarts;
    result.settings = MeasurementSettings::from_parameters(result.parameters, options.family);
    return result;
}

} // namespace mescorr
