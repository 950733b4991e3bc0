#include "mescorr/cli/app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "mescorr/bell_oracle.hpp"
#include "mescorr/cli/config.hpp"
#include "mescorr/cli/csv.hpp"
#include "mescorr/cli/sweep.hpp"
#include "mescorr/crosskerr.hpp"
#include "mescorr/error.hpp"
#include "mescorr/metrics.hpp"
#include "mescorr/states.hpp"

namespace mescorr::cli {
namespace {

constexpr double kOracleGapLimit = 1e-3;

struct CommonFlags {
    double tol = 1e-12;
    std::size_t cap = 200'000;
    std::uint64_t seed = 20180101;
    std::string out;
    std::string x;

    TruncationPolicy truncation() const {
        TruncationPolicy p{tol, cap};
        p.validate();
        return p;
    }
};

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--tol", flags.tol, "Truncation tolerance on the discarded squared norm")
        ->capture_default_str();
    sub->add_option("--cap", flags.cap, "Hard cap on the spectrum cutoff")->capture_default_str();
    sub->add_option("--seed", flags.seed, "Random seed")->capture_default_str();
    sub->add_option("--out", flags.out, "Output file (default: standard output)");
    sub->add_option("--x", flags.x, "Sweep axis for fig1/fig2: parameter or nbar")
        ->check(CLI::IsMember({"parameter", "nbar"}));
}

struct RangeFlags {
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<int> steps;
    std::optional<std::string> spacing;

    SweepRange resolve(SweepRange defaults) const {
        if (start) defaults.start = *start;
        if (stop) defaults.stop = *stop;
        if (steps) defaults.steps = *steps;
        if (spacing) defaults.spacing = *spacing == "log" ? Spacing::log : Spacing::linear;
        defaults.validate();
        return defaults;
    }
};

void add_range(CLI::App* sub, RangeFlags& flags) {
    sub->add_option("--start", flags.start, "First sweep value");
    sub->add_option("--stop", flags.stop, "Last sweep value");
    sub->add_option("--steps", flags.steps, "Number of sweep points");
    sub->add_option("--spacing", flags.spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));
}

SchmidtSpectrum spectrum_from_spec(const std::string& spec, const TruncationPolicy& policy) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("state spec '" + spec + "' must look like tmsv:<r>, gmes:<b> or mes:<N>");
    }
    const std::string family = spec.substr(0, colon);
    const std::string value = spec.substr(colon + 1);
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw ConfigError("state spec '" + spec + "' has a bad value");
    if (family == "tmsv") return tmsv_spectrum(x, policy);
    if (family == "gmes") return gmes_spectrum(x, policy);
    if (family == "mes") {
        if (x != std::floor(x)) throw DomainError("mes dimension must be an integer");
        return mes_spectrum(static_cast<std::int64_t>(x));
    }
    throw ConfigError("unknown state family '" + family + "'");
}

void write_table(std::ostream& out, const Table& table) {
    CsvWriter csv(out);
    csv.header(table.header);
    for (const auto& row : table.rows) {
        std::vector<Cell> cells(row.begin(), row.end());
        csv.row(cells);
    }
}

// Pulls `--config <path>` / `--config=<path>` out of the argument list and
// merges the file's keys underneath the explicit flags.
std::vector<std::string> expand_config(std::span<const std::string> args) {
    std::vector<std::string> rest;
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw ConfigError("--config needs a path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path) return rest;
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot read config file '" + *path + "'");
    return merge_config(rest, parse_config(in));
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schmidt spectra, fidelities and qutrit Bell values of Gaussian and discrete maximally entangled states",
                 "mescorr"};
    app.require_subcommand(1);
    CommonFlags common;
    std::function<int(std::ostream&, std::ostream&)> action;

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Print a Schmidt spectrum as n,coeff");
    std::string family;
    std::optional<double> r_flag, b_flag;
    std::optional<std::int64_t> n_flag;
    spectrum->add_option("--family", family, "tmsv, gmes or mes")
        ->required()
        ->check(CLI::IsMember({"tmsv", "gmes", "mes"}));
    spectrum->add_option("--r", r_flag, "Squeezing parameter (tmsv)");
    spectrum->add_option("--b", b_flag, "Boundary radius (gmes)");
    spectrum->add_option("--N", n_flag, "Dimension (mes)");
    add_common(spectrum, common);
    spectrum->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream&) {
            const auto policy = common.truncation();
            const auto need = [](const auto& flag, const char* name) {
                if (!flag) throw ConfigError(std::string("spectrum: family needs --") + name);
                return *flag;
            };
            const SchmidtSpectrum s = family == "tmsv"   ? tmsv_spectrum(need(r_flag, "r"), policy)
                                      : family == "gmes" ? gmes_spectrum(need(b_flag, "b"), policy)
                                                         : mes_spectrum(need(n_flag, "N"));
            CsvWriter csv(csv_out);
            csv.header({"n", "coeff"});
            for (std::size_t n = 0; n < s.size(); ++n) csv.row({static_cast<std::int64_t>(n), s[n]});
            return int{kSuccess};
        };
    });

    // fidelity
    auto* fid = app.add_subcommand("fidelity", "Fidelity between two states given as family:value");
    std::string left, right;
    fid->add_option("--left", left, "State spec, e.g. gmes:15")->required();
    fid->add_option("--right", right, "State spec, e.g. mes:200")->required();
    add_common(fid, common);
    fid->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream&) {
            const auto policy = common.truncation();
            const double value = fidelity(spectrum_from_spec(left, policy), spectrum_from_spec(right, policy));
            CsvWriter csv(csv_out);
            csv.header({"left", "right", "fidelity"});
            csv.row({left, right, value});
            return int{kSuccess};
        };
    });

    // fig1
    auto* fig1 = app.add_subcommand("fig1", "Closed-form qutrit Bell maxima of GMES and TMSV against nbar");
    RangeFlags fig1_range;
    add_range(fig1, fig1_range);
    add_common(fig1, common);
    fig1->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream&) {
            if (!common.x.empty() && common.x != "nbar") {
                throw ConfigError("fig1 sweeps the full-state mean photon number; only --x nbar applies");
            }
            SweepConfig config;
            config.variable = SweepVariable::nbar;
            config.range = fig1_range.resolve(fig1_default_range());
            config.truncation = common.truncation();
            config.validate();
            const auto rows = fig1_rows(config.range, config.truncation);
            CsvWriter csv(csv_out);
            csv.header({"nbar", "bell_gmes", "bell_tmsv"});
            for (const auto& row : rows) csv.row({row.nbar, row.bell_gmes, row.bell_tmsv});
            return int{kSuccess};
        };
    });

    // fig2
    auto* fig2 = app.add_subcommand("fig2", "Fidelities between GMES/TMSV and N x N maximally entangled states");
    std::string variant;
    RangeFlags fig2_range;
    std::vector<std::int64_t> dimensions;
    std::optional<double> fixed;
    fig2->add_option("--variant", variant, "a: vs b, b: vs r, c: vs N at fixed b, d: vs N at fixed r")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    add_range(fig2, fig2_range);
    fig2->add_option("--N", dimensions, "Comma-separated MES dimensions (variants a, b)")->delimiter(',');
    fig2->add_option("--fixed", fixed, "Fixed b (variant c, default 15) or r (variant d, default 5)");
    add_common(fig2, common);
    fig2->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream&) {
            Fig2Options options;
            options.variant = variant == "a"   ? Fig2Variant::a
                              : variant == "b" ? Fig2Variant::b
                              : variant == "c" ? Fig2Variant::c
                                               : Fig2Variant::d;
            const bool by_dimension = options.variant == Fig2Variant::c || options.variant == Fig2Variant::d;
            if (by_dimension && common.x == "nbar") {
                throw ConfigError("fig2 variants c and d sweep the dimension N; --x nbar does not apply");
            }
            options.x = common.x == "nbar" ? SweepVariable::nbar : SweepVariable::parameter;
            options.range = fig2_range.resolve(fig2_default_range(options.variant, options.x));
            if (!dimensions.empty()) options.dimensions = dimensions;
            options.fixed = fixed.value_or(fig2_default_fixed(options.variant));
            options.truncation = common.truncation();
            write_table(csv_out, fig2_table(options));
            return int{kSuccess};
        };
    });

    // bell-oracle
    auto* oracle = app.add_subcommand("bell-oracle", "Closed-form vs numerically maximized qutrit Bell value");
    std::vector<double> coeffs;
    int restarts = 32;
    std::string measurement = "fourier";
    oracle->add_option("--a", coeffs, "Three nonnegative Schmidt coefficients a0 a1 a2")->required()->expected(3);
    oracle->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
    oracle->add_option("--family", measurement, "Measurement family: fourier or general")
        ->check(CLI::IsMember({"fourier", "general"}))
        ->capture_default_str();
    add_common(oracle, common);
    oracle->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream& diag) {
            // Relabel into nonincreasing Schmidt order; the closed form assumes it.
            const auto q = QutritState::normalized({coeffs[0], coeffs[1], coeffs[2]}).sorted();
            const auto analytic = bell_max_analytic(q);
            OracleOptions options;
            options.restarts = restarts;
            options.seed = common.seed;
            options.family =
                measurement == "general" ? MeasurementFamily::general_unitary : MeasurementFamily::fourier_phase;
            const auto result = maximize_bell(q, options);
            const double gap = std::abs(result.value - analytic.value);

            CsvWriter csv(csv_out);
            csv.header({"a0", "a1", "a2", "analytic", "oracle", "gap", "applicable", "converged"});
            csv.row({q[0], q[1], q[2], analytic.value, result.value, gap,
                     std::int64_t{analytic.applicable}, std::int64_t{result.converged}});
            if (gap > kOracleGapLimit) {
                diag << "bell-oracle: gap " << format_real(gap) << " exceeds " << format_real(kOracleGapLimit) << '\n';
                return int{kOracleGap};
            }
            return int{kSuccess};
        };
    });

    // kerr
    auto* kerr = app.add_subcommand("kerr", "Cross-Kerr pseudo-number/pseudo-phase MES fidelity");
    double alpha_re = 0.0, alpha_im = 0.0;
    int modulus = 2;
    std::optional<std::size_t> cutoff;
    kerr->add_option("--alpha", alpha_re, "Coherent amplitude (real part)")->required();
    kerr->add_option("--alpha-im", alpha_im, "Coherent amplitude (imaginary part)");
    kerr->add_option("--d", modulus, "Pseudo-number modulus")->required();
    kerr->add_option("--cutoff", cutoff, "Fock cutoff (default ceil(|a|^2 + 8|a| + 20))");
    add_common(kerr, common);
    kerr->callback([&] {
        action = [&](std::ostream& csv_out, std::ostream& diag) {
            const complex alpha{alpha_re, alpha_im};
            const auto report = kerr_mes_fidelity(alpha, modulus, cutoff);
            std::vector<std::string> header{"alpha_re", "alpha_im", "d", "cutoff", "fidelity",
                                            "component_norm2_sum", "min_gram_eigenvalue"};
            std::vector<Cell> row{alpha_re, alpha_im, std::int64_t{modulus}, static_cast<std::int64_t>(report.cutoff),
                                  report.fidelity, 0.0, report.min_gram_eigenvalue};
            double sum = 0.0;
            for (std::size_t k = 0; k < report.component_norms2.size(); ++k) {
                header.push_back("component_norm2_k" + std::to_string(k));
                row.emplace_back(report.component_norms2[k]);
                sum += report.component_norms2[k];
            }
            row[5] = sum;
            for (std::size_t dk = 0; dk < report.gram_offdiag.size(); ++dk) {
                header.push_back("gram_offdiag_dk" + std::to_string(dk + 1));
                row.emplace_back(report.gram_offdiag[dk]);
            }
            if (report.min_gram_eigenvalue < 1e-3) {
                diag << "kerr: warning: pseudo-phase states nearly linearly dependent (min Gram eigenvalue "
                     << format_real(report.min_gram_eigenvalue) << ")\n";
            }
            CsvWriter csv(csv_out);
            csv.header(header);
            csv.row(row);
            return int{kSuccess};
        };
    });

    try {
        auto expanded = expand_config(args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kSuccess} : int{kUsageError};
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        std::ostringstream buffer;
        const int code = action(buffer, err);
        if (common.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(common.out, std::ios::binary);
            if (!file || !(file << buffer.str())) {
                err << "error: cannot write '" << common.out << "'\n";
                return kUsageError;
            }
        }
        return code;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace mescorr::cli
