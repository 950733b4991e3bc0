#include "mescorr/cli/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "mescorr/cli/csv.hpp"
#include "mescorr/error.hpp"
#include "mescorr/metrics.hpp"

namespace mescorr::cli {

void SweepRange::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
        throw ConfigError("sweep range needs start < stop");
    }
    if (steps < 2) throw ConfigError("sweep needs at least 2 steps");
    if (spacing == Spacing::log && !(start > 0.0)) {
        throw ConfigError("log-spaced sweep needs start > 0");
    }
}

void SweepConfig::validate() const {
    range.validate();
    truncation.validate();
}

std::vector<double> grid(const SweepRange& range) {
    range.validate();
    std::vector<double> points(static_cast<std::size_t>(range.steps));
    const double last = range.steps - 1;
    if (range.spacing == Spacing::linear) {
        const double width = range.stop - range.start;
        for (int i = 0; i < range.steps; ++i) points[i] = range.start + width * (i / last);
    } else {
        const double lo = std::log(range.start);
        const double hi = std::log(range.stop);
        for (int i = 0; i < range.steps; ++i) points[i] = std::exp(lo + (hi - lo) * (i / last));
    }
    points.front() = range.start;
    points.back() = range.stop;
    return points;
}

std::vector<std::int64_t> integer_grid(const SweepRange& range) {
    std::vector<std::int64_t> out;
    for (double x : grid(range)) out.push_back(static_cast<std::int64_t>(std::llround(x)));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SweepRange fig1_default_range() {
    return {0.01, 50.0, 200, Spacing::log};
}

Fig1Row fig1_point(double nbar, const TruncationPolicy& truncation) {
    BoundarySolverOptions solver;
    solver.truncation = truncation;
    double b = 0.0;
    try {
        b = solve_b_for_nbar(nbar, solver);
    } catch (const SolverError& e) {
        throw SolverError("fig1: solver failed at nbar = " + format_real(nbar) + ": " + e.what());
    }
    const double r = solve_r_for_nbar(nbar);
    const auto gmes = qutrit_truncate(gmes_spectrum(b, truncation));
    const auto tmsv = qutrit_truncate(tmsv_spectrum(r, truncation));
    return {nbar, bell_max_analytic(gmes).value, bell_max_analytic(tmsv).value};
}

std::vector<Fig1Row> fig1_rows(const SweepRange& range, const TruncationPolicy& truncation) {
    std::vector<Fig1Row> rows;
    for (double nbar : grid(range)) rows.push_back(fig1_point(nbar, truncation));
    return rows;
}

SweepRange fig2_default_range(Fig2Variant variant, SweepVariable x) {
    const bool by_nbar = x == SweepVariable::nbar;
    switch (variant) {
    case Fig2Variant::a:
        // nbar(b) = b^2 / 2 for the GMES.
        return by_nbar ? SweepRange{0.01 * 0.01 / 2.0, 30.0 * 30.0 / 2.0, 300, Spacing::log}
                       : SweepRange{0.01, 30.0, 300, Spacing::linear};
    case Fig2Variant::b: {
        const auto nbar = [](double r) { return std::sinh(r) * std::sinh(r); };
        return by_nbar ? SweepRange{nbar(0.01), nbar(8.0), 300, Spacing::log}
                       : SweepRange{0.01, 8.0, 300, Spacing::linear};
    }
    case Fig2Variant::c:
        return {1.0, 2000.0, 200, Spacing::log};
    case Fig2Variant::d:
        // The TMSV(5) overlap peaks near N = 1.4e4.
        return {1.0, 100000.0, 200, Spacing::log};
    }
    return {};
}

double fig2_default_fixed(Fig2Variant variant) {
    return variant == Fig2Variant::d ? 5.0 : 15.0;
}

Table fig2_table(const Fig2Options& options) {
    options.truncation.validate();
    Table table;
    const bool by_nbar = options.x == SweepVariable::nbar;

    if (options.variant == Fig2Variant::a || options.variant == Fig2Variant::b) {
        const bool gmes = options.variant == Fig2Variant::a;
        if (options.dimensions.empty()) throw ConfigError("fig2: need at least one dimension N");
        std::int64_t largest = 0;
        for (auto N : options.dimensions) {
            if (N < 1) throw DomainError("fig2: dimensions must be >= 1");
            largest = std::max(largest, N);
        }
        table.header.push_back(by_nbar ? "nbar" : (gmes ? "b" : "r"));
        for (auto N : options.dimensions) table.header.push_back("fidelity_N" + std::to_string(N));

        BoundarySolverOptions solver;
        solver.truncation = options.truncation;
        for (double x : grid(options.range)) {
            std::vector<double> leading;
            if (gmes) {
                const double b = by_nbar ? solve_b_for_nbar(x, solver) : x;
                leading = gmes_leading(b, static_cast<std::size_t>(largest));
            } else {
                const double r = by_nbar ? solve_r_for_nbar(x) : x;
                leading = tmsv_leading(r, static_cast<std::size_t>(largest));
            }
            std::vector<double> row{x};
            for (auto N : options.dimensions) row.push_back(mes_overlap(static_cast<std::size_t>(N), leading));
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    const bool gmes = options.variant == Fig2Variant::c;
    const auto dims = integer_grid(options.range);
    if (dims.front() < 1) throw DomainError("fig2: dimensions must be >= 1");
    const auto largest = static_cast<std::size_t>(dims.back());
    const auto leading = gmes ? gmes_leading(options.fixed, largest) : tmsv_leading(options.fixed, largest);
    table.header = {"N", std::string(gmes ? "fidelity_gmes_b" : "fidelity_tmsv_r") + format_real(options.fixed)};

    // Running prefix sums: one pass over the leading coefficients.
    long double prefix = 0.0L;
    std::size_t used = 0;
    for (auto N : dims) {
        const auto n = static_cast<std::size_t>(N);
        while (used < n) prefix += leading[used++];
        const double overlap = static_cast<double>(prefix / std::sqrt(static_cast<long double>(n)));
        table.rows.push_back({static_cast<double>(N), std::clamp(overlap, 0.0, 1.0)});
    }
    return table;
}

} // namespace mescorr::cli
