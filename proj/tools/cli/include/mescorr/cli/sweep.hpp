#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mescorr/states.hpp"

namespace mescorr::cli {

enum class Family { tmsv, gmes };
enum class SweepVariable { parameter, nbar, dimension };
enum class Spacing { linear, log };

struct SweepRange {
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;
    Spacing spacing = Spacing::linear;

    /// start < stop, steps >= 2, and start > 0 for log spacing.
    void validate() const;
};

struct SweepConfig {
    Family family = Family::gmes;
    SweepVariable variable = SweepVariable::parameter;
    SweepRange range;
    TruncationPolicy truncation;
    std::uint64_t seed = 0;
    std::string output;  ///< empty: standard output

    void validate() const;
};

/// `steps` points from start to stop inclusive.
std::vector<double> grid(const SweepRange& range);

/// Rounded grid points, deduplicated, in increasing order.
std::vector<std::int64_t> integer_grid(const SweepRange& range);

struct Fig1Row {
    double nbar;
    double bell_gmes;
    double bell_tmsv;
};

/// Closed-form Bell maxima of the qutrit-truncated GMES and TMSV with equal
/// full-state mean photon number. A SolverError names the offending nbar.
Fig1Row fig1_point(double nbar, const TruncationPolicy& truncation = {});
std::vector<Fig1Row> fig1_rows(const SweepRange& range, const TruncationPolicy& truncation = {});

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

enum class Fig2Variant { a, b, c, d };

struct Fig2Options {
    Fig2Variant variant = Fig2Variant::a;
    SweepRange range;
    SweepVariable x = SweepVariable::parameter;  ///< variants a, b: parameter or nbar
    std::vector<std::int64_t> dimensions{5, 20, 200, 1000};  ///< variants a, b
    double fixed = 15.0;  ///< variants c (b) and d (r)
    TruncationPolicy truncation;
};

/// Default sweep range for a variant; for variants a and b with x = nbar the
/// parameter range is mapped to mean photon numbers.
SweepRange fig2_default_range(Fig2Variant variant, SweepVariable x);
double fig2_default_fixed(Fig2Variant variant);

/// (a) fidelity(MES_N, GMES(b)) against b, one column per N; (b) the same for
/// TMSV(r); (c) fidelity(MES_N, GMES(fixed)) against N; (d) fidelity(MES_N,
/// TMSV(fixed)) against N.
Table fig2_table(const Fig2Options& options);

SweepRange fig1_default_range();

} // namespace mescorr::cli
