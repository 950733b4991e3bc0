#include <gtest/gtest.h>

#include <cmath>

#include "mescorr/error.hpp"
#include "mescorr/gmms.hpp"
#include "mescorr/metrics.hpp"
#include "oracles.hpp"

namespace mescorr {
namespace {

TEST(Gmms, DiagonalSumsToOne) {
    for (double b : {0.3, 1.0, 4.0, 15.0}) {
        const auto d = gmms_distribution(b);
        EXPECT_NEAR(d.total() + d.tail_bound, 1.0, 1e-12) << "b=" << b;
        EXPECT_LE(d.tail_bound, 1e-12);
        EXPECT_DOUBLE_EQ(d.b, b);
    }
}

TEST(Gmms, DiagonalIsF) {
    const auto d = gmms_distribution(2.5);
    for (std::size_t n = 0; n < d.probs.size(); ++n) {
        const double ref = testing::f_reference(n, 2.5);
        EXPECT_NEAR(d.probs[n], ref, 1e-12 * ref + 1e-300);
    }
}

TEST(Gmms, MeanIsHalfRadiusSquared) {
    for (double b : {0.5, 3.0, 12.0}) {
        EXPECT_NEAR(gmms_distribution(b).mean(), b * b / 2.0, 1e-9 * (1.0 + b * b));
    }
}

TEST(Gmms, PurificationIsTheGmes) {
    for (double b : {0.7, 5.0, 15.0}) {
        const auto purified = purify(gmms_distribution(b));
        const auto gmes = gmes_spectrum(b);
        ASSERT_EQ(purified.size(), gmes.size());
        for (std::size_t n = 0; n < gmes.size(); ++n) EXPECT_NEAR(purified[n], gmes[n], 1e-15);
        EXPECT_NEAR(fidelity(purified, gmes), 1.0, 1e-12);
        EXPECT_EQ(purified.label(), SpectrumLabel::custom);
    }
}

TEST(Gmms, Errors) {
    EXPECT_THROW(gmms_distribution(0.0), DomainError);
    EXPECT_THROW(gmms_distribution(-1.0), DomainError);
}

TEST(Thermal, GeometricDistribution) {
    const double nbar = 2.0;
    const auto d = thermal_distribution(nbar);
    const double q = nbar / (1.0 + nbar);
    for (std::size_t n = 0; n < 50; ++n) EXPECT_NEAR(d.probs[n], std::pow(q, n) / (1.0 + nbar), 1e-15);
    EXPECT_NEAR(d.total() + d.tail_bound, 1.0, 1e-13);
    EXPECT_NEAR(d.mean(), nbar, 1e-9);
}

TEST(Thermal, PurificationIsTheTmsv) {
    for (double nbar : {0.1, 1.0, 20.0}) {
        const double r = solve_r_for_nbar(nbar);
        const auto purified = purify(thermal_distribution(nbar));
        const auto tmsv = tmsv_spectrum(r);
        EXPECT_NEAR(fidelity(purified, tmsv), 1.0, 1e-11) << "nbar=" << nbar;
        for (std::size_t n = 0; n < std::min(purified.size(), tmsv.size()); ++n) {
            EXPECT_NEAR(purified[n], tmsv[n], 1e-12);
        }
    }
}

TEST(Thermal, VacuumAndErrors) {
    const auto vac = thermal_distribution(0.0);
    ASSERT_EQ(vac.probs.size(), 1u);
    EXPECT_EQ(vac.probs[0], 1.0);
    EXPECT_THROW(thermal_distribution(-1.0), DomainError);
}

TEST(Purify, RejectsNegativeProbability) {
    PhotonDistribution d{{1.2, -0.2}, 0.0};
    EXPECT_THROW(purify(d), DomainError);
}

} // namespace
} // namespace mescorr
