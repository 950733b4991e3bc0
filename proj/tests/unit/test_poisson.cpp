#include <gtest/gtest.h>

#include <cmath>

#include "mescorr/error.hpp"
#include "mescorr/poisson.hpp"
#include "oracles.hpp"

namespace mescorr {
namespace {

struct TailCase {
    std::size_t n;
    double mean;
    double expected;  // P(X > n), 50-digit mpmath regularized gammainc
};

class PoissonTailTest : public ::testing::TestWithParam<TailCase> {};

TEST_P(PoissonTailTest, MatchesHighPrecisionReference) {
    const auto& c = GetParam();
    const double got = poisson::upper_tail(c.n, c.mean);
    EXPECT_NEAR(got, c.expected, 1e-13 * c.expected + 1e-300) << "n=" << c.n << " mean=" << c.mean;
}

INSTANTIATE_TEST_SUITE_P(
    Frozen, PoissonTailTest,
    ::testing::Values(TailCase{0, 1.0, 0.6321205588285576784}, TailCase{2, 1.0, 0.080301397071394196011},
                      TailCase{50, 1.0, 2.4181903918759154166e-67}, TailCase{224, 225.0, 0.50886560073417308288},
                      TailCase{225, 225.0, 0.48227929730367613858}, TailCase{226, 225.0, 0.45581063238393360555},
                      TailCase{300, 225.0, 8.1041377392267380626e-7}, TailCase{5, 900.0, 1.0},
                      TailCase{1000, 900.0, 0.00049063273285759392464},
                      TailCase{0, 1e-6, 9.9999950000016666662e-7},
                      TailCase{20000, 20000.0, 0.49811938006993571066},
                      TailCase{20500, 20000.0, 0.00021123516019582140789}, TailCase{3, 700.0, 1.0},
                      TailCase{800, 750.0, 0.033633517750884902918}));

TEST(PoissonTail, VectorMatchesBoostAcrossMeans) {
    for (double mean : {0.01, 0.25, 1.0, 7.5, 64.0, 225.0, 900.0, 5000.0}) {
        const std::size_t count = static_cast<std::size_t>(mean + 12.0 * std::sqrt(mean) + 30.0);
        const auto tails = poisson::upper_tails(count, mean);
        ASSERT_EQ(tails.size(), count);
        for (std::size_t n = 0; n < count; ++n) {
            const double ref = testing::f_reference(n, std::sqrt(mean)) * mean;
            EXPECT_NEAR(tails[n], ref, 1e-12 * ref + 1e-290) << "n=" << n << " mean=" << mean;
        }
    }
}

TEST(PoissonTail, NonincreasingAndBounded) {
    for (double mean : {0.3, 12.0, 400.0}) {
        const auto tails = poisson::upper_tails(600, mean);
        for (std::size_t n = 0; n < tails.size(); ++n) {
            EXPECT_GE(tails[n], 0.0);
            EXPECT_LE(tails[n], 1.0);
            if (n > 0) EXPECT_LE(tails[n], tails[n - 1]);
        }
    }
}

TEST(PoissonTail, ZeroMeanHasNoTail) {
    EXPECT_EQ(poisson::upper_tail(0, 0.0), 0.0);
    EXPECT_EQ(poisson::pmf(0, 0.0), 1.0);
    EXPECT_EQ(poisson::pmf(3, 0.0), 0.0);
}

TEST(PoissonTail, SingleValueAgreesWithVector) {
    const auto tails = poisson::upper_tails(400, 150.0);
    for (std::size_t n : {0u, 10u, 149u, 150u, 151u, 399u}) {
        EXPECT_EQ(poisson::upper_tail(n, 150.0), tails[n]);
    }
}

TEST(PoissonTail, RejectsNegativeMean) {
    EXPECT_THROW(poisson::upper_tail(1, -0.5), DomainError);
    EXPECT_THROW(poisson::pmf(1, std::nan("")), DomainError);
}

} // namespace
} // namespace mescorr
