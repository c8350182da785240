#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include <gridzeta/exact_series.hpp>
#include <gridzeta/oracles.hpp>
#include <gridzeta/surface.hpp>

#include "test_support.hpp"

using namespace gridzeta;
using gridzeta::testing::generator;
using gridzeta::testing::rel_diff;

TEST(Quadrature, KnownIntegrals)
{
    const quad::quadrature_options opts{1e-13, 1e-13, 2000};
    EXPECT_NEAR(quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI, opts).value, 2.0, 1e-13);
    EXPECT_NEAR(quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, opts).value, 2.0 / 3.0, 1e-12);
    const complex z = quad::integrate([](double x) { return std::exp(complex(0.0, x)); }, 0.0, M_PI / 2.0, opts).value;
    EXPECT_LT(std::abs(z - complex(1.0, 1.0)), 1e-13);
}

TEST(Quadrature, ReportsUnmetTolerance)
{
    const quad::quadrature_options opts{1e-14, 1e-14, 3};
    EXPECT_THROW(quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts), precision_error);
}

TEST(Quadrature, PeriodicMeanIsSpectral)
{
    // mean of 1 / (2 - cos x) = 1 / sqrt(3)
    EXPECT_NEAR(quad::periodic_mean([](double x) { return 1.0 / (2.0 - std::cos(x)); }, 64), 1.0 / std::sqrt(3.0),
                1e-15);
}

TEST(TorusIntegral, ZeroAtOrigin)
{
    EXPECT_EQ(oracles::log_det_torus_quadrature(0.0), complex(0.0));
    EXPECT_EQ(oracles::zeta_via_quadrature(0.0), complex(1.0));
}

TEST(TorusIntegral, IteratedRuleMatchesOneDimensionalForm)
{
    generator gen(31);
    for (int i = 0; i < 10; ++i) {
        const complex u = gen.in_omega(0.03);
        EXPECT_LT(std::abs(oracles::log_det_torus_quadrature(u) - oracles::log_det_1d_quadrature(u)), 1e-9) << u;
    }
}

TEST(TorusIntegral, TrapezoidMatchesAdaptiveOnRealAxis)
{
    for (double u : {-0.3, -0.1, 0.05, 0.2, 0.32}) {
        EXPECT_LT(std::abs(oracles::log_det_torus_trapezoid(u, 128) - oracles::log_det_torus_quadrature(u)), 1e-10)
            << u;
    }
}

TEST(TorusIntegral, MatchesSeriesNearZero)
{
    const exact::exact_series tl = exact::trlog_series(20);
    for (double u : {0.02, 0.05, -0.08}) {
        double acc = 0.0;
        for (std::size_t i = tl.order() + 1; i-- > 0;) {
            acc = acc * u + tl[i].convert_to<double>();
        }
        EXPECT_NEAR(oracles::log_det_torus_quadrature(u).real(), acc, 1e-12) << u;
    }
}

TEST(TorusIntegral, OutsideOmegaIsRejected)
{
    EXPECT_THROW(oracles::log_det_torus_quadrature(0.7), domain_error);
    EXPECT_THROW(oracles::zeta_via_quadrature(1.0), pole_error);
}

TEST(ZintIdentity, NineteenValues)
{
    for (int i = -9; i <= 9; ++i) {
        EXPECT_LT(oracles::zint_identity_residual(i / 10.0), 1e-10) << i;
    }
    EXPECT_THROW(oracles::zint_identity_residual(1.0), domain_error);
}

TEST(Walks, ClosedWalksAreSquaredCentralBinomials)
{
    for (unsigned k = 0; k <= 12u; ++k) {
        EXPECT_EQ(oracles::closed_walk_count_dp(k), exact::closed_walk_moment(k)) << k;
    }
    EXPECT_THROW(oracles::closed_walk_count_dp(33), domain_error);
}

TEST(Walks, GeodesicsMatchSeries)
{
    const auto ser = exact::geodesic_counts_from_series(14);
    for (unsigned m = 1; m <= 14u; ++m) {
        EXPECT_EQ(oracles::geodesic_count_dp(m), ser[m - 1u].second) << m;
    }
    EXPECT_EQ(oracles::geodesic_count_dp(4), 8);
    EXPECT_EQ(oracles::geodesic_count_dp(6), 24);
    EXPECT_EQ(oracles::geodesic_count_dp(8), 216);
    EXPECT_THROW(oracles::geodesic_count_dp(0), domain_error);
}

TEST(Walks, PrimitiveClassesSumToGeodesics)
{
    const auto ser = exact::geodesic_counts_from_series(12);
    for (unsigned m = 1; m <= 12u; ++m) {
        exact::big_int sum = 0;
        for (unsigned l = 1; l <= m; ++l) {
            if (m % l == 0u) {
                sum += exact::big_int(l) * oracles::primitive_class_count(l, true);
            }
        }
        EXPECT_EQ(sum, ser[m - 1u].second) << m;
    }
}

TEST(Walks, PrimitiveClassCounts)
{
    EXPECT_EQ(oracles::primitive_class_count(4, true), 2u);
    EXPECT_EQ(oracles::primitive_class_count(8, true), 26u);
    // every class on the grid differs from its reverse
    for (unsigned m = 4; m <= 12u; m += 2) {
        EXPECT_EQ(oracles::primitive_class_count(m, true), 2u * oracles::primitive_class_count(m, false)) << m;
    }
}
