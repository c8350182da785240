#include <chrono>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <gridzeta/oracles.hpp>
#include <gridzeta/special_functions.hpp>
#include <gridzeta/surface.hpp>

#include "test_support.hpp"

using namespace gridzeta;
using gridzeta::testing::generator;
using gridzeta::testing::rel_diff;

namespace
{

// The integrand of F: (1 - theta_3(t^2)^2 theta_4(t^2)^4) / t.
complex f_integrand(complex t)
{
    const complex q = t * t;
    const complex th3 = sf::theta3(q), th4 = sf::theta4(q);
    const complex th4sq = th4 * th4;
    return (1.0 - th3 * th3 * th4sq * th4sq) / t;
}

// 25 points spread over Omega: the real segment, the imaginary axis, both
// sides of the slits, and a random cloud.
std::vector<complex> omega_sample()
{
    std::vector<complex> pts = {0.1,
                                -0.25,
                                0.32,
                                {0.0, 0.2},
                                {0.0, -0.5},
                                {0.45, 0.01},
                                {0.45, -0.01},
                                {-0.5, 0.02},
                                {0.2, 0.3},
                                {-0.3, -0.35}};
    generator gen(41);
    while (pts.size() < 25u) {
        pts.push_back(gen.in_omega(0.03));
    }
    return pts;
}

}

TEST(SurfacePoint, Validation)
{
    EXPECT_NO_THROW(surface::surface_point::origin());
    EXPECT_THROW(surface::surface_point(0.1, 0.0), domain_error);
    EXPECT_THROW(surface::surface_point(0.1, 0.3), domain_error);
    EXPECT_THROW(surface::surface_point(0.1, 1.0), domain_error);
    const complex t = sf::nome_t_from_u(0.1);
    EXPECT_NO_THROW(surface::surface_point(0.1, t));
}

TEST(SurfacePoint, PrincipalLiftSatisfiesRelation)
{
    for (complex u : omega_sample()) {
        EXPECT_LT(surface::relation_residual(surface::lift_principal(u)), surface::relation_tolerance) << u;
    }
    EXPECT_THROW(surface::lift_principal(0.6), domain_error);
}

TEST(F, DerivativeMatchesIntegrand)
{
    generator gen(42);
    for (int i = 0; i < 20; ++i) {
        const complex t = gen.in_disk(0.85);
        const double h = 1e-4;
        // fourth-order central difference
        const complex d = (-surface::F_eval(t + 2.0 * h) + 8.0 * surface::F_eval(t + h) -
                           8.0 * surface::F_eval(t - h) + surface::F_eval(t - 2.0 * h)) /
                          (12.0 * h);
        EXPECT_LT(std::abs(d - f_integrand(t)), 1e-7 * std::max(1.0, std::abs(d))) << t;
    }
}

TEST(F, RealHighPrecisionAgreesWithDouble)
{
    using mp = boost::multiprecision::cpp_bin_float_50;
    for (const char *s : {"0.1", "0.5", "-0.8"}) {
        const double x = std::stod(s);
        EXPECT_NEAR(static_cast<double>(surface::F_eval_real(mp(s))), surface::F_eval(x).real(),
                    1e-14 * std::max(1.0, std::abs(surface::F_eval(x).real())));
    }
    EXPECT_THROW(surface::F_eval(0.97), precision_error);
}

TEST(Zeta, OriginAndSymmetries)
{
    EXPECT_EQ(surface::zeta_tilde(surface::surface_point::origin()), complex(1.0));
    for (double u : {0.05, 0.2, 0.3}) {
        const complex a = surface::zeta_tilde(surface::lift_principal(u));
        const complex b = surface::zeta_tilde(surface::lift_principal(-u));
        EXPECT_LT(std::abs(a.imag()), 1e-15);
        EXPECT_LT(rel_diff(a, b), 1e-14);
    }
    generator gen(43);
    for (int i = 0; i < 10; ++i) {
        const complex u = gen.in_omega();
        const complex a = surface::zeta_tilde(surface::lift_principal(u));
        const complex b = surface::zeta_tilde(surface::lift_principal(std::conj(u)));
        EXPECT_LT(rel_diff(std::conj(a), b), 1e-13) << u;
    }
}

TEST(Zeta, ThetaRouteMatchesQuadratureOn25Points)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (complex u : omega_sample()) {
        const complex a = surface::zeta_tilde(surface::lift_principal(u));
        const complex b = oracles::zeta_via_quadrature(u, {1e-10, 1e-10, 2000});
        EXPECT_LT(std::abs(a - b) / std::abs(a), 1e-8) << u;
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 60.0);
}

TEST(Zeta, LogFormMatches)
{
    for (complex u : omega_sample()) {
        const auto s = surface::lift_principal(u);
        EXPECT_LT(std::abs(std::exp(surface::log_zeta_tilde(s)) - surface::zeta_tilde(s)),
                  1e-13 * std::abs(surface::zeta_tilde(s)));
    }
}

TEST(Zeta, RealLogInHighPrecision)
{
    using mp = boost::multiprecision::cpp_bin_float_100;
    const mp v = surface::log_zeta_real(mp("0.1"));
    EXPECT_NEAR(static_cast<double>(v), surface::log_zeta_tilde(surface::lift_principal(0.1)).real(), 1e-17);
}

TEST(FunctionalEquation, PrincipalAndOtherSheets)
{
    std::size_t checked = 0, non_principal = 0;
    for (complex u : {complex(0.15), complex(-0.2, 0.1), complex(0.05, 0.3), complex(0.25, -0.05)}) {
        for (const auto &s : surface::enumerate_sheets(u, 1)) {
            EXPECT_LT(surface::functional_equation_residual(s.point), 1e-10) << u;
            ++checked;
            non_principal += s.word.empty() ? 0u : 1u;
        }
    }
    EXPECT_GE(checked, 20u);
    EXPECT_GE(non_principal, 3u);
}

TEST(Involution, ConjugatesUAndFixesT)
{
    const auto s = surface::lift_principal(complex(0.1, 0.05));
    const auto i = surface::involution(s);
    EXPECT_EQ(i.t(), s.t());
    EXPECT_LT(std::abs(i.u() * s.u() * 3.0 - 1.0), 1e-15);
    EXPECT_THROW(surface::involution(surface::surface_point::origin()), domain_error);
}

TEST(Deck, GeneratorsLieInTheGroup)
{
    for (const auto &g : surface::deck_generators()) {
        EXPECT_TRUE(surface::in_deck_group(g));
        EXPECT_TRUE(surface::in_deck_group(g.inverse()));
    }
    EXPECT_FALSE(surface::in_deck_group({1, 2, 0, 1}));
    generator gen(44);
    for (int i = 0; i < 20; ++i) {
        surface::deck_word w;
        for (int j = 0; j < 5; ++j) {
            w.push_back({static_cast<unsigned>(gen.integer(1, 3)), gen.integer(-2, 2)});
        }
        EXPECT_TRUE(surface::in_deck_group(surface::word_matrix(w)));
    }
}

TEST(Deck, FirstGeneratorFixesT)
{
    const auto s = surface::lift_principal(0.2);
    const auto m = surface::deck_transform(s, {{1, 1}});
    EXPECT_LT(std::abs(m.t() - s.t()), 1e-15);
}

TEST(Deck, TransformsStayOnTheSurface)
{
    generator gen(45);
    for (int i = 0; i < 10; ++i) {
        const complex u = gen.in_omega(0.05);
        for (const auto &sv : surface::enumerate_sheets(u, 2)) {
            EXPECT_LT(surface::relation_residual(sv.point), surface::relation_tolerance) << u;
            EXPECT_EQ(sv.point.u(), u);
        }
    }
}

TEST(Sheets, DepthTwoGivesManyValues)
{
    const auto sheets = surface::enumerate_sheets(0.15, 2);
    std::vector<complex> values;
    for (const auto &s : sheets) {
        values.push_back(s.zeta);
        EXPECT_LT(surface::relation_residual(s.point), 1e-10);
    }
    EXPECT_GE(surface::count_distinct(values), 5u);
    EXPECT_EQ(surface::enumerate_sheets(0.15, 0).size(), 1u);
    EXPECT_EQ(surface::reduced_words(2).size(), 1u + 6u + 30u);
}
