#include <cmath>
#include <complex>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <gridzeta/special_functions.hpp>

#include "test_support.hpp"

using namespace gridzeta;
using gridzeta::testing::generator;
using gridzeta::testing::rel_diff;

namespace
{

// K(k) = int_0^{pi/2} dw / sqrt(1 - k^2 sin^2 w), real k only.
double k_by_quadrature(double k)
{
    auto f = [k](double w) {
        const double s = std::sin(w);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, M_PI / 2.0, 20, 1e-15);
}

// Jacobi triple product: theta_3(q) = prod (1 - q^(2n)) (1 + q^(2n-1))^2.
complex theta3_product(complex q)
{
    complex p = 1.0;
    for (int n = 1; n < 400; ++n) {
        const complex a = std::pow(q, 2 * n - 1);
        p *= (1.0 - a * q) * (1.0 + a) * (1.0 + a);
    }
    return p;
}

// theta_2^2(t) = 4t (sum_{n>=0} t^(2n(n+1)))^2.
complex theta2_sq_series(complex t)
{
    complex s = 0.0;
    for (int n = 0; n < 40; ++n) {
        s += std::pow(t, 2 * n * (n + 1));
    }
    return 4.0 * t * s * s;
}

}

TEST(Agm, KnownValue)
{
    // agm(1, sqrt 2) = 1/G, G = 0.8346... Gauss's constant
    EXPECT_NEAR(sf::agm(1.0, std::sqrt(2.0)), 1.1981402347355922074, 1e-15);
    EXPECT_DOUBLE_EQ(sf::agm(2.0, 2.0), 2.0);
}

TEST(Agm, RejectsZeroAndOppositeArguments)
{
    EXPECT_THROW(sf::agm(0.0, 1.0), domain_error);
    EXPECT_THROW(sf::agm(complex(1.0), complex(-2.0)), domain_error);
}

TEST(EllipticK, MatchesQuadratureOnHundredRealModuli)
{
    for (int i = 0; i < 100; ++i) {
        const double k = -0.99 + 1.98 * i / 99.0;
        const double a = sf::elliptic_k(k);
        EXPECT_LT(std::abs(a - k_by_quadrature(k)), 1e-12) << "k = " << k;
        EXPECT_LT(std::abs(a - boost::math::ellint_1(k)), 1e-12) << "k = " << k;
    }
}

TEST(EllipticK, ValueAtZeroIsHalfPi)
{
    EXPECT_DOUBLE_EQ(sf::elliptic_k(0.0), M_PI / 2.0);
}

TEST(EllipticK, PoleAndCut)
{
    EXPECT_THROW(sf::elliptic_k(1.0), pole_error);
    EXPECT_THROW(sf::elliptic_k(complex(-1.0)), pole_error);
    EXPECT_THROW(sf::elliptic_k(complex(1.5)), branch_error);
}

TEST(EllipticK, EvenAndConjugateSymmetric)
{
    generator gen(11);
    for (int i = 0; i < 25; ++i) {
        const complex k = gen.in_disk(0.95);
        EXPECT_LT(rel_diff(sf::elliptic_k(k), sf::elliptic_k(-k)), 1e-14);
        EXPECT_LT(rel_diff(sf::elliptic_k(std::conj(k)), std::conj(sf::elliptic_k(k))), 1e-14);
    }
}

TEST(Theta, Theta3MatchesTripleProduct)
{
    generator gen(12);
    for (int i = 0; i < 25; ++i) {
        const complex q = gen.in_disk(0.85);
        EXPECT_LT(rel_diff(sf::theta3(q), theta3_product(q)), 1e-13) << q;
    }
}

TEST(Theta, Theta2SquaredProductMatchesSeries)
{
    generator gen(13);
    for (int i = 0; i < 25; ++i) {
        const complex t = gen.in_disk(0.9);
        EXPECT_LT(rel_diff(sf::theta2_sq(t), theta2_sq_series(t)), 1e-12) << t;
    }
}

TEST(Theta, JacobiIdentity)
{
    generator gen(14);
    for (int i = 0; i < 25; ++i) {
        const complex t = gen.in_disk(0.8);
        const complex q = t * t;
        const complex th2sq = sf::theta2_sq(t), th3 = sf::theta3(q), th4 = sf::theta4(q);
        EXPECT_LT(std::abs(th2sq * th2sq + std::pow(th4, 4) - std::pow(th3, 4)), 1e-12) << t;
    }
}

TEST(Theta, RejectsUnitNome)
{
    EXPECT_THROW(sf::theta3(1.0), domain_error);
    EXPECT_THROW(sf::theta2_sq(complex(0.0, 1.0)), domain_error);
}

TEST(Nome, KEqualsHalfPiTheta3Squared)
{
    generator gen(15);
    for (int i = 0; i < 25; ++i) {
        const complex k = i < 10 ? complex(-0.95 + 1.9 * i / 9.0) : gen.in_disk(0.9);
        const complex t = sf::nome_t_from_modulus(k);
        const complex th3 = sf::theta3(t * t);
        EXPECT_LT(std::abs(sf::elliptic_k(k) - M_PI / 2.0 * th3 * th3), 1e-10) << k;
    }
}

TEST(Nome, InvertsModulus)
{
    generator gen(16);
    for (int i = 0; i < 50; ++i) {
        const complex k = gen.in_disk(0.97);
        const complex t = sf::nome_t_from_modulus(k);
        EXPECT_LT(std::abs(sf::modulus_from_t(t) - k), 1e-12) << k;
    }
}

TEST(Nome, OddAndTangentToIdentity)
{
    generator gen(17);
    for (int i = 0; i < 25; ++i) {
        const complex u = gen.in_omega();
        EXPECT_LT(std::abs(sf::nome_t_from_u(-u) + sf::nome_t_from_u(u)), 1e-14) << u;
        EXPECT_LT(std::abs(sf::nome_t_from_u(std::conj(u)) - std::conj(sf::nome_t_from_u(u))), 1e-14) << u;
    }
    EXPECT_EQ(sf::nome_t_from_u(0.0), complex(0.0));
    for (double u : {1e-3, 1e-5, 1e-7}) {
        // t = u + u^3 + 7u^5 + O(u^7)
        EXPECT_NEAR(sf::nome_t_from_u(u).real() / u, 1.0 + u * u + 7.0 * u * u * u * u, 1e-14);
    }
}

TEST(Nome, NoJumpAcrossImaginaryAxis)
{
    for (double y : {0.1, 0.3, 0.5}) {
        const complex left = sf::nome_t_from_u(complex(-1e-9, y)), right = sf::nome_t_from_u(complex(1e-9, y));
        EXPECT_LT(std::abs(left - right), 1e-7) << y;
    }
}

TEST(Nome, RealPathInHighPrecision)
{
    using mp = boost::multiprecision::cpp_bin_float_50;
    const mp u("0.2");
    const mp t = sf::nome_t_from_u_real(u);
    const mp k = sf::modulus_from_t(t);
    EXPECT_LT(boost::multiprecision::abs(k - sf::modulus_from_u(u)), mp("1e-45"));
    EXPECT_NEAR(static_cast<double>(t), sf::nome_t_from_u(0.2).real(), 1e-15);
    EXPECT_THROW(sf::nome_t_from_u_real(mp("0.4")), domain_error);
}

TEST(Nome, OutsideOmegaIsRejected)
{
    EXPECT_THROW(sf::nome_t_from_u(0.6), domain_error);
    EXPECT_THROW(sf::nome_t_from_u(0.4), domain_error);
    EXPECT_THROW(sf::modulus_from_u(complex(0.0, 1.0 / std::sqrt(3.0))), pole_error);
}

TEST(UPair, VietaAndModulus)
{
    generator gen(18);
    for (int i = 0; i < 25; ++i) {
        const complex t = gen.in_disk(0.9);
        const auto p = sf::u_pair_from_t(t);
        EXPECT_LT(std::abs(p.plus * p.minus - 1.0 / 3.0), 1e-10) << t;
        const complex k = sf::modulus_from_t(t);
        EXPECT_LT(std::abs(sf::modulus_from_u(p.plus) - k), 1e-10 * std::max(1.0, std::abs(k)));
        EXPECT_LT(std::abs(sf::modulus_from_u(p.minus) - k), 1e-10 * std::max(1.0, std::abs(k)));
    }
    EXPECT_THROW(sf::u_pair_from_t(complex(0.0)), domain_error);
}

TEST(UPair, MinusRootIsThePrincipalPreimage)
{
    generator gen(19);
    for (int i = 0; i < 25; ++i) {
        const complex u = gen.in_omega();
        if (std::abs(u) < 0.05) {
            continue;
        }
        EXPECT_LT(std::abs(sf::u_pair_from_t(sf::nome_t_from_u(u)).minus - u), 1e-9) << u;
    }
}
