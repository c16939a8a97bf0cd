#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssrelay/errors.hpp"
#include "ssrelay/specfun.hpp"

namespace sf = ssrelay::specfun;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

TEST(EulerGamma, MatchesHarmonicLimit) {
    // H_n - ln n - 1/(2n) + 1/(12 n^2) converges like n^-4.
    const int n = 100000;
    long double h = 0.0L;
    for (int k = n; k >= 1; --k) h += 1.0L / k;
    const long double nd = n;
    const long double est = h - std::log(nd) - 1.0L / (2 * nd) + 1.0L / (12 * nd * nd);
    EXPECT_NEAR(sf::euler_gamma, static_cast<double>(est), 1e-13);
}

TEST(ExpIntegralE1, KnownValueAtOne) {
    EXPECT_NEAR(sf::exp_integral_e1(1.0), 0.21938393439552027, 1e-15);
}

TEST(ExpIntegralE1, MatchesQuadratureAndStdExpint) {
    for (double x : {1e-3, 0.1, 0.5, 0.99, 1.0, 1.01, 2.0, 5.0, 10.0, 30.0}) {
        const double quad = oracle::integrate_to_inf([](double t) { return std::exp(-t) / t; }, x);
        const double stdlib = -std::expint(-x);
        const double got = sf::exp_integral_e1(x);
        EXPECT_LE(rel(got, quad), 1e-12) << "x=" << x;
        EXPECT_LE(rel(got, stdlib), 1e-12) << "x=" << x;
    }
}

TEST(ExpIntegralE1, SmallArgumentTracksLogAsymptote) {
    double prev = 1.0;
    for (double x : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double asym = -sf::euler_gamma - std::log(x);
        const double dev = rel(sf::exp_integral_e1(x), asym);
        EXPECT_LT(dev, prev);
        prev = dev;
    }
    EXPECT_LT(prev, 1e-7);
}

TEST(ExpIntegralE1, LargeArgumentBracket) {
    const double x = 50.0;
    const double v = sf::exp_integral_e1(x);
    EXPECT_GT(v, std::exp(-x) / (x + 1.0));
    EXPECT_LT(v, std::exp(-x) / x);
}

TEST(ExpIntegralE1, DerivativeIsMinusExpOverX) {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double h = 1e-5 * x;
        const double fd = (sf::exp_integral_e1(x + h) - sf::exp_integral_e1(x - h)) / (2 * h);
        EXPECT_LE(rel(fd, -std::exp(-x) / x), 1e-6) << "x=" << x;
    }
}

TEST(ExpIntegralE1, StrictlyDecreasing) {
    double prev = std::numeric_limits<double>::infinity();
    for (double x = 1e-4; x < 100.0; x *= 1.3) {
        const double v = sf::exp_integral_e1(x);
        EXPECT_LT(v, prev);
        EXPECT_GT(v, 0.0);
        prev = v;
    }
}

TEST(ExpIntegralE1, RejectsNonPositive) {
    EXPECT_THROW(sf::exp_integral_e1(0.0), ssrelay::DomainError);
    EXPECT_THROW(sf::exp_integral_e1(-1.0), ssrelay::DomainError);
    EXPECT_THROW(sf::exp_integral_e1(std::nan("")), ssrelay::DomainError);
}

TEST(ExpScaledE1, StaysFiniteForLargeArgument) {
    for (double x : {1e2, 1e3, 1e6}) {
        const double v = sf::exp_scaled_e1(x);
        EXPECT_GT(v, 1.0 / (x + 1.0));
        EXPECT_LT(v, 1.0 / x);
    }
    EXPECT_LE(rel(sf::exp_scaled_e1(2.0), std::exp(2.0) * sf::exp_integral_e1(2.0)), 1e-14);
}

TEST(TricomiPsi, ValueAtOne) {
    EXPECT_NEAR(sf::tricomi_psi_1_0(1.0), 1.0 - std::numbers::e * 0.21938393439552027, 1e-13);
    EXPECT_NEAR(sf::tricomi_psi_1_0(1.0), 0.40365263767680, 1e-13);
}

TEST(TricomiPsi, TendsToOneAtOrigin) {
    EXPECT_NEAR(sf::tricomi_psi_1_0(1e-12), 1.0, 1e-10);
}

TEST(TricomiPsi, MatchesDefiningIntegralOnLogGrid) {
    // Psi(1, 0; z) = int_0^inf e^(-z x) (1 + x)^-2 dx
    for (double z = 1e-3; z <= 10.0 * 1.0001; z *= std::pow(10.0, 0.25)) {
        const double quad = oracle::integrate_to_inf(
            [z](double x) { return std::exp(-z * x) / ((1.0 + x) * (1.0 + x)); }, 0.0);
        EXPECT_NEAR(sf::tricomi_psi_1_0(z), quad, 1e-8) << "z=" << z;
    }
}

TEST(TricomiPsi, ScaledIntegralFormAtHalf) {
    // (1/a) int e^(-s x) (x + 1/a)^-2 dx with s/a = 0.5.
    const double a = 4.0, s = 2.0;
    const double quad = oracle::integrate_to_inf(
        [a, s](double x) { return std::exp(-s * x) / ((x + 1.0 / a) * (x + 1.0 / a)); }, 0.0) / a;
    EXPECT_NEAR(sf::tricomi_psi_1_0(0.5), quad, 1e-8);
}

TEST(TricomiPsi, StrictlyDecreasingInUnitInterval) {
    double prev = 1.0;
    for (double z = 1e-3; z < 1e3; z *= 1.5) {
        const double v = sf::tricomi_psi_1_0(z);
        EXPECT_LT(v, prev);
        EXPECT_GT(v, 0.0);
        prev = v;
    }
}

TEST(TricomiPsi, RejectsNonPositive) {
    EXPECT_THROW(sf::tricomi_psi_1_0(0.0), ssrelay::DomainError);
    EXPECT_THROW(sf::tricomi_psi_1_0(-2.0), ssrelay::DomainError);
}

TEST(TricomiPsiComplex, MatchesHighPrecisionReference) {
    // mpmath hyperu(1, 0, z) at 30 digits.
    struct Case {
        std::complex<double> z, want;
    };
    const Case cases[] = {
        {{1, 2}, {0.22248565634712119, -0.18657038785455282}},
        {{-3, 4}, {-0.051401262950795089, -0.21511782604080227}},
        {{-10, 0.5}, {-0.13020426931158669, -0.010405274805007659}},
        {{0.3, -7}, {0.038586983205811371, 0.12699283250143054}},
        {{25, 30}, {0.016551320924538427, -0.018434216159597795}},
        {{-50, 1}, {-0.020843188435018288, -0.00043504213646966646}},
    };
    for (const auto& c : cases) {
        const auto got = sf::tricomi_psi_1_0(c.z);
        EXPECT_LE(std::abs(got - c.want) / std::abs(c.want), 1e-12) << c.z;
    }
}

TEST(TricomiPsiComplex, AgreesWithRealBranchAndConjugates) {
    for (double x : {0.01, 0.7, 1.5, 3.0, 40.0}) {
        const auto z = sf::tricomi_psi_1_0(std::complex<double>{x, 0.0});
        EXPECT_NEAR(z.real(), sf::tricomi_psi_1_0(x), 1e-14);
        EXPECT_NEAR(z.imag(), 0.0, 1e-14);
        const std::complex<double> w{-x, 2.0 * x};
        const auto a = sf::tricomi_psi_1_0(w);
        const auto b = sf::tricomi_psi_1_0(std::conj(w));
        EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-13 * std::abs(a));
    }
}

TEST(Hyp2f1, KnownValues) {
    EXPECT_DOUBLE_EQ(sf::hyp2f1_113(0.0), 1.0);
    EXPECT_NEAR(sf::hyp2f1_113(0.5), 1.2274112777602188, 1e-13);
    EXPECT_NEAR(sf::hyp2f1_113(0.75), oracle::hyp2f1_113_series(0.75), 1e-12);
    EXPECT_NEAR(sf::hyp2f1_113(0.75), 1.434405012337875, 1e-12);
}

TEST(Hyp2f1, BranchesAgreeWithSeries) {
    for (double x = 0.01; x <= 0.9 + 1e-12; x += 0.01) {
        EXPECT_NEAR(sf::hyp2f1_113(x), oracle::hyp2f1_113_series(x), 1e-10) << "x=" << x;
    }
    const double t = sf::kHyp2f1SeriesThreshold;
    EXPECT_NEAR(sf::hyp2f1_113(std::nextafter(t, 0.0)), sf::hyp2f1_113(t), 1e-14);
}

TEST(Hyp2f1, LimitAtOneIsTwo) {
    EXPECT_NEAR(sf::hyp2f1_113(1.0 - 1e-12), 2.0, 1e-9);
    EXPECT_LT(sf::hyp2f1_113(1.0 - 1e-12), 2.0);
}

TEST(Hyp2f1, IncreasingOnDomain) {
    double prev = 0.0;
    for (double x = 0.0; x < 1.0; x += 0.003) {
        const double v = sf::hyp2f1_113(x);
        EXPECT_GT(v, prev);
        EXPECT_GE(v, 1.0);
        EXPECT_LT(v, 2.0);
        prev = v;
    }
}

TEST(Hyp2f1, RejectsOutsideUnitInterval) {
    EXPECT_THROW(sf::hyp2f1_113(-0.1), ssrelay::DomainError);
    EXPECT_THROW(sf::hyp2f1_113(1.0), ssrelay::DomainError);
    EXPECT_THROW(sf::hyp2f1_113(1.5), ssrelay::DomainError);
}

TEST(BesselJ1, SmallArguments) {
    EXPECT_EQ(sf::bessel_j1(0.0), 0.0);
    EXPECT_NEAR(sf::bessel_j1(1.0), 0.44005058574493, 1e-13);
    EXPECT_LT(std::abs(sf::bessel_j1(3.8317059702)), 1e-9);
}

TEST(BesselJ1, MatchesAscendingSeries) {
    for (double x = 0.05; x <= 20.0; x += 0.37) {
        EXPECT_NEAR(sf::bessel_j1(x), oracle::bessel_j1_series(x), 1e-12) << "x=" << x;
    }
}

TEST(BesselJ1, LargeArgumentsMatchReference) {
    // mpmath besselj(1, x).
    EXPECT_NEAR(sf::bessel_j1(50.0), -0.097511828125175138, 1e-12);
    EXPECT_NEAR(sf::bessel_j1(100.0), -0.077145352014112158, 1e-12);
    EXPECT_NEAR(sf::bessel_j1(250.0), -0.04326903841033075, 1e-12);
    EXPECT_NEAR(sf::bessel_j1(500.0), 0.010472613470372293, 1e-12);
}

TEST(BesselJ1Zero, MatchesReference) {
    EXPECT_NEAR(sf::bessel_j1_zero(1), 3.8317059702075123, 1e-13);
    EXPECT_NEAR(sf::bessel_j1_zero(2), 7.0155866698156188, 1e-13);
    EXPECT_NEAR(sf::bessel_j1_zero(10), 32.189679910974404, 1e-12);
    EXPECT_NEAR(sf::bessel_j1_zero(50), 157.8626554019303, 1e-11);
    EXPECT_NEAR(sf::bessel_j1_zero(200), 629.10333279552104, 1e-10);
    for (int n = 1; n <= 200; n += 7) {
        // Newton step |J1/J1'| = |J1/J0| at a zero is the root error.
        const double z = sf::bessel_j1_zero(n);
        EXPECT_LT(std::abs(sf::bessel_j1(z) / std::cyl_bessel_j(0.0, z)), 1e-13 * z);
        EXPECT_LT(sf::bessel_j1_zero(n), sf::bessel_j1_zero(n + 1));
    }
    EXPECT_THROW(sf::bessel_j1_zero(0), ssrelay::DomainError);
}

}  // namespace
