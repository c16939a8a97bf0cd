#include "ssrelay/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ssrelay/errors.hpp"

namespace ssrelay::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

template <typename T>
T e1_series(T z) {
    // E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
    T term = -z;  // (-z)^k / k!
    T sum = term;
    for (int k = 2; k < 500; ++k) {
        term *= -z / static_cast<double>(k);
        const T contrib = term / static_cast<double>(k);
        sum += contrib;
        if (std::abs(contrib) <= kEps * std::abs(sum)) break;
    }
    return -euler_gamma - std::log(z) - sum;
}

// Continued fraction
//   e^z E1(z) = 1 / (z + 1 - T),  T = 1/(z+3 - 4/(z+5 - 9/(z+7 - ...)))
// Returning T separately lets Psi(1,0;z) = (1 - T) / (z + 1 - T) avoid the
// cancellation in 1 - z e^z E1(z) for large |z|.
template <typename T>
T e1_cf_tail(T z, int max_terms) {
    T f = kTiny;
    T c = f;
    T d = 0.0;
    for (int n = 1; n <= max_terms; ++n) {
        const double a = (n == 1) ? 1.0 : -static_cast<double>(n) * n;
        const T b = z + static_cast<double>(2 * n + 1);
        d = b + a * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + a / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = T(1.0) / d;
        const T delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) <= kEps) break;
    }
    return f;
}

// Asymptotic e^z E1(z) ~ sum_k (-1)^k k! / z^{k+1}, truncated at the smallest
// term. Valid for |arg z| < 3pi/2; used far out on the left half plane where
// the neglected Stokes contribution is O(e^{Re z}).
std::complex<double> e1_scaled_asymptotic(std::complex<double> z) {
    std::complex<double> term = 1.0 / z;
    std::complex<double> sum = term;
    double prev = std::abs(term);
    for (int k = 1; k < 200; ++k) {
        const std::complex<double> next = term * (-static_cast<double>(k) / z);
        const double mag = std::abs(next);
        if (mag >= prev) break;
        term = next;
        sum += term;
        prev = mag;
        if (mag <= kEps * std::abs(sum)) break;
    }
    return sum;
}

enum class Region { series, continued_fraction, asymptotic };

Region classify(std::complex<double> z) {
    const double r = std::abs(z);
    if (r <= 2.0) return Region::series;
    if (z.real() >= 0.0) return Region::continued_fraction;
    if (z.real() <= -40.0) return Region::asymptotic;
    // Left half plane, moderate modulus: the continued fraction slows down
    // near the cut, where the series is well conditioned instead.
    const double angle = std::abs(std::arg(z));
    if (angle < 0.85 * std::numbers::pi) return Region::continued_fraction;
    return Region::series;
}

constexpr int kCfTerms = 5000;

void require_positive(double x, const char* name) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(name) + ": argument must be > 0, got " +
                          std::to_string(x));
    }
}

}  // namespace

double exp_integral_e1(double x) {
    require_positive(x, "exp_integral_e1");
    if (x < 1.0) return e1_series(x);
    return std::exp(-x) / (x + 1.0 - e1_cf_tail(x, kCfTerms));
}

double exp_scaled_e1(double x) {
    require_positive(x, "exp_scaled_e1");
    if (x < 1.0) return std::exp(x) * e1_series(x);
    return 1.0 / (x + 1.0 - e1_cf_tail(x, kCfTerms));
}

std::complex<double> exp_scaled_e1(std::complex<double> z) {
    if (z == 0.0) throw DomainError("exp_scaled_e1: z = 0 is a branch point");
    switch (classify(z)) {
        case Region::series:
            return std::exp(z) * e1_series(z);
        case Region::continued_fraction:
            return 1.0 / (z + 1.0 - e1_cf_tail(z, kCfTerms));
        case Region::asymptotic:
            return e1_scaled_asymptotic(z);
    }
    return {};
}

double tricomi_psi_1_0(double z) {
    require_positive(z, "tricomi_psi_1_0");
    if (z < 1.0) return 1.0 - z * std::exp(z) * e1_series(z);
    const double tail = e1_cf_tail(z, kCfTerms);
    return (1.0 - tail) / (z + 1.0 - tail);
}

std::complex<double> tricomi_psi_1_0(std::complex<double> z) {
    if (z == 0.0) return 1.0;
    switch (classify(z)) {
        case Region::series:
            return 1.0 - z * std::exp(z) * e1_series(z);
        case Region::continued_fraction: {
            const auto tail = e1_cf_tail(z, kCfTerms);
            return (1.0 - tail) / (z + 1.0 - tail);
        }
        case Region::asymptotic: {
            // 1 - z e^z E1(z) ~ sum_{k>=1} (-1)^{k+1} k! / z^k
            std::complex<double> term = 1.0 / z;
            std::complex<double> sum = term;
            double prev = std::abs(term);
            for (int k = 2; k < 200; ++k) {
                const auto next = term * (-static_cast<double>(k) / z);
                const double mag = std::abs(next);
                if (mag >= prev) break;
                term = next;
                sum += term;
                prev = mag;
                if (mag <= kEps * std::abs(sum)) break;
            }
            return sum;
        }
    }
    return {};
}

double hyp2f1_113(double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("hyp2f1_113: argument must lie in [0, 1), got " +
                          std::to_string(x));
    }
    if (x < kHyp2f1SeriesThreshold) {
        // sum_n 2 x^n / ((n+1)(n+2))
        double power = 1.0;
        double sum = 1.0;
        for (int n = 1; n < 100; ++n) {
            power *= x;
            const double term = 2.0 * power / ((n + 1.0) * (n + 2.0));
            sum += term;
            if (term <= kEps * sum) break;
        }
        return sum;
    }
    return 2.0 * (x + (1.0 - x) * std::log1p(-x)) / (x * x);
}

double bessel_j1(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("bessel_j1: argument must be >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    return std::cyl_bessel_j(1.0, x);
}

double bessel_j1_zero(int n) {
    if (n < 1) throw DomainError("bessel_j1_zero: index must be >= 1");
    // McMahon expansion, then Newton with J1' = J0 - J1/x.
    const double beta = (n + 0.25) * std::numbers::pi;
    const double mu = 4.0;
    double x = beta - (mu - 1.0) / (8.0 * beta) -
               4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * beta, 3));
    for (int it = 0; it < 20; ++it) {
        const double j1 = std::cyl_bessel_j(1.0, x);
        const double dj1 = std::cyl_bessel_j(0.0, x) - j1 / x;
        const double step = j1 / dj1;
        x -= step;
        if (std::abs(step) <= 4.0 * kEps * x) break;
    }
    return x;
}

}  // namespace ssrelay::specfun
