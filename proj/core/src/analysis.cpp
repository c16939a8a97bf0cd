#include "ssrelay/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ssrelay/errors.hpp"

namespace ssrelay::analysis {
namespace {

constexpr int kMaxLobes = 200;
constexpr double kHypSlack = 1e-12;

void check_shape(double a) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw DomainError("shape parameter must be finite and > 1, got " + std::to_string(a));
    }
}

void check_shapes(std::span<const double> shapes) {
    if (shapes.empty()) throw DomainError("at least one hop is required");
    for (double a : shapes) check_shape(a);
}

void check_hops(int hop_count) {
    if (hop_count < 2) throw DomainError("limit and gain formulas need K >= 2");
}

// 2F1(1,1;3;x) tolerating x a hair above 1 from rounding (value 2 there).
double hyp_at(double x) {
    if (x >= 1.0) {
        if (x - 1.0 > kHypSlack) {
            throw DomainError("hypergeometric argument " + std::to_string(x) + " above 1");
        }
        return 2.0;
    }
    return specfun::hyp2f1_113(std::max(x, 0.0));
}

// Wynn epsilon extrapolation of a sequence of partial sums; returns the
// deepest even-column entry.
double wynn_epsilon(std::span<const double> sums) {
    const std::size_t n = sums.size();
    std::vector<double> prev(n + 1, 0.0);  // column k-1
    std::vector<double> cur(sums.begin(), sums.end());  // column k
    double best = cur.back();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next(n - k);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double diff = cur[i + 1] - cur[i];
            if (diff == 0.0) return cur[i + 1];
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) best = cur.back();
    }
    return best;
}

}  // namespace

double hop_cdf(double gamma, double a) {
    check_shape(a);
    if (gamma < 0.0) throw DomainError("hop_cdf: gamma must be >= 0");
    return gamma / (gamma + a);
}

double hop_pdf(double gamma, double a) {
    check_shape(a);
    if (gamma < 0.0) return 0.0;
    const double r = gamma + a;
    return a / (r * r);
}

double mgf_inv_hop(double s, double a) {
    check_shape(a);
    return specfun::tricomi_psi_1_0(s / a);
}

double e2e_cdf(double gamma, std::span<const double> shapes, specfun::TalbotOptions options) {
    check_shapes(shapes);
    if (!(gamma > 0.0)) throw DomainError("e2e_cdf: gamma must be > 0");
    std::vector<double> a(shapes.begin(), shapes.end());
    const auto transform = [a](std::complex<double> s) {
        std::complex<double> prod = 1.0;
        for (double ak : a) prod *= specfun::tricomi_psi_1_0(s / ak);
        return prod;
    };
    // Pr{sum 1/gamma_k <= 1/gamma} is the survival function of gamma_e2e.
    return 1.0 - specfun::laplace_invert_cdf(transform, 1.0 / gamma, options);
}

double k2_argument(double gamma, double a1, double a2) {
    return (1.0 + (1.0 / a1 + 1.0 / a2) * gamma) / ((1.0 + gamma / a1) * (1.0 + gamma / a2));
}

double e2e_cdf_k2(double gamma, double a1, double a2) {
    check_shape(a1);
    check_shape(a2);
    if (gamma < 0.0) throw DomainError("e2e_cdf_k2: gamma must be >= 0");
    if (gamma == 0.0) return 0.0;
    const double survival =
        0.5 * hyp_at(k2_argument(gamma, a1, a2)) / ((1.0 + gamma / a1) * (1.0 + gamma / a2));
    return std::clamp(1.0 - survival, 0.0, 1.0);
}

double e2e_mgf(double s, std::span<const double> shapes) {
    check_shapes(shapes);
    if (!(s > 0.0)) throw DomainError("e2e_mgf: s must be > 0");

    // Substituting u = 2 x sqrt(s): 1 - int_0^inf J1(u) prod Psi(u^2 / (4 s a_k)) du.
    std::vector<double> scale;
    for (double a : shapes) scale.push_back(1.0 / (4.0 * s * a));
    const auto integrand = [&scale](double u) {
        double prod = specfun::bessel_j1(u);
        for (double c : scale) prod *= specfun::tricomi_psi_1_0(u * u * c);
        return prod;
    };

    // Past this point the hop factors decay like a power law and the lobe
    // sequence is smooth enough to extrapolate.
    const double a_max = *std::max_element(shapes.begin(), shapes.end());
    const double settle_u = 2.0 * std::sqrt(4.0 * s * a_max);

    using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
    std::vector<double> sums;
    double total = 0.0;
    double lo = 0.0;
    double last_est = 0.0;
    int agreeing = 0;
    for (int n = 1; n <= kMaxLobes; ++n) {
        const double hi = specfun::bessel_j1_zero(n);
        total += Quad::integrate(integrand, lo, hi, 6, 1e-14);
        sums.push_back(total);
        lo = hi;

        const std::size_t window = std::min<std::size_t>(sums.size(), 24);
        const double est = wynn_epsilon(std::span(sums).last(window));
        if (!std::isfinite(est)) throw NumericalFailure("e2e_mgf: non-finite tail estimate");
        if (hi > settle_u && n >= 6 && std::abs(est - last_est) <= 1e-11) {
            if (++agreeing >= 2) return std::clamp(1.0 - est, 0.0, 1.0);
        } else {
            agreeing = 0;
        }
        last_est = est;
    }
    throw NumericalFailure("e2e_mgf: oscillatory tail did not converge within " +
                           std::to_string(kMaxLobes) + " lobes at s = " + std::to_string(s));
}

double bound_cdf(double gamma, std::span<const double> shapes, BoundSide side) {
    check_shapes(shapes);
    if (gamma < 0.0) throw DomainError("bound_cdf: gamma must be >= 0");
    const double scale = side == BoundSide::lower ? static_cast<double>(shapes.size()) : 1.0;
    // 1 - prod a/(c g + a), accumulated in log space to keep small values exact.
    double log_survival = 0.0;
    for (double a : shapes) log_survival -= std::log1p(scale * gamma / a);
    return -std::expm1(log_survival);
}

OutageBounds outage_bounds(double gamma_th, std::span<const double> shapes) {
    if (!(gamma_th > 0.0)) throw DomainError("outage_bounds: gamma_th must be > 0");
    return {bound_cdf(gamma_th, shapes, BoundSide::upper),
            bound_cdf(gamma_th, shapes, BoundSide::lower)};
}

double shape_param(double lambda, double eta, double noise_variance, double snr_scale,
                   ShapeVariant variant) {
    if (!(lambda > 0.0 && eta > 0.0 && noise_variance > 0.0 && snr_scale > 0.0)) {
        throw DomainError("shape_param: all arguments must be positive");
    }
    const double a0 = snr_scale * lambda * eta / noise_variance;
    return variant == ShapeVariant::exact ? a0 + 1.0 : a0;
}

LimitNormalization normalizer(int hop_count, double a, BoundSide side) {
    check_hops(hop_count);
    if (!(a > 0.0)) throw DomainError("normalizer: a must be positive");
    const double k = hop_count;
    const double scale = side == BoundSide::upper ? a / (k - 1.0) : a / (k * (k - 1.0));
    return {0.0, scale};
}

LimitNormalization normalizer(int hop_count, double lambda, double eta, double noise_variance,
                              double snr_scale, BoundSide side, ShapeVariant variant) {
    return normalizer(hop_count, shape_param(lambda, eta, noise_variance, snr_scale, variant),
                      side);
}

double limiting_cdf(double u) { return u <= 0.0 ? 0.0 : -std::expm1(-u); }

double limiting_pdf(double u) { return u < 0.0 ? 0.0 : std::exp(-u); }

GainExpansion gains(int hop_count, double lambda, double eta, double noise_variance,
                    double constellation_const, double snr_scale, ShapeVariant variant) {
    check_hops(hop_count);
    if (!(constellation_const > 0.0)) throw DomainError("gains: p must be positive");
    const double a = shape_param(lambda, eta, noise_variance, snr_scale, variant);
    const double km1 = hop_count - 1.0;
    return GainExpansion{0.0, km1 / a, 1.0, 2.0 * constellation_const * a / km1};
}

double rate_argument(int hop_count, double a) {
    check_hops(hop_count);
    if (!(a > 0.0)) throw DomainError("rate_argument: a must be positive");
    return (hop_count - 1.0) / a;
}

double rate_bound(int hop_count, double a) {
    const double x = rate_argument(hop_count, a);
    return specfun::exp_scaled_e1(x) / (hop_count * std::numbers::ln2);
}

double rate_bound(int hop_count, double lambda, double eta, double noise_variance,
                  double snr_scale, ShapeVariant variant) {
    return rate_bound(hop_count, shape_param(lambda, eta, noise_variance, snr_scale, variant));
}

double rate_approx(int hop_count, double a) {
    const double x = rate_argument(hop_count, a);
    return (-specfun::euler_gamma - std::log(x)) / (hop_count * std::numbers::ln2);
}

double rate_approx(int hop_count, double lambda, double eta, double noise_variance,
                   double snr_scale, ShapeVariant variant) {
    return rate_approx(hop_count, shape_param(lambda, eta, noise_variance, snr_scale, variant));
}

double rate_k2(double a1, double a2) {
    check_shape(a1);
    check_shape(a2);
    const auto integrand = [a1, a2](double u) {
        if (u >= 1.0) return 0.0;
        const double w = 1.0 - u;
        const double g = u / w;
        const double body = hyp_at(k2_argument(g, a1, a2)) /
                            ((1.0 + g) * (1.0 + g / a1) * (1.0 + g / a2));
        return body / (w * w);
    };
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, 1.0, 20, 1e-11, &error);
    if (!std::isfinite(integral) || error > 1e-6 * std::abs(integral)) {
        throw NumericalFailure("rate_k2: quadrature error estimate " + std::to_string(error));
    }
    return integral / (4.0 * std::numbers::ln2);
}

}  // namespace ssrelay::analysis
