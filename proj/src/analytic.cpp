#include "riscov/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riscov/quadrature.hpp"
#include "riscov/special.hpp"

namespace riscov {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double laplace_connected(double s, const NetworkParams& p) {
    if (s < 0.0) throw std::domain_error("laplace_connected: s must be >= 0");
    const double sigma1 = M_PI * p.lambda_b * p.r_c * p.r_c;
    const double sigma2 = p.P_b * p.C / (p.m_t * std::pow(p.r_c, p.alpha_c));
    const double f = gauss2f1(-2.0 / p.alpha_c, p.m_t, 1.0 - 2.0 / p.alpha_c,
                              -sigma2 * s);
    return std::exp(-sigma1 * (f - 1.0));
}

double laplace_typical_ris(double s, double r_br0, double r_ru0,
                           const NetworkParams& p) {
    if (s < 0.0) throw std::domain_error("laplace_typical_ris: s must be >= 0");
    if (!(r_br0 > 0.0) || !(r_ru0 > 0.0))
        throw std::domain_error("laplace_typical_ris: distances must be positive");
    const double c2e = c_ris_e(p.ris_config(), p.cris_mode);
    const double sigma3 = M_PI * p.lambda_b * r_br0 * r_br0;
    const double sigma4 =
        p.P_b * c2e / (p.m_t * r_ru0 * std::pow(r_br0, p.alpha_t));
    const double f = gauss2f1(-2.0 / p.alpha_t, p.m_t, 1.0 - 2.0 / p.alpha_t,
                              -s * sigma4);
    return std::exp(-sigma3 * (f - 1.0));
}

double mean_interference_connected(const NetworkParams& p) {
    if (!(p.alpha_c > 2.0))
        throw std::domain_error(
            "mean_interference_connected: diverges for alpha_c <= 2");
    return 2.0 * M_PI * p.lambda_b * p.P_b * p.C *
           std::pow(p.r_c, 2.0 - p.alpha_c) / (p.alpha_c - 2.0);
}

double gamma_c_e(const NetworkParams& p) {
    if (!(p.alpha_c > 2.0))
        throw std::domain_error("gamma_c_e: diverges for alpha_c <= 2");
    const double num =
        (p.alpha_c - 2.0) * p.P_b * p.C * std::pow(p.r_c, -p.alpha_c);
    const double den =
        2.0 * M_PI * p.lambda_b * p.P_b * p.C * std::pow(p.r_c, 2.0 - p.alpha_c) +
        (p.alpha_c - 2.0) * p.sigma2;
    return num / den;
}

double gamma_t_e(const NetworkParams& p) {
    const double c_t = 1e-2 * gamma_fn(1e-2);
    return c_t * (p.alpha_t - 2.0) * M_PI * p.lambda_b;
}

double upsilon(const NetworkParams& p) {
    const double sic_den = p.a_c - p.gamma_sic_th * p.a_t;
    if (!(sic_den > 0.0))
        throw std::invalid_argument("upsilon: a_c - gamma_sic_th*a_t <= 0");
    return std::max({p.gamma_sic_th / sic_den, p.gamma_t_th / p.a_t,
                     gamma_c_e(p)});
}

namespace {

struct TermCoeffs {
    double beta1;
    double beta2;
};

TermCoeffs typical_coeffs(const NetworkParams& p, int n, double ups,
                          double c2e, double eta_t) {
    TermCoeffs c;
    c.beta1 = n * eta_t * ups * p.sigma2 / (p.P_b * c2e);
    c.beta2 = M_PI * p.lambda_b *
              gauss2f1(-2.0 / p.alpha_t, p.m_t, 1.0 - 2.0 / p.alpha_t,
                       -n * eta_t * ups / p.m_t);
    return c;
}

CoverageResult finish(double raw, double max_partial) {
    CoverageResult r;
    r.raw = raw;
    r.value = std::clamp(raw, 0.0, 1.0);
    r.clamped = r.value != raw;
    r.cancellation = raw != 0.0 ? max_partial / std::abs(raw)
                                : std::numeric_limits<double>::infinity();
    return r;
}

} // namespace

CoverageResult coverage_typical(const NetworkParams& p, double tol) {
    const double ups = upsilon(p);
    const double c2e = c_ris_e(p.ris_config(), p.cris_mode);
    const double eta_t = FadingSpec(p.m_t).eta;
    const double two_pi_lambda = 2.0 * M_PI * p.lambda_b;

    double raw = 0.0;
    double max_partial = 0.0;
    for (int n = 1; n <= p.m_t; ++n) {
        const auto [beta1, beta2] = typical_coeffs(p, n, ups, c2e, eta_t);
        const double weight = binomial(p.m_t, n);
        // absolute budget per integral, scaled so the final probability meets
        // `tol` after the 2*pi*lambda prefactor and the binomial weights
        const double outer_tol = tol / (4.0 * two_pi_lambda * weight * p.m_t);
        const double inner_tol = outer_tol / 4.0;
        const auto inner = [&](double y) {
            const double b0 = beta1 * std::pow(y, p.alpha_t);
            // both exponentials are spent beyond 45; trimming the domain to
            // the shorter scale keeps the integrand resolvable
            double x_hi = std::sqrt(45.0 / beta2);
            if (b0 > 0.0)
                x_hi = std::min(x_hi, std::pow(45.0 / b0, 1.0 / p.alpha_t));
            return integrate_1d(
                [&](double x) {
                    return x * std::exp(-b0 * std::pow(x, p.alpha_t) -
                                        beta2 * x * x);
                },
                0.0, x_hi, inner_tol);
        };
        const double outer = integrate_1d(
            [&](double y) { return 2.0 * y / (p.R_L * p.R_L) * inner(y); },
            0.0, p.R_L, outer_tol);
        const double term = two_pi_lambda * outer;
        raw += (n % 2 == 1 ? 1.0 : -1.0) * weight * term;
        max_partial = std::max(max_partial, std::abs(raw));
    }
    return finish(raw, max_partial);
}

CoverageResult coverage_typical_closed(const NetworkParams& p,
                                       int quad_order) {
    if (p.alpha_t != 4.0)
        throw std::domain_error(
            "coverage_typical_closed: requires alpha_t == 4");
    const double ups = upsilon(p);
    const double c2e = c_ris_e(p.ris_config(), p.cris_mode);
    const double eta_t = FadingSpec(p.m_t).eta;
    const QuadratureRule rule = chebyshev_gauss(quad_order);

    double raw = 0.0;
    double max_partial = 0.0;
    for (int n = 1; n <= p.m_t; ++n) {
        const auto [beta1, beta2] = typical_coeffs(p, n, ups, c2e, eta_t);
        const double sqrt_b1 = std::sqrt(beta1);
        double term = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            const double node = rule.nodes[i];
            const double xi = 0.5 * p.R_L * (node + 1.0);
            if (xi == 0.0) continue;
            const double t = beta2 / (2.0 * sqrt_b1 * xi * xi);
            // exp(beta2^2/(4 beta1 xi^4)) * erfc(t) == erfcx(t); evaluated in
            // scaled form so large t never overflows
            term += rule.weights[i] * std::pow(M_PI, 1.5) * p.lambda_b *
                    std::sqrt(1.0 - node * node) /
                    (2.0 * p.R_L * sqrt_b1 * xi) * erfcx(t);
        }
        raw += (n % 2 == 1 ? 1.0 : -1.0) * binomial(p.m_t, n) * term;
        max_partial = std::max(max_partial, std::abs(raw));
    }
    return finish(raw, max_partial);
}

CoverageResult coverage_connected_closed(const NetworkParams& p) {
    const double th_den = p.a_c - p.a_t * p.gamma_c_th;
    if (!(th_den > 0.0))
        throw std::invalid_argument(
            "coverage_connected_closed: a_c - a_t*gamma_c_th <= 0");
    const double eta_c = FadingSpec(p.m_c).eta;
    const double gte = gamma_t_e(p);
    const double rc2 = p.r_c * p.r_c;
    const double rca = std::pow(p.r_c, p.alpha_c);

    double raw = 0.0;
    double sum_order = 0.0, sum_decode = 0.0;
    double max_partial = 0.0;
    for (int n = 1; n <= p.m_c; ++n) {
        const double sign = n % 2 == 1 ? 1.0 : -1.0;
        const double w = binomial(p.m_c, n);
        const double mu1 =
            M_PI * p.lambda_b *
            (gauss2f1(-2.0 / p.alpha_c, p.m_t, 1.0 - 2.0 / p.alpha_c,
                      -n * eta_c * p.P_b * gte / p.m_t) -
             1.0);
        const double mu2 = n * eta_c * gte * p.sigma2 / p.C;
        const double mu3 =
            M_PI * p.lambda_b *
            (gauss2f1(-2.0 / p.alpha_c, p.m_t, 1.0 - 2.0 / p.alpha_c,
                      -n * eta_c * p.gamma_c_th / (p.m_t * th_den)) -
             1.0);
        const double mu4 =
            n * eta_c * p.gamma_c_th * p.sigma2 / (th_den * p.P_b * p.C);
        const double a = mu1 * rc2 + mu2 * rca;
        const double b = mu3 * rc2 + mu4 * rca;
        sum_order += sign * w * std::exp(-a);
        sum_decode += sign * w * std::exp(-b);
        // exp(-a) - exp(-b) without cancellation when a ~ b
        raw += sign * w * (-std::exp(-a) * std::expm1(a - b));
        max_partial =
            std::max({max_partial, std::abs(sum_order), std::abs(sum_decode)});
    }
    CoverageResult r = finish(raw, max_partial);
    // the monitor tracks the two alternating sums individually; their
    // difference is allowed to be small
    const double scale = std::max(std::abs(sum_order), std::abs(sum_decode));
    r.cancellation = scale > 0.0 ? max_partial / scale
                                 : std::numeric_limits<double>::infinity();
    return r;
}

CoveragePair analytic_coverage(const NetworkParams& p) {
    CoveragePair pair;
    pair.p_typical = p.alpha_t == 4.0
                         ? coverage_typical_closed(p, p.quad_K).value
                         : coverage_typical(p, 1e-6).value;
    pair.p_connected = coverage_connected_closed(p).value;
    return pair;
}

} // namespace riscov
