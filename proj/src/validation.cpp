#include "riscov/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "riscov/analytic.hpp"
#include "riscov/channel.hpp"
#include "riscov/mcsim.hpp"
#include "riscov/special.hpp"

namespace riscov {

bool ValidationReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.pass && !c.informational) return false;
    return true;
}

namespace oracle {

double hyp2f1_series(double a, double b, double c, double z) {
    if (z == 0.0) return 1.0;
    if (z > 0.0) throw std::domain_error("oracle: z must be <= 0");
    const double w = z / (z - 1.0); // in (0,1)
    const double ca = c - a;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 60000; ++k) {
        term *= (ca + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
        sum += term;
        // once the term ratio settles below 1, bound the tail geometrically
        const double ratio =
            std::abs((ca + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2.0)) * w);
        if (ratio < 1.0) {
            const double tail = std::abs(term) * ratio / (1.0 - ratio);
            if (tail < 1e-14 * std::abs(sum) && k > 4) break;
        }
    }
    return std::pow(1.0 - z, -b) * sum;
}

namespace {

struct GaussLegendre64 {
    double nodes[32];
    double weights[32];
    GaussLegendre64() {
        // Newton iteration on Legendre polynomials; symmetric rule, only the
        // positive half is stored.
        const int n = 64;
        for (int i = 0; i < 32; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 =
                        ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 =
                    ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

double gl64_panel(const std::function<double(double)>& f, double a, double b) {
    static const GaussLegendre64 rule;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 32; ++i) {
        sum += rule.weights[i] * (f(mid + half * rule.nodes[i]) +
                                  f(mid - half * rule.nodes[i]));
    }
    return half * sum;
}

} // namespace

double erfc_quadrature(double x) {
    if (x < 0.0) return 2.0 - erfc_quadrature(-x);
    // integrate the density from x out to where it underflows
    const double hi = std::max(x + 2.0, 28.0);
    double total = 0.0;
    double a = x;
    while (a < hi) {
        const double b = std::min(a + 0.5, hi);
        total += gl64_panel(
            [](double t) { return std::exp(-t * t); }, a, b);
        a = b;
    }
    return 2.0 / std::sqrt(M_PI) * total;
}

double gamma_stirling(double x) {
    if (!(x > 0.0)) throw std::domain_error("oracle: x must be positive");
    // Bernoulli numbers B2..B14 over 2j(2j-1)
    static const double coeff[] = {
        1.0 / 12.0,      -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0,    -691.0 / 360360.0, 7.0 / 1092.0,
    };
    double shift = 1.0;
    double y = x;
    while (y < 12.0) {
        shift *= y;
        y += 1.0;
    }
    double series = 0.0;
    double ypow = y;
    for (double c : coeff) {
        series += c / ypow;
        ypow *= y * y;
    }
    const double lng = (y - 0.5) * std::log(y) - y +
                       0.5 * std::log(2.0 * M_PI) + series;
    return std::exp(lng) / shift;
}

} // namespace oracle

double comparison_halfwidth(const CoverageEstimate& estimate) {
    if (estimate.probability == 0.0 || estimate.probability == 1.0)
        return 3.0 / static_cast<double>(estimate.trials);
    return estimate.ci_halfwidth;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::domain_error("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs((i + 1.0) / n - f));
        d = std::max(d, std::abs(f - i / n));
    }
    return d;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

CheckResult check_hypergeometric() {
    Timer timer;
    CheckResult r;
    r.name = "hypergeometric vs transformed-series oracle";
    const double alphas[] = {2.4, 3.0, 4.0};
    const int orders[] = {1, 2, 4, 8};
    double worst = 0.0;
    int points = 0;
    for (double alpha : alphas) {
        const double a = -2.0 / alpha;
        const double c = 1.0 - 2.0 / alpha;
        for (int m : orders) {
            for (int i = 0; i < 17; ++i) {
                const double z = -100.0 * i / 16.0;
                const double got = gauss2f1(a, m, c, z);
                const double want = oracle::hyp2f1_series(a, m, c, z);
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
                ++points;
            }
        }
    }
    r.measured = worst;
    r.pass = worst <= 1e-9;
    r.detail = "max rel err " + fmt(worst) + " over " +
               std::to_string(points) + " grid points";
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_erfc_gamma() {
    Timer timer;
    CheckResult r;
    r.name = "erfc and gamma vs quadrature/Stirling oracles";
    double worst = 0.0;
    for (double x = -6.0; x <= 6.01; x += 0.25)
        worst = std::max(worst,
                         std::abs(erfc(x) - oracle::erfc_quadrature(x)));
    double worst_g = 0.0;
    for (double x : {0.01, 0.1, 0.5, 1.0, 1.01, 2.5, 4.0, 7.5, 10.0, 15.5}) {
        const double want = oracle::gamma_stirling(x);
        worst_g = std::max(worst_g, std::abs(gamma_fn(x) - want) / want);
    }
    r.measured = std::max(worst, worst_g);
    r.pass = worst <= 1e-12 && worst_g <= 1e-12;
    r.detail = "erfc abs err " + fmt(worst) + ", gamma rel err " + fmt(worst_g);
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_cris_constant() {
    Timer timer;
    CheckResult r;
    r.name = "aperture constant: corrected closed form vs quadrature";
    RisConfig cfg;
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        cfg.rho_a = i / 10.0;
        const double closed = c_ris_e(cfg, CrisMode::corrected);
        const double numeric = c_ris_e(cfg, CrisMode::numeric);
        worst = std::max(worst, std::abs(closed - numeric) / numeric);
    }
    r.measured = worst;
    r.pass = worst <= 1e-8;
    r.detail = "max rel err " + fmt(worst) + " over rho_a in {0.1..0.9}";
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_cris_original_divergence() {
    Timer timer;
    CheckResult r;
    r.name = "aperture constant: printed-form divergence";
    r.informational = true;
    RisConfig cfg;
    cfg.rho_a = 0.5;
    const double ratio = c_ris_e(cfg, CrisMode::corrected) /
                         c_ris_e(cfg, CrisMode::original);
    r.measured = ratio;
    r.pass = true;
    r.detail = "EXPECTED-DIVERGENCE: corrected/original = " + fmt(ratio) +
               " at rho_a = 0.5";
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_far_field() {
    Timer timer;
    CheckResult r;
    r.name = "aperture integral vs product-distance model, far field";
    RisConfig cfg; // L = 0.75, k for a 0.1 m wavelength
    const double theta = M_PI / 3.0;
    std::vector<double> errors;
    for (double ratio : {10.0, 100.0, 1000.0}) {
        const double dist = ratio * cfg.half_length;
        const auto setup =
            make_reflection_setup(dist, dist, 0.5 * theta, 0.5 * theta);
        const double exact = pathloss_ris_exact(setup.geom, setup.bs, setup.ris,
                                                setup.orientation, cfg, 1e-14);
        const double approx = pathloss_ris_approx(dist, dist, 0.5 * theta,
                                                  0.5 * theta, cfg, 1.0);
        errors.push_back(std::abs(exact - approx) / approx);
    }
    r.measured = errors.back();
    r.pass = errors[0] > errors[1] && errors[1] > errors[2] &&
             errors[2] < 0.01;
    r.detail = "rel err at r/L {10,100,1000}: " + fmt(errors[0]) + ", " +
               fmt(errors[1]) + ", " + fmt(errors[2]);
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_mean_interference(std::uint64_t trials, std::uint64_t seed) {
    Timer timer;
    CheckResult r;
    r.name = "mean connected-user interference vs closed form";
    bool pass = true;
    std::string detail;
    NetworkParams base;
    for (double scale : {1.0, 0.25}) {
        NetworkParams p = base;
        p.lambda_b = base.lambda_b * scale;
        const auto est = estimate_expectations(p, trials, seed);
        const double want = mean_interference_connected(p);
        const double se = est.mean_ic_ci / 1.96;
        const double sigmas =
            se > 0.0 ? std::abs(est.mean_ic_hat - want) / se : 1e9;
        pass = pass && sigmas <= 3.0;
        detail += "lambda x" + fmt(scale) + ": " + fmt(sigmas) + " sigma; ";
        r.measured = std::max(r.measured, sigmas);
    }
    r.pass = pass;
    r.detail = detail;
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_theorem_vs_corollary() {
    Timer timer;
    CheckResult r;
    r.name = "typical-user coverage: double integral vs quadrature form";
    NetworkParams p;
    p.alpha_t = 4.0;
    double worst = 0.0;
    for (int snr = 90; snr <= 105; ++snr) {
        p.P_b = p.sigma2 * std::pow(10.0, snr / 10.0);
        const double numeric = coverage_typical(p, 1e-7).value;
        const double closed = coverage_typical_closed(p, p.quad_K).value;
        worst = std::max(worst, std::abs(numeric - closed));
    }
    r.measured = worst;
    r.pass = worst <= 1e-4;
    r.detail = "max abs gap " + fmt(worst) + " over 90..105 dB";
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_bound_directions(std::uint64_t trials, std::uint64_t seed) {
    Timer timer;
    CheckResult r;
    r.name = "closed forms bound the simulation";
    NetworkParams base;
    bool pass = true;
    double worst_gap_t = 0.0, worst_gap_c = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double snr = 90.0 + 2.0 * i;
        NetworkParams p = base;
        p.P_b = p.sigma2 * std::pow(10.0, snr / 10.0);
        const double at = coverage_typical(p, 1e-6).value;
        const double ac = coverage_connected_closed(p).value;
        const auto [mt, mc] =
            estimate_coverage(p, ScenarioMode::ris_noma, trials, seed);
        // typical-user form overestimates, connected-user form underestimates
        if (at < mt.probability - 3.0 * comparison_halfwidth(mt)) pass = false;
        if (ac > mc.probability + 3.0 * comparison_halfwidth(mc)) pass = false;
        worst_gap_t = std::max(worst_gap_t, at - mt.probability);
        worst_gap_c = std::max(worst_gap_c, mc.probability - ac);
    }
    r.measured = std::max(worst_gap_t, worst_gap_c);
    r.pass = pass;
    r.detail = "max upper gap (typical) " + fmt(worst_gap_t) +
               ", max lower gap (connected) " + fmt(worst_gap_c);
    r.seconds = timer.elapsed();
    return r;
}

CheckResult check_angle_uniformity(std::uint64_t samples, std::uint64_t seed) {
    Timer timer;
    CheckResult r;
    r.name = "turn angle of the serving path is uniform on (0,pi)";
    NetworkParams p;
    const double rmin2 = p.R_L * p.R_L;
    const double r_max = p.r_max();
    const double span2 = r_max * r_max - rmin2;
    const double mean_count = p.lambda_b * M_PI * span2;
    std::vector<double> angles(samples, 0.0);
    // streams the PPP without storing it: only the nearest point to the
    // surface is kept, which is all the angle needs
    for_each_batch(samples, 256, [&](std::uint64_t, std::uint64_t lo,
                                     std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            RngStream rng(seed, idx);
            for (;;) {
                const Point ris = sample_ris(p.R_L, rng);
                const std::uint64_t n = rng.poisson(mean_count);
                if (n == 0) continue;
                double best_d2 = std::numeric_limits<double>::infinity();
                Point best{0, 0};
                for (std::uint64_t i = 0; i < n; ++i) {
                    const double rad =
                        std::sqrt(rmin2 + span2 * rng.uniform01());
                    const double phi = 2.0 * M_PI * rng.uniform01();
                    const Point pt{rad * std::cos(phi), rad * std::sin(phi)};
                    const double dx = pt.x - ris.x, dy = pt.y - ris.y;
                    const double d2 = dx * dx + dy * dy;
                    if (d2 < best_d2) {
                        best_d2 = d2;
                        best = pt;
                    }
                }
                angles[idx] = compute_link_angle(best, ris, Point{0, 0});
                break;
            }
        }
    });
    const double d =
        ks_statistic(std::move(angles),
                     [](double x) { return std::clamp(x / M_PI, 0.0, 1.0); });
    const double critical = 1.6276 / std::sqrt(static_cast<double>(samples));
    r.measured = d;
    r.pass = d < critical;
    // the uniformity claim is exact only without the inner boundary of the
    // point field; the residual deviation measures about 3e-3 at large n
    r.detail = "KS distance " + fmt(d) + ", 1% critical " + fmt(critical);
    r.seconds = timer.elapsed();
    return r;
}

ValidationReport run_validation(std::uint64_t trials, std::uint64_t seed) {
    ValidationReport report;
    report.checks.push_back(check_hypergeometric());
    report.checks.push_back(check_erfc_gamma());
    report.checks.push_back(check_cris_constant());
    report.checks.push_back(check_cris_original_divergence());
    report.checks.push_back(check_far_field());
    report.checks.push_back(check_theorem_vs_corollary());
    report.checks.push_back(check_angle_uniformity(
        std::max<std::uint64_t>(trials, 100000), seed));
    report.checks.push_back(check_mean_interference(trials, seed));
    report.checks.push_back(check_bound_directions(trials, seed));
    return report;
}

} // namespace riscov
