#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "riscov/analytic.hpp"
#include "riscov/mcsim.hpp"

using namespace riscov;

namespace {

// small point sets make these trials cheap; the engine statistics do not
// depend on the truncation radius beyond the interference tail
NetworkParams small_params() {
    NetworkParams p;
    p.r_max_override = 2000.0;
    return p;
}

} // namespace

TEST_CASE("per-sample SINR identities pin the ratio structure") {
    const NetworkParams p = small_params();
    for (int i = 0; i < 500; ++i) {
        RngStream rng(21, i);
        const SinrSample s = run_trial(p, ScenarioMode::ris_noma, rng);
        // gamma_sic = a_c g/(a_t g + 1) and gamma_t = a_t g with the shared
        // serving SNR g = gamma_t_oma; same shape on the connected side
        const double g = s.gamma_t_oma;
        CHECK(s.gamma_sic ==
              doctest::Approx(p.a_c * g / (p.a_t * g + 1.0)).epsilon(1e-12));
        CHECK(s.gamma_t == doctest::Approx(p.a_t * g).epsilon(1e-12));
        const double h = s.gamma_c_oma;
        CHECK(s.gamma_c ==
              doctest::Approx(p.a_c * h / (p.a_t * h + 1.0)).epsilon(1e-12));
        CHECK(s.gamma_sic < p.a_c / p.a_t);
        CHECK(s.gamma_t_oma >= 0.0);
        CHECK(std::isfinite(s.gamma_c_oma));
    }
}

TEST_CASE("interference-free noise-free limit of the SIC ratio") {
    NetworkParams p = small_params();
    p.r_max_override = 0.0;
    p.lambda_b = 1e-7;      // mean count ~ 1e-7 * pi * (r_max^2) ~ 0.03
    p.r_max_override = 400.0;
    p.sigma2 = 1e-300;
    int singles = 0;
    for (int i = 0; i < 400 && singles < 50; ++i) {
        RngStream rng(33, i);
        const SinrSample s = run_trial(p, ScenarioMode::ris_noma, rng);
        // with one BS there is no interferer; the ratio collapses to a_c/a_t
        if (s.gamma_t > 1e50) { // noise-free, interference-free trials only
            ++singles;
            CHECK(s.gamma_sic ==
                  doctest::Approx(p.a_c / p.a_t).epsilon(1e-9));
        }
    }
    CHECK(singles >= 50);
}

TEST_CASE("trial wiring against a replayed-configuration oracle") {
    NetworkParams p = small_params();
    p.lambda_b = 3e-6;
    p.r_max_override = 1500.0;
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        RngStream rng(77, trial);
        const SinrSample got = run_trial(p, ScenarioMode::ris_noma, rng);

        // replay the same stream: the draw order is surface, count,
        // positions (rejection from the bounding square), serving fades,
        // one fade per interferer, then the connected user's own field
        RngStream r2(77, trial);
        const double R = p.r_max_override;
        const Point ris = sample_ris(p.R_L, r2);
        const std::uint64_t n =
            r2.poisson(p.lambda_b * M_PI * (R * R - p.R_L * p.R_L));
        if (n == 0) continue;
        std::vector<Point> pts;
        for (std::uint64_t i = 0; i < n; ++i) {
            double x, y, d2;
            do {
                x = R * (2.0 * r2.uniform01() - 1.0);
                y = R * (2.0 * r2.uniform01() - 1.0);
                d2 = x * x + y * y;
            } while (d2 <= p.R_L * p.R_L || d2 > R * R);
            pts.push_back({x, y});
        }
        const std::size_t assoc = nearest_index(pts, ris);
        const double fade_t = r2.gamma_unit_mean(p.m_t);
        const double fade_c = r2.gamma_unit_mean(p.m_c);

        const double r_br = std::sqrt(norm2(
            {pts[assoc].x - ris.x, pts[assoc].y - ris.y}));
        const double r_ru = std::sqrt(norm2(ris));
        const double theta = compute_link_angle(pts[assoc], ris, {0, 0});
        const auto [tb, tr] = split_angle(theta, p.rho_a);
        const double gain_t =
            pathloss_ris_approx(r_br, r_ru, tb, tr, p.ris_config(), p.alpha_t);

        double it = 0.0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (i == assoc) continue;
            const double h = r2.gamma_unit_mean(p.m_t);
            const double ri = std::sqrt(norm2(
                {pts[i].x - ris.x, pts[i].y - ris.y}));
            const double thi = compute_link_angle(pts[i], ris, {0, 0});
            const auto [tbi, tri] = split_angle(thi, p.rho_a);
            it += h * pathloss_ris_approx(ri, r_ru, tbi, tri, p.ris_config(),
                                          p.alpha_t);
        }
        double ic = 0.0;
        const double rc2 = p.r_c * p.r_c;
        const std::uint64_t n_c =
            r2.poisson(p.lambda_b * M_PI * (R * R - rc2));
        for (std::uint64_t j = 0; j < n_c; ++j) {
            const double rho2 = rc2 + (R * R - rc2) * r2.uniform01();
            const double h = r2.gamma_unit_mean(p.m_t);
            ic += h * pathloss_direct(std::sqrt(rho2), p.C, p.alpha_c);
        }
        const double st = p.P_b * fade_t * gain_t;
        const double sc =
            p.P_b * fade_c * pathloss_direct(p.r_c, p.C, p.alpha_c);
        const double den_t = p.rho_t * p.P_b * it + p.sigma2;
        const double den_c = p.P_b * ic + p.sigma2;
        CHECK(got.gamma_t_oma == doctest::Approx(st / den_t).epsilon(1e-9));
        CHECK(got.gamma_c_oma == doctest::Approx(sc / den_c).epsilon(1e-9));
        CHECK(got.gamma_t ==
              doctest::Approx(p.a_t * st / den_t).epsilon(1e-9));
    }
}

TEST_CASE("coverage estimation endpoints") {
    NetworkParams p = small_params();
    CHECK_THROWS_AS(estimate_coverage(p, ScenarioMode::ris_noma, 500, 1),
                    std::domain_error);
    // unreachable typical threshold; the connected ordering event is
    // already impossible at the defaults
    NetworkParams hard = p;
    hard.gamma_t_th = 1e12;
    hard.gamma_sic_th = 1.2;
    auto [t, c] = estimate_coverage(hard, ScenarioMode::ris_noma, 2000, 1);
    CHECK(t.probability == 0.0);
    CHECK(c.probability == 0.0);
    CHECK(t.ci_halfwidth == 0.0);
    CHECK(t.trials == 2000);
}

TEST_CASE("estimates agree with a manual count over the same streams") {
    NetworkParams p = small_params();
    const std::uint64_t trials = 2000, seed = 5;
    auto [t, c] =
        estimate_coverage(p, ScenarioMode::ris_noma, trials, seed);
    const double ec = gamma_c_e(p);
    const double et = gamma_t_e(p);
    std::uint64_t ht = 0, hc = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        RngStream rng(seed, i);
        const SinrSample s = run_trial(p, ScenarioMode::ris_noma, rng);
        ht += s.gamma_sic > p.gamma_sic_th && s.gamma_t > p.gamma_t_th &&
              s.gamma_t_oma > ec;
        hc += s.gamma_c > p.gamma_c_th && et > s.gamma_c_oma;
    }
    CHECK(t.probability == doctest::Approx(double(ht) / trials).epsilon(1e-15));
    CHECK(c.probability == doctest::Approx(double(hc) / trials).epsilon(1e-15));
}

TEST_CASE("orthogonal-access mode scores its own thresholds") {
    NetworkParams p = small_params();
    p.gamma_t_th = 1e-9; // nearly always covered in the orthogonal reference
    auto [t, c] = estimate_coverage(p, ScenarioMode::ris_oma, 2000, 9);
    CHECK(t.probability > 0.9);
    CHECK(c.probability > 0.9);
}

TEST_CASE("estimates are identical for any worker count") {
    NetworkParams p = small_params();
    const char* old = std::getenv("RIS_COVERAGE_THREADS");
    setenv("RIS_COVERAGE_THREADS", "1", 1);
    auto [t1, c1] = estimate_coverage(p, ScenarioMode::ris_noma, 4000, 11);
    auto e1 = estimate_expectations(p, 3000, 13);
    setenv("RIS_COVERAGE_THREADS", "3", 1);
    auto [t3, c3] = estimate_coverage(p, ScenarioMode::ris_noma, 4000, 11);
    auto e3 = estimate_expectations(p, 3000, 13);
    if (old)
        setenv("RIS_COVERAGE_THREADS", old, 1);
    else
        unsetenv("RIS_COVERAGE_THREADS");
    CHECK(t1.probability == t3.probability);
    CHECK(c1.probability == c3.probability);
    CHECK(e1.mean_ic_hat == e3.mean_ic_hat);   // bitwise, batch-ordered sums
    CHECK(e1.gamma_t_e_hat == e3.gamma_t_e_hat);
}

TEST_CASE("expectation estimates track density") {
    NetworkParams p = small_params();
    const auto full = estimate_expectations(p, 4000, 17);
    NetworkParams half = p;
    half.lambda_b = p.lambda_b / 2.0;
    const auto thin = estimate_expectations(half, 4000, 17);
    // interference is linear in density
    CHECK(thin.mean_ic_hat / full.mean_ic_hat > 0.3);
    CHECK(thin.mean_ic_hat / full.mean_ic_hat < 0.7);
    // and the closed form sits inside the truncated estimate's 3-sigma band
    const double want = mean_interference_connected(p);
    CHECK(std::abs(full.mean_ic_hat - want) < 3.0 * full.mean_ic_ci / 1.96 +
                                                  0.01 * want);
}

TEST_CASE("coverage responds monotonically to thresholds, CI-aware") {
    NetworkParams p = small_params();
    p.gamma_t_th = 1e-4;
    auto [lo_t, lo_c] = estimate_coverage(p, ScenarioMode::ris_oma, 4000, 23);
    p.gamma_t_th = 1e-2;
    auto [mid_t, mid_c] = estimate_coverage(p, ScenarioMode::ris_oma, 4000, 23);
    p.gamma_t_th = 1.0;
    auto [hi_t, hi_c] = estimate_coverage(p, ScenarioMode::ris_oma, 4000, 23);
    CHECK(lo_t.probability + 3 * lo_t.ci_halfwidth >=
          mid_t.probability - 3 * mid_t.ci_halfwidth);
    CHECK(mid_t.probability + 3 * mid_t.ci_halfwidth >=
          hi_t.probability - 3 * hi_t.ci_halfwidth);
}

TEST_CASE("empirical expectation mode is usable and deterministic") {
    NetworkParams p = small_params();
    auto [t1, c1] = estimate_coverage(p, ScenarioMode::ris_noma, 3000, 31,
                                      ExpectationMode::empirical);
    auto [t2, c2] = estimate_coverage(p, ScenarioMode::ris_noma, 3000, 31,
                                      ExpectationMode::empirical);
    CHECK(t1.probability == t2.probability);
    CHECK(c1.probability == c2.probability);
    CHECK(t1.probability >= 0.0);
    CHECK(t1.probability <= 1.0);
}

TEST_CASE("vanishing thresholds reduce coverage to the ordering events") {
    NetworkParams p = small_params();
    p.gamma_sic_th = 1e-300;
    p.gamma_t_th = 1e-300;
    p.gamma_c_th = 1e-300;
    const std::uint64_t trials = 2000, seed = 41;
    auto [t, c] = estimate_coverage(p, ScenarioMode::ris_noma, trials, seed);
    const double ec = gamma_c_e(p);
    const double et = gamma_t_e(p);
    std::uint64_t order_t = 0, order_c = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        RngStream rng(seed, i);
        const SinrSample s = run_trial(p, ScenarioMode::ris_noma, rng);
        order_t += s.gamma_t_oma > ec;
        order_c += et > s.gamma_c_oma;
    }
    CHECK(t.probability ==
          doctest::Approx(double(order_t) / trials).epsilon(1e-15));
    CHECK(c.probability ==
          doctest::Approx(double(order_c) / trials).epsilon(1e-15));
}
