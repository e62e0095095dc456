#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "riscov/geometry.hpp"
#include "riscov/mcsim.hpp"
#include "riscov/quadrature.hpp"
#include "riscov/validation.hpp"

using namespace riscov;

namespace {
const double kLambda = 1.0 / (300.0 * 300.0 * M_PI);
}

TEST_CASE("ppp sampling rejects degenerate annuli") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(sample_ppp_annulus(kLambda, 10, 10, rng), std::domain_error);
    CHECK_THROWS_AS(sample_ppp_annulus(kLambda, 20, 10, rng), std::domain_error);
    CHECK_THROWS_AS(sample_ppp_annulus(0.0, 0, 10, rng), std::domain_error);
}

TEST_CASE("ppp sampling: negligible mean gives empty sets") {
    RngStream rng(2, 0);
    for (int i = 0; i < 50; ++i)
        CHECK(sample_ppp_annulus(1e-15, 0, 10, rng).empty());
}

TEST_CASE("ppp count matches the area formula") {
    // annulus (25, 3000) at the default density: mean (3000^2-25^2)/300^2
    const double mean = kLambda * M_PI * (3000.0 * 3000.0 - 25.0 * 25.0);
    CHECK(mean == doctest::Approx(99.993).epsilon(1e-4));
    RngStream rng(3, 0);
    const int draws = 10000;
    double total = 0.0;
    for (int i = 0; i < draws; ++i) {
        const auto pts = sample_ppp_annulus(kLambda, 25, 3000, rng);
        total += static_cast<double>(pts.size());
        if (i < 100)
            for (const Point& p : pts) {
                const double r = std::sqrt(norm2(p));
                CHECK(r >= 25.0);
                CHECK(r <= 3000.0);
            }
    }
    // Poisson: sd of the mean is sqrt(mean/draws)
    CHECK(std::abs(total / draws - mean) < 3.0 * std::sqrt(mean / draws));
}

TEST_CASE("nearest point of a dense ppp follows the Rayleigh-type law") {
    RngStream rng(4, 0);
    std::vector<double> nearest;
    for (int i = 0; i < 4000; ++i) {
        const auto pts = sample_ppp_annulus(kLambda, 0, 1500, rng);
        if (pts.empty()) continue;
        double best = 1e18;
        for (const Point& p : pts) best = std::min(best, norm2(p));
        nearest.push_back(std::sqrt(best));
    }
    const double d = ks_statistic(nearest, [](double x) {
        return 1.0 - std::exp(-M_PI * kLambda * x * x);
    });
    CHECK(d < 1.6276 / std::sqrt(double(nearest.size())));
}

TEST_CASE("ris position is uniform on the disk") {
    RngStream rng(5, 0);
    const double R = 25.0;
    std::vector<double> radii, angles;
    double r2sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const Point p = sample_ris(R, rng);
        const double r2 = norm2(p);
        r2sum += r2;
        radii.push_back(std::sqrt(r2));
        angles.push_back(std::atan2(p.y, p.x));
    }
    // E[r^2] = R^2/2, Var(r^2) = R^4/12
    CHECK(std::abs(r2sum / n - R * R / 2.0) <
          3.0 * R * R / std::sqrt(12.0 * n));
    const double dr = ks_statistic(
        radii, [R](double x) { return std::clamp(x * x / (R * R), 0.0, 1.0); });
    CHECK(dr < 1.6276 / std::sqrt(double(n)));
    // CDF of the radius at R/2 is 1/4
    const double at_half =
        std::count_if(radii.begin(), radii.end(),
                      [R](double r) { return r <= R / 2.0; }) /
        double(n);
    CHECK(at_half == doctest::Approx(0.25).epsilon(0.05));
    const double da = ks_statistic(angles, [](double x) {
        return std::clamp((x + M_PI) / (2.0 * M_PI), 0.0, 1.0);
    });
    CHECK(da < 1.6276 / std::sqrt(double(n)));
}

TEST_CASE("nearest_bs_pdf normalizes and matches the n=1 form") {
    for (int n : {1, 2, 3}) {
        const double mass = integrate_1d(
            [n](double x) { return nearest_bs_pdf(x, n, kLambda); }, 0.0,
            3000.0, 1e-10);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
    }
    for (double x : {50.0, 150.0, 400.0}) {
        const double pl = M_PI * kLambda;
        CHECK(nearest_bs_pdf(x, 1, kLambda) ==
              doctest::Approx(2.0 * pl * x * std::exp(-pl * x * x)));
    }
    CHECK(nearest_bs_pdf(-1.0, 1, kLambda) == 0.0);
}

TEST_CASE("link angle fold convention") {
    const Point ris{0, 0};
    // opposite sides along a line: grazing
    CHECK(compute_link_angle({-5, 0}, ris, {3, 0}) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // coincident directions
    CHECK(compute_link_angle({4, 0}, ris, {2, 0}) == doctest::Approx(M_PI));
    // perpendicular links
    CHECK(compute_link_angle({0, 2}, ris, {3, 0}) ==
          doctest::Approx(M_PI / 2));
    CHECK_THROWS_AS(compute_link_angle({0, 0}, ris, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(compute_link_angle({1, 0}, ris, {0, 0}), std::domain_error);
}

TEST_CASE("link angle always lands in [0,pi]") {
    RngStream rng(6, 0);
    for (int i = 0; i < 100000; ++i) {
        const Point bs{rng.uniform(-100, 100), rng.uniform(-100, 100)};
        const Point ris{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const Point user{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        if (norm2({bs.x - ris.x, bs.y - ris.y}) == 0.0) continue;
        if (norm2({user.x - ris.x, user.y - ris.y}) == 0.0) continue;
        const double th = compute_link_angle(bs, ris, user);
        CHECK(th >= 0.0);
        CHECK(th <= M_PI);
    }
}

TEST_CASE("split_angle arithmetic and domain") {
    auto [a, b] = split_angle(M_PI, 0.5);
    CHECK(a == doctest::Approx(M_PI / 2));
    CHECK(b == doctest::Approx(M_PI / 2));
    auto [c, d] = split_angle(M_PI / 2, 0.2);
    CHECK(c == doctest::Approx(0.1 * M_PI));
    CHECK(d == doctest::Approx(0.4 * M_PI));
    for (double theta = 0.0; theta <= M_PI; theta += 0.1) {
        auto [x, y] = split_angle(theta, 0.37);
        CHECK(x + y == doctest::Approx(theta).epsilon(1e-14));
    }
    CHECK_THROWS_AS(split_angle(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(split_angle(1.0, 1.0), std::domain_error);
}

TEST_CASE("association is permutation invariant") {
    RngStream rng(7, 0);
    std::vector<Point> pts;
    for (int i = 0; i < 40; ++i)
        pts.push_back({rng.uniform(-100, 100), rng.uniform(-100, 100)});
    const Point ref{3, -4};
    const Point before = pts[nearest_index(pts, ref)];
    std::reverse(pts.begin(), pts.end());
    std::swap(pts[0], pts[17]);
    const Point after = pts[nearest_index(pts, ref)];
    CHECK(before.x == after.x);
    CHECK(before.y == after.y);
}

TEST_CASE("realizations are seed-deterministic") {
    NetworkParams p;
    p.r_max_override = 2000.0; // keep the point set small
    RngStream a(99, 5), b(99, 5);
    const Realization ra = sample_realization(p, a);
    const Realization rb = sample_realization(p, b);
    REQUIRE(ra.bs_points.size() == rb.bs_points.size());
    for (std::size_t i = 0; i < ra.bs_points.size(); ++i) {
        CHECK(ra.bs_points[i].x == rb.bs_points[i].x);
        CHECK(ra.bs_points[i].y == rb.bs_points[i].y);
    }
    CHECK(ra.ris.x == rb.ris.x);
    CHECK(ra.associated_index == rb.associated_index);
}

TEST_CASE("incidence angle of sampled networks is uniform on (0, rho_a pi)") {
    NetworkParams p;
    p.rho_a = 0.35;
    p.r_max_override = 3000.0; // the nearest-point direction law is unchanged
    std::vector<double> samples;
    for (int i = 0; i < 20000; ++i) {
        RngStream rng(123, i);
        const Realization real = sample_realization(p, rng);
        const double theta = compute_link_angle(
            real.bs_points[real.associated_index], real.ris, Point{0, 0});
        samples.push_back(split_angle(theta, p.rho_a).first);
    }
    const double sup = p.rho_a * M_PI;
    const double d = ks_statistic(samples, [sup](double x) {
        return std::clamp(x / sup, 0.0, 1.0);
    });
    CHECK(d < 1.6276 / std::sqrt(double(samples.size())));
}
