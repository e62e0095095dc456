#include "riscov/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace riscov {

std::vector<Point> sample_ppp_annulus(double density, double r_min,
                                      double r_max, RngStream& rng) {
    if (!(density > 0.0))
        throw std::domain_error("sample_ppp_annulus: density must be positive");
    if (!(r_min >= 0.0) || !(r_max > r_min))
        throw std::domain_error("sample_ppp_annulus: degenerate annulus");
    const double area = M_PI * (r_max * r_max - r_min * r_min);
    const std::uint64_t count = rng.poisson(density * area);
    std::vector<Point> points;
    points.reserve(count);
    const double rmin2 = r_min * r_min;
    const double span2 = r_max * r_max - rmin2;
    for (std::uint64_t i = 0; i < count; ++i) {
        const double r = std::sqrt(rmin2 + span2 * rng.uniform01());
        const double phi = 2.0 * M_PI * rng.uniform01();
        points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return points;
}

Point sample_ris(double R_L, RngStream& rng) {
    const double r = R_L * std::sqrt(rng.uniform01());
    const double phi = 2.0 * M_PI * rng.uniform01();
    return {r * std::cos(phi), r * std::sin(phi)};
}

double nearest_bs_pdf(double x, int n, double density) {
    if (x < 0.0) return 0.0;
    const double pl = M_PI * density;
    double coef = 2.0 * pl;
    for (int k = 1; k < n; ++k) coef *= pl / k;
    return coef * std::pow(x, 2 * n - 1) * std::exp(-pl * x * x);
}

double compute_link_angle(const Point& bs, const Point& ris,
                          const Point& user) {
    const double v1x = user.x - ris.x, v1y = user.y - ris.y;
    const double v2x = bs.x - ris.x, v2y = bs.y - ris.y;
    if ((v1x == 0.0 && v1y == 0.0) || (v2x == 0.0 && v2y == 0.0))
        throw std::domain_error("compute_link_angle: coincident points");
    const double dot = v1x * v2x + v1y * v2y;
    const double cross = v1x * v2y - v1y * v2x;
    const double between = std::atan2(std::abs(cross), dot); // in [0,pi]
    return M_PI - between;
}

std::pair<double, double> split_angle(double theta, double rho_a) {
    if (!(rho_a > 0.0 && rho_a < 1.0))
        throw std::domain_error("split_angle: rho_a must lie in (0,1)");
    return {rho_a * theta, (1.0 - rho_a) * theta};
}

std::size_t nearest_index(const std::vector<Point>& points, const Point& ref) {
    if (points.empty())
        throw std::domain_error("nearest_index: empty point set");
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = points[i].x - ref.x;
        const double dy = points[i].y - ref.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

} // namespace riscov
