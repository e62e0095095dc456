#ifndef RISCOV_GEOMETRY_HPP
#define RISCOV_GEOMETRY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "riscov/rng.hpp"

namespace riscov {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double norm2(const Point& p) { return p.x * p.x + p.y * p.y; }

// One sampled network snapshot. The typical user sits at the origin; base
// stations live on the annulus (r_min, r_max) around it and the serving BS
// is the one closest to the reflecting surface.
struct Realization {
    std::vector<Point> bs_points;
    Point ris;
    double ris_orientation = 0.0; // implied by the same-side reflection setup
    std::size_t associated_index = 0;
    std::uint64_t rng_seed = 0;
};

// One reflection path: distances from BS to surface and surface to user,
// the full turn angle at the surface, and its incidence/reflection split.
struct LinkGeometry {
    double r_br = 0.0;
    double r_ru = 0.0;
    double theta = 0.0;
    double theta_br = 0.0;
    double theta_ru = 0.0;
};

// Homogeneous PPP restricted to the annulus r_min <= r < r_max around the
// origin: Poisson count with mean density*pi*(r_max^2-r_min^2), locations
// i.i.d. uniform on the annulus.
std::vector<Point> sample_ppp_annulus(double density, double r_min,
                                      double r_max, RngStream& rng);

// Uniform position in the disk of radius R_L around the origin.
Point sample_ris(double R_L, RngStream& rng);

// Density of the distance from a fixed point to the n-th nearest point of a
// PPP: 2(pi*density)^n / (n-1)! * x^(2n-1) * exp(-pi*density*x^2).
double nearest_bs_pdf(double x, int n, double density);

// Turn angle at the surface for the path bs -> ris -> user, folded into
// [0,pi]. Links pointing in opposite directions from the surface give 0
// (grazing), coincident directions give pi.
double compute_link_angle(const Point& bs, const Point& ris, const Point& user);

// Split the turn angle into (incidence, reflection) = (rho_a*theta,
// (1-rho_a)*theta).
std::pair<double, double> split_angle(double theta, double rho_a);

// Index of the point closest to `ref`; ties resolve to the lowest index.
std::size_t nearest_index(const std::vector<Point>& points, const Point& ref);

} // namespace riscov

#endif
