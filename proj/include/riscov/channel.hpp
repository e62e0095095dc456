#ifndef RISCOV_CHANNEL_HPP
#define RISCOV_CHANNEL_HPP

#include "riscov/geometry.hpp"
#include "riscov/rng.hpp"

namespace riscov {

// Physical description of the reflecting surface: a linear aperture of
// half-length L with wavenumber k, constant phase offset, and the ratio
// rho_a splitting the turn angle into incidence and reflection.
struct RisConfig {
    double half_length = 0.75;        // L, meters
    double wavenumber = 62.8318530718; // k = 2*pi/0.1 rad/m
    double phase_offset = 0.0;         // phi0, cancels in |.|^2
    double rho_a = 0.5;
};

// Nakagami-m power fading with unit mean: |h|^2 ~ Gamma(m, 1/m).
// eta = m*(m!)^(-1/m) parameterizes the CDF approximation below.
struct FadingSpec {
    explicit FadingSpec(int order);
    int m;
    double eta;
};

// Direct link: C * d^-alpha.
double pathloss_direct(double distance, double intercept, double alpha_c);

// Reflected link, far-field model: C_ris^2 * (r_br*r_ru)^-alpha_t with
// C_ris = (L/4pi)(cos(theta_br)+cos(theta_ru)). Angles are clamped to
// [0, pi/2] before use; beyond that range the aperture faces away.
double pathloss_ris_approx(double r_br, double r_ru, double theta_br,
                           double theta_ru, const RisConfig& cfg,
                           double alpha_t);

// Physical-optics aperture integral |int_{-L}^{L} Psi(x) e^{-jk Omega(x)} dx|^2
// with the surface phase profile matched to the link's central angles. The
// user sits at the origin; per-point distances and angles come from exact
// geometry. `tol` bounds the quadrature error of each quadrature component.
double pathloss_ris_exact(const LinkGeometry& geom, const Point& bs,
                          const Point& ris, double ris_orientation,
                          const RisConfig& cfg, double tol);

enum class CrisMode {
    original,  // printed closed form (cubic-term denominator as printed)
    corrected, // denominator 4r-12r^2+8r^3, removable singularity at 1/2
    numeric,   // quadrature over the uniform turn angle
};

// Mean-square aperture constant E[C_ris^2] with the turn angle uniform on
// (0,pi) and the rho_a split applied.
double c_ris_e(const RisConfig& cfg, CrisMode mode);

// One draw of |h|^2.
double sample_fading_power(const FadingSpec& spec, RngStream& rng);

// (1 - exp(-eta*x))^m, the standard closed-form stand-in for the normalized
// Gamma CDF used throughout the coverage expressions.
double gamma_cdf_bound(double x, const FadingSpec& spec);

// Helper for tests and validation: place a surface and BS so that the path
// toward a user at the origin has the requested distances and split angles,
// with both endpoints on the reflecting side.
struct ExactPathSetup {
    LinkGeometry geom;
    Point bs;
    Point ris;
    double orientation;
};
ExactPathSetup make_reflection_setup(double r_br, double r_ru, double theta_br,
                                     double theta_ru);

} // namespace riscov

#endif
