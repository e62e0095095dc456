#include "riscov/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "riscov/quadrature.hpp"

namespace riscov {

FadingSpec::FadingSpec(int order) : m(order) {
    if (order < 1) throw std::domain_error("FadingSpec: order must be >= 1");
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) fact *= k;
    eta = order * std::pow(fact, -1.0 / order);
}

double pathloss_direct(double distance, double intercept, double alpha_c) {
    if (!(distance > 0.0))
        throw std::domain_error("pathloss_direct: distance must be positive");
    return intercept * std::pow(distance, -alpha_c);
}

double pathloss_ris_approx(double r_br, double r_ru, double theta_br,
                           double theta_ru, const RisConfig& cfg,
                           double alpha_t) {
    if (!(r_br > 0.0) || !(r_ru > 0.0))
        throw std::domain_error("pathloss_ris_approx: distances must be positive");
    const double tb = std::clamp(theta_br, 0.0, 0.5 * M_PI);
    const double tr = std::clamp(theta_ru, 0.0, 0.5 * M_PI);
    const double c_ris =
        cfg.half_length / (4.0 * M_PI) * (std::cos(tb) + std::cos(tr));
    return c_ris * c_ris * std::pow(r_br * r_ru, -alpha_t);
}

double pathloss_ris_exact(const LinkGeometry& geom, const Point& bs,
                          const Point& ris, double ris_orientation,
                          const RisConfig& cfg, double tol) {
    const double tx = std::cos(ris_orientation);
    const double ty = std::sin(ris_orientation);
    double nx = -ty, ny = tx;
    // orient the normal toward the reflecting side (where the user sits)
    if (-(ris.x * nx + ris.y * ny) < 0.0) {
        nx = -nx;
        ny = -ny;
    }
    const double r_br0 = std::hypot(bs.x - ris.x, bs.y - ris.y);
    const double r_ru0 = std::hypot(ris.x, ris.y);
    const double phase_slope =
        std::sin(geom.theta_br) - std::sin(geom.theta_ru);

    const auto field = [&](double x, bool imag) {
        const double qx = ris.x + x * tx;
        const double qy = ris.y + x * ty;
        const double bx = bs.x - qx, by = bs.y - qy;
        const double r_br = std::hypot(bx, by);
        const double r_ru = std::hypot(qx, qy);
        const double cos_br = std::max(0.0, (bx * nx + by * ny) / r_br);
        const double cos_ru = std::max(0.0, -(qx * nx + qy * ny) / r_ru);
        const double amp =
            (cos_br + cos_ru) / (8.0 * M_PI * std::sqrt(r_br * r_ru));
        // phase relative to the aperture center; the constant part cancels
        // in the squared magnitude
        const double path = (r_br - r_br0) + (r_ru - r_ru0) - phase_slope * x;
        const double arg = -cfg.wavenumber * path;
        return amp * (imag ? std::sin(arg) : std::cos(arg));
    };

    const double L = cfg.half_length;
    const double re =
        integrate_1d([&](double x) { return field(x, false); }, -L, L, tol);
    const double im =
        integrate_1d([&](double x) { return field(x, true); }, -L, L, tol);
    return re * re + im * im;
}

double c_ris_e(const RisConfig& cfg, CrisMode mode) {
    const double rho = cfg.rho_a;
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("c_ris_e: rho_a must lie in (0,1)");
    const double L = cfg.half_length;
    const double front = L * L / (16.0 * M_PI * M_PI * M_PI);
    switch (mode) {
    case CrisMode::original: {
        const double den = 4.0 * rho - 12.0 * rho * rho + std::pow(rho, 3);
        return front * (M_PI + std::sin(2.0 * M_PI * rho) / den);
    }
    case CrisMode::corrected: {
        // 4r - 12r^2 + 8r^3 = 4r(1-r)(1-2r); the sine ratio reduces to a
        // sinc with no singularity at r = 1/2
        const double u = (1.0 - 2.0 * rho) * M_PI;
        const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
        return front * (M_PI + M_PI * sinc / (4.0 * rho * (1.0 - rho)));
    }
    case CrisMode::numeric: {
        const double mean = integrate_1d(
            [rho](double t) {
                const double c =
                    std::cos(rho * t) + std::cos((1.0 - rho) * t);
                return c * c;
            },
            0.0, M_PI, 1e-12) / M_PI;
        const double scale = L / (4.0 * M_PI);
        return scale * scale * mean;
    }
    }
    throw std::logic_error("c_ris_e: unknown mode");
}

double sample_fading_power(const FadingSpec& spec, RngStream& rng) {
    return rng.gamma_unit_mean(spec.m);
}

double gamma_cdf_bound(double x, const FadingSpec& spec) {
    if (x < 0.0) throw std::domain_error("gamma_cdf_bound: x must be >= 0");
    return std::pow(-std::expm1(-spec.eta * x), spec.m);
}

ExactPathSetup make_reflection_setup(double r_br, double r_ru, double theta_br,
                                     double theta_ru) {
    // Local frame: surface along the x-axis, normal +y, both endpoints on
    // the +y side. Shift so the user lands at the origin.
    const Point user_local{r_ru * std::sin(theta_ru), r_ru * std::cos(theta_ru)};
    const Point bs_local{-r_br * std::sin(theta_br), r_br * std::cos(theta_br)};
    ExactPathSetup s;
    s.ris = {-user_local.x, -user_local.y};
    s.bs = {bs_local.x - user_local.x, bs_local.y - user_local.y};
    s.orientation = 0.0;
    s.geom = {r_br, r_ru, theta_br + theta_ru, theta_br, theta_ru};
    return s;
}

} // namespace riscov
