#ifndef RISCOV_PARAMS_HPP
#define RISCOV_PARAMS_HPP

#include <string>

#include "riscov/channel.hpp"

namespace riscov {

// Every scalar of the system model, in linear/SI units. Powers enter the
// tool in dBm and are converted once at the configuration boundary.
struct NetworkParams {
    double lambda_b = 1.0 / (300.0 * 300.0 * M_PI); // BS density, per m^2
    double lambda_u = 1e-4;  // user density; informational, enters no formula
    double R_L = 25.0;       // LoS ball radius around the typical user, m
    double r_c = 50.0;       // connected-user link distance, m
    double P_b = 1e-3;       // BS transmit power, W (0 dBm)
    double sigma2 = 1e-12;   // noise power, W (-90 dBm)
    double a_c = 0.6;        // connected-user power fraction
    double a_t = 0.4;        // typical-user power fraction
    double alpha_c = 4.0;    // direct-link path loss exponent
    double alpha_t = 2.4;    // reflected-link path loss exponent
    double C = 1.0;          // direct-link intercept, linear
    double L = 0.75;         // surface half-length, m
    int m_t = 4;             // Nakagami order, typical side
    int m_c = 4;             // Nakagami order, connected side
    double rho_t = 1.0;      // fraction of interference reaching the typical user
    double rho_a = 0.5;      // incidence/reflection split of the turn angle
    // Blockage penalty on the typical user's direct links in the no-surface
    // baseline. The premise of the comparison is a blocked typical user, so
    // its direct path carries a LoS->NLoS gap; 20 dB is a mid-band urban
    // figure. Set to 0 to compare against an unobstructed direct link.
    double nlos_penalty_db = 20.0;
    double gamma_sic_th = 1e-2;
    double gamma_t_th = 1e-2;
    double gamma_c_th = 1e-2;
    double B_w = 1e7;        // bandwidth, Hz
    double R_t = 0.0;        // typical-user rate, bit/s; 0 = derive from threshold
    double R_c = 0.0;        // connected-user rate, bit/s; 0 = derive
    double wavenumber = 62.8318530718; // aperture-integral validation only
    double phase_offset = 0.0;
    double r_max_override = 0.0; // 0 = automatic truncation radius
    CrisMode cris_mode = CrisMode::original;
    int quad_K = 64;         // Chebyshev-Gauss order for the alpha_t=4 form

    // PPP truncation radius: 100 nearest-neighbor scales, far enough that a
    // single interferer there contributes < 1e-10 of the serving power at
    // the default exponents.
    double r_max() const;

    RisConfig ris_config() const;

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    friend bool operator==(const NetworkParams&, const NetworkParams&) = default;
};

// Threshold <-> rate coupling: gamma = 2^(R/B_w) - 1.
double rate_to_threshold(double rate, double bandwidth);
double threshold_to_rate(double gamma, double bandwidth);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

} // namespace riscov

#endif
