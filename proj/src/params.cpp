#include "riscov/params.hpp"

#include <cmath>
#include <stdexcept>

namespace riscov {

double NetworkParams::r_max() const {
    if (r_max_override > 0.0) return r_max_override;
    return 100.0 / std::sqrt(M_PI * lambda_b);
}

RisConfig NetworkParams::ris_config() const {
    return RisConfig{L, wavenumber, phase_offset, rho_a};
}

void NetworkParams::validate() const {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("NetworkParams: " + what);
    };
    if (!(lambda_b > 0.0)) fail("lambda_b must be positive");
    if (!(R_L > 0.0)) fail("R_L must be positive");
    if (!(r_c > 0.0)) fail("r_c must be positive");
    if (!(P_b > 0.0)) fail("P_b must be positive");
    if (!(sigma2 > 0.0)) fail("sigma2 must be positive");
    if (!(a_c > 0.0) || !(a_t > 0.0)) fail("power fractions must be positive");
    if (std::abs(a_c + a_t - 1.0) > 1e-12) fail("a_c + a_t must equal 1");
    if (!(a_c > a_t)) fail("a_c must exceed a_t");
    if (!(alpha_c > 2.0)) fail("alpha_c must exceed 2");
    if (!(alpha_t > 0.0)) fail("alpha_t must be positive");
    if (!(C > 0.0)) fail("C must be positive");
    if (!(L > 0.0)) fail("L must be positive");
    if (m_t < 1 || m_c < 1) fail("Nakagami orders must be >= 1");
    if (!(rho_t >= 0.0 && rho_t <= 1.0)) fail("rho_t must lie in [0,1]");
    if (!(rho_a > 0.0 && rho_a < 1.0)) fail("rho_a must lie in (0,1)");
    if (!(nlos_penalty_db >= 0.0)) fail("nlos_penalty_db must be >= 0");
    if (!(gamma_sic_th > 0.0) || !(gamma_t_th > 0.0) || !(gamma_c_th > 0.0))
        fail("thresholds must be positive");
    if (!(a_c - gamma_sic_th * a_t > 0.0))
        fail("a_c - gamma_sic_th*a_t must be positive");
    if (!(a_c - gamma_c_th * a_t > 0.0))
        fail("a_c - gamma_c_th*a_t must be positive");
    if (!(B_w > 0.0)) fail("B_w must be positive");
    if (R_t > 0.0) {
        const double implied = rate_to_threshold(R_t, B_w);
        if (std::abs(implied - gamma_t_th) > 1e-9 * gamma_t_th)
            fail("R_t inconsistent with gamma_t_th");
    }
    if (R_c > 0.0) {
        const double implied = rate_to_threshold(R_c, B_w);
        if (std::abs(implied - gamma_c_th) > 1e-9 * gamma_c_th)
            fail("R_c inconsistent with gamma_c_th");
    }
    if (quad_K < 1) fail("quad_K must be >= 1");
    if (!(wavenumber > 0.0)) fail("wavenumber must be positive");
    if (r_max_override != 0.0 && !(r_max_override > R_L))
        fail("r_max override must exceed R_L");
}

double rate_to_threshold(double rate, double bandwidth) {
    return std::exp2(rate / bandwidth) - 1.0;
}

double threshold_to_rate(double gamma, double bandwidth) {
    return bandwidth * std::log2(1.0 + gamma);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

} // namespace riscov
