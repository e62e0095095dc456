#ifndef RISCOV_ANALYTIC_HPP
#define RISCOV_ANALYTIC_HPP

#include "riscov/params.hpp"

namespace riscov {

struct CoveragePair {
    double p_typical = 0.0;
    double p_connected = 0.0;
};

// Closed-form evaluations clamp to [0,1]; the raw value is kept so callers
// can report how far outside the unit interval an approximation landed.
struct CoverageResult {
    double value = 0.0;    // clamped to [0,1]
    double raw = 0.0;      // before clamping
    bool clamped = false;
    double cancellation = 1.0; // max |partial sum| / |raw|, alternating sums
};

// Laplace transform of the connected user's interference at argument s.
double laplace_connected(double s, const NetworkParams& p);

// Laplace transform of the typical user's reflected interference,
// conditioned on the serving-path distances.
double laplace_typical_ris(double s, double r_br0, double r_ru0,
                           const NetworkParams& p);

// Mean interference power seen by the connected user.
double mean_interference_connected(const NetworkParams& p);

// Mean received SNR of the connected user in the orthogonal-access
// reference, with the interference replaced by its mean.
double gamma_c_e(const NetworkParams& p);

// Regularized mean received SNR of the typical user in the
// orthogonal-access reference.
double gamma_t_e(const NetworkParams& p);

// Effective threshold of the typical user's coverage event: the binding one
// of the SIC threshold, the rate threshold, and the ordering threshold.
double upsilon(const NetworkParams& p);

// Typical-user coverage probability by the double-integral form; works for
// any alpha_t > 0. tol is the absolute quadrature budget.
CoverageResult coverage_typical(const NetworkParams& p, double tol);

// Typical-user coverage probability by the Chebyshev-Gauss/erfc closed form;
// requires alpha_t == 4.
CoverageResult coverage_typical_closed(const NetworkParams& p, int quad_order);

// Connected-user coverage probability (two alternating binomial sums).
CoverageResult coverage_connected_closed(const NetworkParams& p);

// Both closed forms at once, taking the quadrature fast path when
// alpha_t == 4; values clamped to [0,1].
CoveragePair analytic_coverage(const NetworkParams& p);

double binomial(int n, int k);

} // namespace riscov

#endif
