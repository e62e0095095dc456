#ifndef RISCOV_MCSIM_HPP
#define RISCOV_MCSIM_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "riscov/analytic.hpp"
#include "riscov/geometry.hpp"
#include "riscov/params.hpp"

namespace riscov {

enum class ScenarioMode { ris_noma, ris_oma, traditional_noma };

// Which value stands in for the mean SNRs in the ordering conditions:
// the closed forms, or a warm-up pass of trials/10 samples.
enum class ExpectationMode { analytic, empirical };

// The five per-trial SINR/SNR values of one network draw.
struct SinrSample {
    double gamma_sic = 0.0;
    double gamma_t = 0.0;
    double gamma_c = 0.0;
    double gamma_t_oma = 0.0;
    double gamma_c_oma = 0.0;
};

struct CoverageEstimate {
    double probability = 0.0;
    double ci_halfwidth = 0.0; // 1.96*sqrt(p(1-p)/trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct ExpectationEstimates {
    double gamma_c_e_hat = 0.0, gamma_c_e_ci = 0.0;
    double gamma_t_e_hat = 0.0, gamma_t_e_ci = 0.0;
    double mean_ic_hat = 0.0, mean_ic_ci = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// One full network draw: PPP on the annulus (R_L, r_max), surface uniform in
// the LoS ball, association to the BS nearest the surface (nearest the user
// in the no-surface baseline), per-link Nakagami fading, interference sums
// over every non-serving BS.
SinrSample run_trial(const NetworkParams& p, ScenarioMode mode, RngStream& rng);

// Geometry-only draw, exposed for the distribution checks.
Realization sample_realization(const NetworkParams& p, RngStream& rng,
                               std::uint64_t* resample_count = nullptr);

// Coverage estimates for the typical and connected user. Trials are
// partitioned into fixed-size batches on counter-derived substreams and
// merged in batch order, so results are identical for any worker count.
std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage(
    const NetworkParams& p, ScenarioMode mode, std::uint64_t trials,
    std::uint64_t seed, ExpectationMode emode = ExpectationMode::analytic);

// Empirical means of the two reference SNRs and the connected-user
// interference, with normal-approximation confidence half-widths.
ExpectationEstimates estimate_expectations(const NetworkParams& p,
                                           std::uint64_t trials,
                                           std::uint64_t seed);

// Worker cap from RIS_COVERAGE_THREADS (0 or unset = hardware concurrency).
int worker_count();

// Runs fn(batch_index, first_item, last_item) over fixed-size batches on up
// to worker_count() threads. Batch geometry does not depend on the worker
// count, so per-batch outputs reduce deterministically.
void for_each_batch(std::uint64_t items, std::uint64_t batch_size,
                    const std::function<void(std::uint64_t, std::uint64_t,
                                             std::uint64_t)>& fn);

} // namespace riscov

#endif
