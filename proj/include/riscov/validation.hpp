#ifndef RISCOV_VALIDATION_HPP
#define RISCOV_VALIDATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riscov/mcsim.hpp"
#include "riscov/params.hpp"

namespace riscov {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool informational = false; // expected-divergence entries never fail a run
    double measured = 0.0;      // headline figure: max error, ratio, gap
    std::string detail;
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Independent oracles; deliberately separate code paths from the library
// implementations they are compared against.
namespace oracle {

// 2F1 by direct summation of the transformed series
// (1-z)^-b * sum_k (c-a)_k (b)_k / ((c)_k k!) w^k, w = z/(z-1), with an
// explicit geometric tail bound.
double hyp2f1_series(double a, double b, double c, double z);

// erfc by composite 64-point Gauss-Legendre quadrature of the defining
// integral.
double erfc_quadrature(double x);

// Gamma via a Stirling series with Bernoulli corrections after shifting the
// argument above 12.
double gamma_stirling(double x);

} // namespace oracle

// Kolmogorov-Smirnov sup distance of samples against a CDF; sorts a copy.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Half-width to use when comparing against an estimate: the normal interval,
// or the rule-of-three bound when the estimate saturated at 0 or 1.
double comparison_halfwidth(const CoverageEstimate& estimate);

// Individual validation checks; `trials`/`seed` apply to the Monte Carlo
// backed ones.
CheckResult check_hypergeometric();
CheckResult check_erfc_gamma();
CheckResult check_cris_constant();
CheckResult check_cris_original_divergence(); // informational
CheckResult check_far_field();
CheckResult check_mean_interference(std::uint64_t trials, std::uint64_t seed);
CheckResult check_theorem_vs_corollary();
CheckResult check_bound_directions(std::uint64_t trials, std::uint64_t seed);
CheckResult check_angle_uniformity(std::uint64_t samples, std::uint64_t seed);

// The full oracle suite at the given Monte Carlo budget.
ValidationReport run_validation(std::uint64_t trials, std::uint64_t seed);

} // namespace riscov

#endif
