#ifndef RISCOV_SWEEP_HPP
#define RISCOV_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "riscov/config.hpp"

namespace riscov {

struct SweepRow {
    double sweep_value = 0.0;
    ScenarioMode mode = ScenarioMode::ris_noma;
    std::optional<double> p_t_analytic;
    std::optional<double> p_c_analytic;
    std::optional<CoverageEstimate> mc_typical;
    std::optional<CoverageEstimate> mc_connected;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string diagnostics; // per-row failure notes, empty when clean
};

// Applies the sweep variable to a copy of the base parameters.
NetworkParams apply_sweep_value(const NetworkParams& base, SweepVariable var,
                                double value);

// One row per (sweep value, mode). Engine failures leave the corresponding
// fields empty and store the reason in `diagnostics`.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

// Fixed column order:
// sweep_value,mode,p_t_analytic,p_c_analytic,p_t_mc,p_t_ci,p_c_mc,p_c_ci,trials,seed
std::string render_csv(const std::vector<SweepRow>& rows, const RunConfig& cfg);

// Writes the CSV; rows with diagnostics also produce `path`.diagnostics.txt.
void write_csv(const std::vector<SweepRow>& rows, const RunConfig& cfg,
               const std::string& path);

// Gnuplot script drawing one coverage curve per (mode, engine) present in
// the rows; typical user in the first plot block, connected user second.
std::string render_plot_script(const std::vector<SweepRow>& rows,
                               const RunConfig& cfg,
                               const std::string& csv_path);

void emit_plot_script(const std::vector<SweepRow>& rows, const RunConfig& cfg,
                      const std::string& csv_path,
                      const std::string& script_path);

} // namespace riscov

#endif
