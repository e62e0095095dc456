#ifndef RISCOV_CONFIG_HPP
#define RISCOV_CONFIG_HPP

#include <string>
#include <vector>

#include "riscov/mcsim.hpp"
#include "riscov/params.hpp"

namespace riscov {

enum class SweepVariable { transmit_snr_db, ris_halflength, alpha_t, lambda_b };
enum class Engine { analytic, montecarlo };

struct SweepSpec {
    SweepVariable variable = SweepVariable::transmit_snr_db;
    std::vector<double> values;       // nonempty, strictly increasing
    std::vector<ScenarioMode> modes;  // normalized order, deduplicated
    std::vector<Engine> engines;      // normalized order, deduplicated
    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct RunConfig {
    NetworkParams params;
    SweepSpec sweep;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 42;
    std::string output_path = "sweep.csv";
    bool emit_plot_script = false;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Flat `key = value` text with '#' comments; unknown keys and malformed
// lines raise std::invalid_argument carrying the line number. Missing keys
// fall back to the defaults above.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Lossless inverse of parse_config.
std::string serialize_config(const RunConfig& cfg);

std::string to_string(ScenarioMode mode);
std::string to_string(Engine engine);
std::string to_string(SweepVariable variable);
std::string to_string(CrisMode mode);

} // namespace riscov

#endif
