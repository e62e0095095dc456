// Command-line front end: parameter sweeps, single-point evaluation, and the
// oracle validation suite for the dual-engine coverage analyzer.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "riscov/analytic.hpp"
#include "riscov/config.hpp"
#include "riscov/mcsim.hpp"
#include "riscov/special.hpp"
#include "riscov/sweep.hpp"
#include "riscov/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitValidation = 3;

riscov::RunConfig load(const std::string& path, std::uint64_t trials,
                       std::uint64_t seed, const std::string& out,
                       bool emit_plot) {
    riscov::RunConfig cfg =
        path.empty() ? riscov::parse_config("") : riscov::load_config(path);
    if (trials > 0) cfg.trials = trials;
    if (seed != 0) cfg.seed = seed;
    if (!out.empty()) cfg.output_path = out;
    if (emit_plot) cfg.emit_plot_script = true;
    return cfg;
}

int cmd_sweep(const riscov::RunConfig& cfg) {
    const auto rows = riscov::run_sweep(cfg);
    riscov::write_csv(rows, cfg, cfg.output_path);
    std::printf("wrote %zu rows to %s\n", rows.size(),
                cfg.output_path.c_str());
    if (cfg.emit_plot_script) {
        const std::string script = cfg.output_path + ".gp";
        riscov::emit_plot_script(rows, cfg, cfg.output_path, script);
        std::printf("wrote plot script to %s\n", script.c_str());
    }
    for (const auto& row : rows)
        if (!row.diagnostics.empty()) {
            std::fprintf(stderr, "note: some rows carry diagnostics (see %s)\n",
                         (cfg.output_path + ".diagnostics.txt").c_str());
            return kExitNumeric;
        }
    return kExitOk;
}

int cmd_point(const riscov::RunConfig& cfg) {
    const riscov::NetworkParams& p = cfg.params;
    std::printf("transmit SNR          : %.2f dB\n",
                10.0 * std::log10(p.P_b / p.sigma2));
    std::printf("r_c                   : %g m\n", p.r_c);
    std::printf("upsilon               : %.6g\n", riscov::upsilon(p));
    std::printf("gamma_c_e / gamma_t_e : %.6g / %.6g\n", riscov::gamma_c_e(p),
                riscov::gamma_t_e(p));

    const riscov::CoverageResult pt =
        p.alpha_t == 4.0 ? riscov::coverage_typical_closed(p, p.quad_K)
                         : riscov::coverage_typical(p, 1e-6);
    const riscov::CoverageResult pc = riscov::coverage_connected_closed(p);
    std::printf("analytic   P_t = %.6g (raw %.6g%s)\n", pt.value, pt.raw,
                pt.clamped ? ", clamped" : "");
    std::printf("analytic   P_c = %.6g (raw %.6g%s)\n", pc.value, pc.raw,
                pc.clamped ? ", clamped" : "");

    for (const riscov::ScenarioMode mode : cfg.sweep.modes) {
        const auto [t, c] =
            riscov::estimate_coverage(p, mode, cfg.trials, cfg.seed);
        std::printf("montecarlo P_t = %.6g +- %.2g, P_c = %.6g +- %.2g  [%s, %llu trials]\n",
                    t.probability, t.ci_halfwidth, c.probability,
                    c.ci_halfwidth, riscov::to_string(mode).c_str(),
                    static_cast<unsigned long long>(cfg.trials));
    }

    // the closed-form reference SNRs replace means with mean-interference
    // denominators, so the simulated/analytic ratio is reported, not asserted
    const auto ee = riscov::estimate_expectations(p, cfg.trials, cfg.seed);
    std::printf("E[I_c]     : mc %.4g +- %.2g vs closed form %.4g\n",
                ee.mean_ic_hat, ee.mean_ic_ci,
                riscov::mean_interference_connected(p));
    std::printf("E[snr_c]   : mc %.4g vs gamma_c_e %.4g (ratio %.3f)\n",
                ee.gamma_c_e_hat, riscov::gamma_c_e(p),
                ee.gamma_c_e_hat / riscov::gamma_c_e(p));
    std::printf("E[snr_t]   : mc %.4g vs gamma_t_e %.4g (ratio %.3g)\n",
                ee.gamma_t_e_hat, riscov::gamma_t_e(p),
                ee.gamma_t_e_hat / riscov::gamma_t_e(p));
    return kExitOk;
}

int cmd_validate(std::uint64_t trials, std::uint64_t seed) {
    const riscov::ValidationReport report =
        riscov::run_validation(trials, seed);
    for (const auto& check : report.checks) {
        const char* tag = check.informational ? "INFO"
                          : check.pass        ? "PASS"
                                              : "FAIL";
        std::printf("[%s] %-55s %s (%.1fs)\n", tag, check.name.c_str(),
                    check.detail.c_str(), check.seconds);
    }
    return report.all_passed() ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-engine coverage analyzer for surface-assisted NOMA downlinks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool emit_plot = false;

    auto* sweep = app.add_subcommand("sweep", "run the configured sweep, write CSV");
    sweep->add_option("config", config_path, "config file (key = value lines)");
    sweep->add_option("--trials", trials, "Monte Carlo trials per point");
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("--out", out_path, "output CSV path");
    sweep->add_flag("--emit-plot", emit_plot, "also write a gnuplot script");

    auto* point = app.add_subcommand("point", "evaluate both engines at the configured parameters");
    point->add_option("config", config_path, "config file");
    point->add_option("--trials", trials, "Monte Carlo trials");
    point->add_option("--seed", seed, "master seed");

    auto* validate = app.add_subcommand("validate", "run the oracle cross-check suite");
    validate->add_option("--trials", trials, "Monte Carlo trials per check");
    validate->add_option("--seed", seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return cmd_validate(trials > 0 ? trials : 100000,
                                seed != 0 ? seed : 42);
        const riscov::RunConfig cfg =
            load(config_path, trials, seed, out_path, emit_plot);
        if (sweep->parsed()) return cmd_sweep(cfg);
        return cmd_point(cfg);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const riscov::numeric_error& e) {
        std::fprintf(stderr, "numeric failure: %s (partial value %g)\n",
                     e.what(), e.partial_value);
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
}
