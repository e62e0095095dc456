#include "riscov/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace riscov {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

bool has_engine(const RunConfig& cfg, Engine e) {
    return std::find(cfg.sweep.engines.begin(), cfg.sweep.engines.end(), e) !=
           cfg.sweep.engines.end();
}

} // namespace

NetworkParams apply_sweep_value(const NetworkParams& base, SweepVariable var,
                                double value) {
    NetworkParams p = base;
    switch (var) {
    case SweepVariable::transmit_snr_db:
        p.P_b = p.sigma2 * std::pow(10.0, value / 10.0);
        break;
    case SweepVariable::ris_halflength:
        p.L = value;
        break;
    case SweepVariable::alpha_t:
        p.alpha_t = value;
        break;
    case SweepVariable::lambda_b:
        p.lambda_b = value;
        break;
    }
    return p;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
    std::vector<SweepRow> rows;
    rows.reserve(cfg.sweep.values.size() * cfg.sweep.modes.size());
    for (const double value : cfg.sweep.values) {
        for (const ScenarioMode mode : cfg.sweep.modes) {
            SweepRow row;
            row.sweep_value = value;
            row.mode = mode;
            row.seed = cfg.seed;
            const NetworkParams p =
                apply_sweep_value(cfg.params, cfg.sweep.variable, value);
            // the closed forms model the surface-assisted NOMA pair only
            if (has_engine(cfg, Engine::analytic) &&
                mode == ScenarioMode::ris_noma) {
                try {
                    const CoverageResult t =
                        p.alpha_t == 4.0
                            ? coverage_typical_closed(p, p.quad_K)
                            : coverage_typical(p, 1e-6);
                    const CoverageResult c = coverage_connected_closed(p);
                    row.p_t_analytic = t.value;
                    row.p_c_analytic = c.value;
                    if (t.clamped)
                        row.diagnostics += "analytic p_t clamped from " +
                                           std::to_string(t.raw) + "; ";
                    if (c.clamped)
                        row.diagnostics += "analytic p_c clamped from " +
                                           std::to_string(c.raw) + "; ";
                } catch (const std::exception& e) {
                    row.diagnostics += std::string("analytic: ") + e.what() + "; ";
                }
            }
            if (has_engine(cfg, Engine::montecarlo)) {
                try {
                    auto [t, c] = estimate_coverage(p, mode, cfg.trials, cfg.seed);
                    row.mc_typical = t;
                    row.mc_connected = c;
                    row.trials = cfg.trials;
                } catch (const std::exception& e) {
                    row.diagnostics +=
                        std::string("montecarlo: ") + e.what() + "; ";
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string render_csv(const std::vector<SweepRow>& rows,
                       const RunConfig& cfg) {
    const NetworkParams& p = cfg.params;
    std::ostringstream out;
    out << "# riscov coverage sweep\n";
    out << "# sweep_variable = " << to_string(cfg.sweep.variable) << "\n";
    out << "# r_c_m = " << fmt(p.r_c) << " (connected-user link distance)\n";
    out << "# rho_t = " << fmt(p.rho_t) << ", rho_a = " << fmt(p.rho_a)
        << ", cris_mode = " << to_string(p.cris_mode) << "\n";
    out << "# lambda_b = " << fmt(p.lambda_b) << ", R_L = " << fmt(p.R_L)
        << ", L = " << fmt(p.L) << ", alpha_c = " << fmt(p.alpha_c)
        << ", alpha_t = " << fmt(p.alpha_t) << "\n";
    out << "sweep_value,mode,p_t_analytic,p_c_analytic,p_t_mc,p_t_ci,p_c_mc,"
           "p_c_ci,trials,seed\n";
    for (const SweepRow& r : rows) {
        out << fmt(r.sweep_value) << ',' << to_string(r.mode) << ',';
        if (r.p_t_analytic) out << fmt(*r.p_t_analytic);
        out << ',';
        if (r.p_c_analytic) out << fmt(*r.p_c_analytic);
        out << ',';
        if (r.mc_typical)
            out << fmt(r.mc_typical->probability) << ','
                << fmt(r.mc_typical->ci_halfwidth) << ',';
        else
            out << ",,";
        if (r.mc_connected)
            out << fmt(r.mc_connected->probability) << ','
                << fmt(r.mc_connected->ci_halfwidth) << ',';
        else
            out << ",,";
        if (r.trials > 0) out << r.trials;
        out << ',' << r.seed << "\n";
    }
    return out.str();
}

void write_csv(const std::vector<SweepRow>& rows, const RunConfig& cfg,
               const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << render_csv(rows, cfg);

    std::string notes;
    for (const SweepRow& r : rows)
        if (!r.diagnostics.empty())
            notes += fmt(r.sweep_value) + "," + to_string(r.mode) + ": " +
                     r.diagnostics + "\n";
    if (!notes.empty()) {
        std::ofstream diag(path + ".diagnostics.txt", std::ios::binary);
        diag << notes;
    }
}

std::string render_plot_script(const std::vector<SweepRow>& rows,
                               const RunConfig& cfg,
                               const std::string& csv_path) {
    if (rows.empty())
        throw std::invalid_argument("render_plot_script: no rows");
    struct Curve {
        ScenarioMode mode;
        Engine engine;
    };
    std::vector<Curve> curves;
    for (const ScenarioMode mode : cfg.sweep.modes) {
        bool any_analytic = false, any_mc = false;
        for (const SweepRow& r : rows) {
            if (r.mode != mode) continue;
            any_analytic |= r.p_t_analytic.has_value() ||
                            r.p_c_analytic.has_value();
            any_mc |= r.mc_typical.has_value();
        }
        if (any_analytic) curves.push_back({mode, Engine::analytic});
        if (any_mc) curves.push_back({mode, Engine::montecarlo});
    }

    std::ostringstream out;
    out << "# gnuplot script generated by riscov\n";
    out << "set datafile separator ','\n";
    out << "set xlabel '" << to_string(cfg.sweep.variable) << "'\n";
    out << "set ylabel 'coverage probability'\n";
    out << "set yrange [0:1]\n";
    out << "set key outside\n";
    out << "set terminal pngcairo size 900,600\n";

    auto emit_plot = [&](const char* user, int analytic_col, int mc_col) {
        out << "set output 'coverage_" << user << ".png'\n";
        out << "plot \\\n";
        bool first = true;
        for (const Curve& c : curves) {
            const int col =
                c.engine == Engine::analytic ? analytic_col : mc_col;
            if (!first) out << ", \\\n";
            first = false;
            out << "  '" << csv_path << "' every ::1 using 1:(strcol(2) eq '"
                << to_string(c.mode) << "' ? column(" << col
                << ") : 1/0) with linespoints title '" << to_string(c.mode)
                << " " << to_string(c.engine) << " " << user << "'";
        }
        out << "\n";
    };
    emit_plot("typical", 3, 5);
    emit_plot("connected", 4, 7);
    return out.str();
}

void emit_plot_script(const std::vector<SweepRow>& rows, const RunConfig& cfg,
                      const std::string& csv_path,
                      const std::string& script_path) {
    std::ofstream out(script_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + script_path + "'");
    out << render_plot_script(rows, cfg, csv_path);
}

} // namespace riscov
