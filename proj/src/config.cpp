#include "riscov/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace riscov {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " +
                                what);
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) fail_line(line, "trailing characters in number");
        return x;
    } catch (const std::invalid_argument&) {
        fail_line(line, "expected a number, got '" + v + "'");
    } catch (const std::out_of_range&) {
        fail_line(line, "number out of range: '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const unsigned long long x = std::stoull(v, &used);
        if (used != v.size()) fail_line(line, "trailing characters in integer");
        return x;
    } catch (const std::exception&) {
        fail_line(line, "expected a non-negative integer, got '" + v + "'");
    }
}

int parse_int(const std::string& v, int line) {
    const std::uint64_t x = parse_u64(v, line);
    if (x > 1u << 20) fail_line(line, "integer too large: '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail_line(line, "expected true/false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

ScenarioMode parse_mode(const std::string& v, int line) {
    if (v == "ris_noma") return ScenarioMode::ris_noma;
    if (v == "ris_oma") return ScenarioMode::ris_oma;
    if (v == "traditional_noma") return ScenarioMode::traditional_noma;
    fail_line(line, "unknown mode '" + v + "'");
}

Engine parse_engine(const std::string& v, int line) {
    if (v == "analytic") return Engine::analytic;
    if (v == "montecarlo") return Engine::montecarlo;
    fail_line(line, "unknown engine '" + v + "'");
}

SweepVariable parse_variable(const std::string& v, int line) {
    if (v == "transmit_snr_db") return SweepVariable::transmit_snr_db;
    if (v == "ris_halflength") return SweepVariable::ris_halflength;
    if (v == "alpha_t") return SweepVariable::alpha_t;
    if (v == "lambda_b") return SweepVariable::lambda_b;
    fail_line(line, "unknown sweep variable '" + v + "'");
}

CrisMode parse_cris(const std::string& v, int line) {
    if (v == "original") return CrisMode::original;
    if (v == "corrected") return CrisMode::corrected;
    if (v == "numeric") return CrisMode::numeric;
    fail_line(line, "unknown cris_mode '" + v + "'");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
void normalize(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    cfg.sweep.values = {90, 92, 94, 96, 98, 100, 102, 104};
    cfg.sweep.modes = {ScenarioMode::ris_noma};
    cfg.sweep.engines = {Engine::analytic, Engine::montecarlo};

    bool saw_gamma_t = false, saw_gamma_c = false;
    bool saw_rate_t = false, saw_rate_c = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string entry = trim(raw);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos) fail_line(line, "expected 'key = value'");
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) fail_line(line, "empty key");
        if (value.empty()) fail_line(line, "empty value for '" + key + "'");

        NetworkParams& p = cfg.params;
        if (key == "lambda_b") p.lambda_b = parse_double(value, line);
        else if (key == "lambda_u") p.lambda_u = parse_double(value, line);
        else if (key == "r_l") p.R_L = parse_double(value, line);
        else if (key == "r_c") p.r_c = parse_double(value, line);
        else if (key == "p_b_dbm") p.P_b = dbm_to_watts(parse_double(value, line));
        else if (key == "p_b_w") p.P_b = parse_double(value, line);
        else if (key == "sigma2_dbm")
            p.sigma2 = dbm_to_watts(parse_double(value, line));
        else if (key == "sigma2_w") p.sigma2 = parse_double(value, line);
        else if (key == "a_c") p.a_c = parse_double(value, line);
        else if (key == "a_t") p.a_t = parse_double(value, line);
        else if (key == "alpha_c") p.alpha_c = parse_double(value, line);
        else if (key == "alpha_t") p.alpha_t = parse_double(value, line);
        else if (key == "c_db")
            p.C = std::pow(10.0, parse_double(value, line) / 10.0);
        else if (key == "c_linear") p.C = parse_double(value, line);
        else if (key == "l_half") p.L = parse_double(value, line);
        else if (key == "m_t") p.m_t = parse_int(value, line);
        else if (key == "m_c") p.m_c = parse_int(value, line);
        else if (key == "rho_t") p.rho_t = parse_double(value, line);
        else if (key == "rho_a") p.rho_a = parse_double(value, line);
        else if (key == "nlos_penalty_db")
            p.nlos_penalty_db = parse_double(value, line);
        else if (key == "gamma_sic_th") p.gamma_sic_th = parse_double(value, line);
        else if (key == "gamma_t_th") {
            p.gamma_t_th = parse_double(value, line);
            saw_gamma_t = true;
        } else if (key == "gamma_c_th") {
            p.gamma_c_th = parse_double(value, line);
            saw_gamma_c = true;
        } else if (key == "b_w") p.B_w = parse_double(value, line);
        else if (key == "rate_t") {
            p.R_t = parse_double(value, line);
            saw_rate_t = true;
        } else if (key == "rate_c") {
            p.R_c = parse_double(value, line);
            saw_rate_c = true;
        } else if (key == "wavenumber") p.wavenumber = parse_double(value, line);
        else if (key == "phase_offset") p.phase_offset = parse_double(value, line);
        else if (key == "r_max") p.r_max_override = parse_double(value, line);
        else if (key == "cris_mode") p.cris_mode = parse_cris(value, line);
        else if (key == "quad_k") p.quad_K = parse_int(value, line);
        else if (key == "sweep_variable")
            cfg.sweep.variable = parse_variable(value, line);
        else if (key == "sweep_values") {
            cfg.sweep.values.clear();
            for (const auto& item : split_list(value))
                cfg.sweep.values.push_back(parse_double(item, line));
        } else if (key == "modes") {
            cfg.sweep.modes.clear();
            for (const auto& item : split_list(value))
                cfg.sweep.modes.push_back(parse_mode(item, line));
            normalize(cfg.sweep.modes);
        } else if (key == "engines") {
            cfg.sweep.engines.clear();
            for (const auto& item : split_list(value))
                cfg.sweep.engines.push_back(parse_engine(item, line));
            normalize(cfg.sweep.engines);
        } else if (key == "trials") cfg.trials = parse_u64(value, line);
        else if (key == "seed") cfg.seed = parse_u64(value, line);
        else if (key == "output") cfg.output_path = value;
        else if (key == "emit_plot_script")
            cfg.emit_plot_script = parse_bool(value, line);
        else fail_line(line, "unknown key '" + key + "'");
    }

    // rate/threshold coupling: derive whichever side was not given
    NetworkParams& p = cfg.params;
    if (saw_rate_t && !saw_gamma_t)
        p.gamma_t_th = rate_to_threshold(p.R_t, p.B_w);
    if (saw_rate_c && !saw_gamma_c)
        p.gamma_c_th = rate_to_threshold(p.R_c, p.B_w);
    if (!saw_rate_t && p.R_t == 0.0)
        p.R_t = threshold_to_rate(p.gamma_t_th, p.B_w);
    if (!saw_rate_c && p.R_c == 0.0)
        p.R_c = threshold_to_rate(p.gamma_c_th, p.B_w);

    p.validate();
    if (cfg.sweep.values.empty())
        throw std::invalid_argument("config: sweep_values must be nonempty");
    for (std::size_t i = 1; i < cfg.sweep.values.size(); ++i)
        if (!(cfg.sweep.values[i] > cfg.sweep.values[i - 1]))
            throw std::invalid_argument(
                "config: sweep_values must be strictly increasing");
    if (cfg.sweep.modes.empty())
        throw std::invalid_argument("config: modes must be nonempty");
    if (cfg.sweep.engines.empty())
        throw std::invalid_argument("config: engines must be nonempty");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    const NetworkParams& p = cfg.params;
    std::ostringstream out;
    out << "# riscov run configuration\n";
    out << "lambda_b = " << fmt(p.lambda_b) << "\n";
    out << "lambda_u = " << fmt(p.lambda_u) << "\n";
    out << "r_l = " << fmt(p.R_L) << "\n";
    out << "r_c = " << fmt(p.r_c) << "\n";
    // linear keys round-trip exactly; the dBm forms are for human edits
    out << "p_b_w = " << fmt(p.P_b) << "\n";
    out << "sigma2_w = " << fmt(p.sigma2) << "\n";
    out << "a_c = " << fmt(p.a_c) << "\n";
    out << "a_t = " << fmt(p.a_t) << "\n";
    out << "alpha_c = " << fmt(p.alpha_c) << "\n";
    out << "alpha_t = " << fmt(p.alpha_t) << "\n";
    out << "c_linear = " << fmt(p.C) << "\n";
    out << "l_half = " << fmt(p.L) << "\n";
    out << "m_t = " << p.m_t << "\n";
    out << "m_c = " << p.m_c << "\n";
    out << "rho_t = " << fmt(p.rho_t) << "\n";
    out << "rho_a = " << fmt(p.rho_a) << "\n";
    out << "nlos_penalty_db = " << fmt(p.nlos_penalty_db) << "\n";
    out << "gamma_sic_th = " << fmt(p.gamma_sic_th) << "\n";
    out << "gamma_t_th = " << fmt(p.gamma_t_th) << "\n";
    out << "gamma_c_th = " << fmt(p.gamma_c_th) << "\n";
    out << "b_w = " << fmt(p.B_w) << "\n";
    out << "rate_t = " << fmt(p.R_t) << "\n";
    out << "rate_c = " << fmt(p.R_c) << "\n";
    out << "wavenumber = " << fmt(p.wavenumber) << "\n";
    out << "phase_offset = " << fmt(p.phase_offset) << "\n";
    if (p.r_max_override > 0.0) out << "r_max = " << fmt(p.r_max_override) << "\n";
    out << "cris_mode = " << to_string(p.cris_mode) << "\n";
    out << "quad_k = " << p.quad_K << "\n";
    out << "sweep_variable = " << to_string(cfg.sweep.variable) << "\n";
    out << "sweep_values = ";
    for (std::size_t i = 0; i < cfg.sweep.values.size(); ++i)
        out << (i ? ", " : "") << fmt(cfg.sweep.values[i]);
    out << "\n";
    out << "modes = ";
    for (std::size_t i = 0; i < cfg.sweep.modes.size(); ++i)
        out << (i ? ", " : "") << to_string(cfg.sweep.modes[i]);
    out << "\n";
    out << "engines = ";
    for (std::size_t i = 0; i < cfg.sweep.engines.size(); ++i)
        out << (i ? ", " : "") << to_string(cfg.sweep.engines[i]);
    out << "\n";
    out << "trials = " << cfg.trials << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "output = " << cfg.output_path << "\n";
    out << "emit_plot_script = " << (cfg.emit_plot_script ? "true" : "false")
        << "\n";
    return out.str();
}

std::string to_string(ScenarioMode mode) {
    switch (mode) {
    case ScenarioMode::ris_noma: return "ris_noma";
    case ScenarioMode::ris_oma: return "ris_oma";
    case ScenarioMode::traditional_noma: return "traditional_noma";
    }
    return "?";
}

std::string to_string(Engine engine) {
    return engine == Engine::analytic ? "analytic" : "montecarlo";
}

std::string to_string(SweepVariable variable) {
    switch (variable) {
    case SweepVariable::transmit_snr_db: return "transmit_snr_db";
    case SweepVariable::ris_halflength: return "ris_halflength";
    case SweepVariable::alpha_t: return "alpha_t";
    case SweepVariable::lambda_b: return "lambda_b";
    }
    return "?";
}

std::string to_string(CrisMode mode) {
    switch (mode) {
    case CrisMode::original: return "original";
    case CrisMode::corrected: return "corrected";
    case CrisMode::numeric: return "numeric";
    }
    return "?";
}

} // namespace riscov
