#include "lambdaosc/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lambdaosc {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' needs a number, got '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v, int line) {
    const double x = parse_double(key, v, line);
    if (x != std::floor(x))
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' needs an integer, got '" + v + "'");
    return static_cast<int>(x);
}

CaseSelect parse_case(const std::string& v, int line) {
    if (v == "1") return CaseSelect::I;
    if (v == "2") return CaseSelect::II;
    if (v == "both") return CaseSelect::Both;
    throw ConfigError("line " + std::to_string(line) +
                      ": case must be 1, 2 or both, got '" + v + "'");
}

} // namespace

RunConfig RunConfig::from_text(const std::string& text,
                               const std::string& origin) {
    RunConfig cfg;
    bool nbar_given = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ": line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + trim(raw) +
                              "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (cfg.given.count(key))
            throw ConfigError(origin + ": line " + std::to_string(lineno) +
                              ": duplicate key '" + key + "'");
        cfg.given[key] = val;

        if (key == "omega") cfg.params.omega = parse_double(key, val, lineno);
        else if (key == "omega23") cfg.params.omega23 = parse_double(key, val, lineno);
        else if (key == "Omega0") cfg.params.Omega0 = parse_double(key, val, lineno);
        else if (key == "g") cfg.params.g = parse_double(key, val, lineno);
        else if (key == "gamma2") cfg.params.gamma2 = parse_double(key, val, lineno);
        else if (key == "gamma3") cfg.params.gamma3 = parse_double(key, val, lineno);
        else if (key == "gamma") cfg.params.gamma = parse_double(key, val, lineno);
        else if (key == "kappa") cfg.params.kappa = parse_double(key, val, lineno);
        else if (key == "nbar") { cfg.params.nbar = parse_double(key, val, lineno); nbar_given = true; }
        else if (key == "omega_si") cfg.omega_si = parse_double(key, val, lineno);
        else if (key == "temperature") cfg.temperature = parse_double(key, val, lineno);
        else if (key == "hbar_over_kb") cfg.hbar_over_kb = parse_double(key, val, lineno);
        else if (key == "reference_rate") cfg.reference_rate = val;
        else if (key == "case") cfg.cases = parse_case(val, lineno);
        else if (key == "axis") cfg.axis = val;
        else if (key == "axis_min") cfg.axis_min = parse_double(key, val, lineno);
        else if (key == "axis_max") cfg.axis_max = parse_double(key, val, lineno);
        else if (key == "axis_points") cfg.axis_points = parse_int(key, val, lineno);
        else if (key == "conv_tol") cfg.conv_tol = parse_double(key, val, lineno);
        else if (key == "n_max_start") cfg.n_max_start = parse_int(key, val, lineno);
        else if (key == "n_max_cap") cfg.n_max_cap = parse_int(key, val, lineno);
        else if (key == "regime_threshold") cfg.regime_threshold = parse_double(key, val, lineno);
        else if (key == "validate_draws") cfg.validate_draws = parse_int(key, val, lineno);
        else if (key == "validate_n_max") cfg.validate_n_max = parse_int(key, val, lineno);
        else
            throw ConfigError(origin + ": line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
    }

    if (!nbar_given && cfg.temperature > 0.0 && cfg.omega_si > 0.0)
        cfg.params.nbar =
            thermal_occupancy(cfg.omega_si, cfg.temperature, cfg.hbar_over_kb);

    static const char* all_keys[] = {
        "omega", "omega23", "Omega0", "g", "gamma2", "gamma3", "gamma",
        "kappa", "nbar", "omega_si", "temperature", "hbar_over_kb",
        "reference_rate", "case", "axis", "axis_min", "axis_max",
        "axis_points", "conv_tol", "n_max_start", "n_max_cap",
        "regime_threshold", "validate_draws", "validate_n_max"};
    for (const char* k : all_keys)
        if (!cfg.given.count(k)) cfg.defaulted_keys.push_back(k);

    try {
        cfg.params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (cfg.axis_points < 1)
        throw ConfigError(origin + ": axis_points must be >= 1");
    if (cfg.conv_tol <= 0) throw ConfigError(origin + ": conv_tol must be > 0");
    if (cfg.n_max_cap < 2) throw ConfigError(origin + ": n_max_cap must be >= 2");
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

SweepConfig RunConfig::sweep_config() const {
    SweepConfig sc;
    sc.base = params;
    sc.axis = axis;
    sc.grid = SweepConfig::uniform_grid(axis_min, axis_max, axis_points);
    sc.cases = cases;
    sc.conv_tol = conv_tol;
    sc.n_max_start = n_max_start;
    sc.n_max_cap = n_max_cap;
    return sc;
}

std::string RunConfig::to_json() const {
    nlohmann::json j;
    j["omega"] = params.omega;
    j["omega23"] = params.omega23;
    j["Omega0"] = params.Omega0;
    j["g"] = params.g;
    j["gamma2"] = params.gamma2;
    j["gamma3"] = params.gamma3;
    j["gamma"] = params.gamma;
    j["kappa"] = params.kappa;
    j["nbar"] = params.nbar;
    j["omega_si"] = omega_si;
    j["temperature"] = temperature;
    j["hbar_over_kb"] = hbar_over_kb;
    j["reference_rate"] = reference_rate;
    j["case"] = cases == CaseSelect::I    ? "1"
                : cases == CaseSelect::II ? "2"
                                          : "both";
    j["axis"] = axis;
    j["axis_min"] = axis_min;
    j["axis_max"] = axis_max;
    j["axis_points"] = axis_points;
    j["conv_tol"] = conv_tol;
    j["n_max_start"] = n_max_start;
    j["n_max_cap"] = n_max_cap;
    j["regime_threshold"] = regime_threshold;
    j["validate_draws"] = validate_draws;
    j["validate_n_max"] = validate_n_max;
    j["defaulted_keys"] = defaulted_keys;
    return j.dump(2);
}

} // namespace lambdaosc
