#include "cavsq/config.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <numbers>

#include "cavsq/errors.hpp"

namespace cavsq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    if (first == std::string::npos) return {};
    return s.substr(first, last - first + 1);
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "gamma_hz",   "nu_hz",      "eta",        "omega_rabi_hz",
        "delta_hz",   "g1_hz",      "g2_hz",      "phi1_rad",
        "phi2_rad",   "theta_l_rad", "theta_c_rad", "kappa1_hz",
        "kappa2_hz",  "kappa_b_hz", "nbar",       "alpha",
    };
    return keys;
}

std::map<std::string, double> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));

    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format(
                "{}:{}: expected 'key = value', got '{}'", path, line_no, line));
        const std::string key = trim(line.substr(0, eq));
        const std::string value_str = trim(line.substr(eq + 1));

        bool known = false;
        for (const auto& k : config_keys()) known = known || k == key;
        if (!known)
            throw ConfigError(
                fmt::format("{}:{}: unknown key '{}'", path, line_no, key));

        double value = 0.0;
        const char* begin = value_str.data();
        const char* end = begin + value_str.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            throw ConfigError(fmt::format("{}:{}: value '{}' for key '{}' is not a number",
                                          path, line_no, value_str, key));
        values[key] = value;
    }
    return values;
}

RunConfig config_from_keys(const std::map<std::string, double>& keys) {
    for (const auto& k : config_keys())
        if (!keys.contains(k))
            throw ConfigError(fmt::format("missing config key '{}'", k));

    auto hz = [&](const char* k) { return kTwoPi * keys.at(k); };
    RunConfig cfg;
    cfg.params.gamma = hz("gamma_hz");
    cfg.params.nu = hz("nu_hz");
    cfg.params.eta = keys.at("eta");
    cfg.params.omega_rabi = hz("omega_rabi_hz");
    cfg.params.delta = hz("delta_hz");
    cfg.params.g1 = hz("g1_hz");
    cfg.params.g2 = hz("g2_hz");
    cfg.params.phi1 = keys.at("phi1_rad");
    cfg.params.phi2 = keys.at("phi2_rad");
    cfg.params.theta_l = keys.at("theta_l_rad");
    cfg.params.theta_c = keys.at("theta_c_rad");
    cfg.params.kappa1 = hz("kappa1_hz");
    cfg.params.kappa2 = hz("kappa2_hz");
    cfg.params.kappa_b = hz("kappa_b_hz");
    cfg.params.nbar = keys.at("nbar");
    cfg.alpha = keys.at("alpha");
    cfg.warnings = validate(cfg.params);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    return config_from_keys(parse_config_file(path));
}

RunConfig preset_config(const std::string& name,
                        const std::string& override_path) {
    std::map<std::string, double> keys = {
        {"gamma_hz", 360e3},  {"nu_hz", 3e6},       {"eta", 0.1},
        {"omega_rabi_hz", 18e6}, {"delta_hz", -60e6},
        {"g1_hz", 0.6e6},     {"g2_hz", 0.6e6},     {"phi1_rad", 0.0},
        {"phi2_rad", 0.0},    {"theta_l_rad", 0.0},
        {"theta_c_rad", std::numbers::pi / 2.0},
        // Trap heating kappa_b * nbar = 0.1 kHz, split as a weak coupling to
        // a hot reservoir.
        {"kappa_b_hz", 1.0},  {"nbar", 100.0},      {"alpha", 0.4},
    };
    double kappa_hz = 0.0;
    if (name == "fig2") kappa_hz = 1e3;
    else if (name == "fig3") kappa_hz = 10e3;
    else if (name == "fig4") kappa_hz = 100e3;
    else throw ConfigError(fmt::format("unknown preset '{}' (expected fig2|fig3|fig4)", name));
    keys["kappa1_hz"] = kappa_hz;
    keys["kappa2_hz"] = kappa_hz;

    if (!override_path.empty())
        for (const auto& [k, v] : parse_config_file(override_path))
            keys[k] = v;

    RunConfig cfg = config_from_keys(keys);
    cfg.preset = name;
    if (cfg.params.delta > 0)
        cfg.warnings.push_back(
            "preset expects a red-detuned laser (delta < 0) but delta > 0 "
            "was supplied");
    return cfg;
}

}  // namespace cavsq
