#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cavsq/params.hpp"

namespace cavsq {

enum class OutputFormat { Csv, Json };

// A fully resolved run: physical parameters plus sweep and output choices.
struct RunConfig {
    SystemParams params;
    double alpha = 0.4;  // angular dispersion of spontaneous emission
    double omega_min = -2.0;  // sweep bounds in units of theta
    double omega_max = 2.0;
    int points = 2001;
    std::string output_path;  // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> preset;
    bool refine_nu_prime = false;
    std::vector<std::string> warnings;  // collected while loading
};

// Flat key = value text; '#' starts a comment. Frequencies are plain Hz in
// the file and converted to angular on load. Unknown keys are rejected by
// name; missing keys are reported; bad numbers carry the line number.
std::map<std::string, double> parse_config_file(const std::string& path);

// Materializes a full RunConfig from a complete key set.
RunConfig config_from_keys(const std::map<std::string, double>& keys);

RunConfig load_config(const std::string& path);

// Parameter sets reproducing the published spectra; "fig2", "fig3", "fig4"
// differ only in the cavity decay rate. `override_path` may supply a partial
// key set layered on top of the preset.
RunConfig preset_config(const std::string& name,
                        const std::string& override_path = {});

const std::vector<std::string>& config_keys();

}  // namespace cavsq
