#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>

#include "bioeco/production_model.hpp"
#include "bioeco/sustainability.hpp"

namespace bioeco {

// Flat TOML subset: [section] headers, bare keys, and number / quoted
// string / boolean values, with # comments. Enough for a parameter
// file; arrays and nested tables are out.
using TomlTable = std::map<std::string, std::map<std::string, std::string>>;

TomlTable parse_toml(std::istream& in);

// Settings a config file may carry. Flags override these; these
// override built-in defaults.
struct AppConfig {
    ProductionParams production;
    HarvestRates rates;
    std::optional<double> p_ground;
    std::optional<double> p_arboreal;
    SustainabilityCoefficients sustainability;
};

// Reads a TOML config. Unknown sections or keys are errors, never
// silently ignored.
AppConfig load_config(std::istream& in);
AppConfig load_config_file(const std::string& path);

}  // namespace bioeco
