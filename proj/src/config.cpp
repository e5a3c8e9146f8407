#include "bioeco/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace bioeco {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

// Strips a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            in_string = !in_string;
        } else if (line[i] == '#' && !in_string) {
            return line.substr(0, i);
        }
    }
    return line;
}

double parse_number(const std::string& section, const std::string& key,
                    const std::string& value) {
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(v)) {
        throw std::runtime_error("config [" + section + "] " + key + ": expected a number, got \"" +
                                 value + "\"");
    }
    return v;
}

}  // namespace

TomlTable parse_toml(std::istream& in) {
    TomlTable table;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(strip_comment(line));
        if (text.empty()) {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']' || text.size() < 3) {
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": malformed section header");
            }
            section = trim(text.substr(1, text.size() - 2));
            table[section];
            continue;
        }
        std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": empty key or value");
        }
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (table[section].count(key)) {
            throw std::runtime_error("config line " + std::to_string(line_no) + ": duplicate key " +
                                     key);
        }
        table[section][key] = value;
    }
    return table;
}

AppConfig load_config(std::istream& in) {
    TomlTable table = parse_toml(in);
    AppConfig config;
    for (const auto& [section, entries] : table) {
        if (section == "production") {
            for (const auto& [key, value] : entries) {
                double v = parse_number(section, key, value);
                if (key == "alpha") {
                    config.production.alpha = v;
                } else if (key == "gamma") {
                    config.production.gamma = v;
                } else if (key == "s") {
                    config.production.s = v;
                } else if (key == "labor") {
                    config.production.labor = v;
                } else if (key == "exp_a") {
                    config.production.exp_a = v;
                } else if (key == "exp_g") {
                    config.production.exp_g = v;
                } else if (key == "a") {
                    config.rates.a = v;
                } else if (key == "g") {
                    config.rates.g = v;
                } else {
                    throw std::runtime_error("config: unknown key [production] " + key);
                }
            }
        } else if (section == "prices") {
            for (const auto& [key, value] : entries) {
                double v = parse_number(section, key, value);
                if (key == "p_ground") {
                    config.p_ground = v;
                } else if (key == "p_arboreal") {
                    config.p_arboreal = v;
                } else {
                    throw std::runtime_error("config: unknown key [prices] " + key);
                }
            }
        } else if (section == "sustainability") {
            for (const auto& [key, value] : entries) {
                double v = parse_number(section, key, value);
                if (key == "rr_production_factor") {
                    config.sustainability.rr_production_factor = v;
                } else if (key == "pbr_factor") {
                    config.sustainability.pbr_factor = v;
                } else {
                    throw std::runtime_error("config: unknown key [sustainability] " + key);
                }
            }
        } else if (!section.empty() || !entries.empty()) {
            throw std::runtime_error("config: unknown section [" + section + "]");
        }
    }
    return config;
}

AppConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    return load_config(in);
}

}  // namespace bioeco
