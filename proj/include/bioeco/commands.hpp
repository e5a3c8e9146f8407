#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bioeco/production_model.hpp"
#include "bioeco/sustainability.hpp"

namespace bioeco {

enum class Verb { ingest, efficiency, simulate, sustainability, report };

// Frontier pooling granularity for the efficiency batch.
enum class Pooling { region_year, region, year, all };

const char* pooling_name(Pooling p);

struct IngestOptions {
    std::string records_path;
    std::string species_path;
    std::string out_path;
    std::optional<std::string> stats_path;
    double deflation_rate = 0.05;
};

struct EfficiencyOptions {
    std::string daily_path;
    std::string out_path;
    std::optional<std::string> summary_path;
    std::optional<std::string> svg_path;
    std::optional<std::string> region;
    std::optional<int> year;
    std::optional<double> p_ground;
    std::optional<double> p_arboreal;
    Pooling pooling = Pooling::region_year;
};

struct SimulateOptions {
    ProductionParams params;
    HarvestRates rates;
    double t_max = 100;
    int steps = 100;
    std::string out_path;
    std::optional<std::string> svg_path;
};

struct SustainabilityOptions {
    std::string inputs_path;
    std::string out_path;
    SustainabilityCoefficients coeffs;
};

struct ReportOptions {
    std::string records_path;
    std::string species_path;
    std::string out_dir;
    std::optional<double> p_ground;
    std::optional<double> p_arboreal;
    Pooling pooling = Pooling::region_year;
    double deflation_rate = 0.05;
};

struct Command {
    Verb verb = Verb::ingest;
    std::variant<IngestOptions, EfficiencyOptions, SimulateOptions, SustainabilityOptions,
                 ReportOptions>
        options;
};

// Raised for bad invocations; run_cli maps it to exit status 2.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& message) : std::runtime_error(message) {}
};

// Help or version requests: print `text` to stdout, exit 0.
class CliExit {
  public:
    explicit CliExit(std::string text) : text_(std::move(text)) {}
    const std::string& text() const { return text_; }

  private:
    std::string text_;
};

// Validates argv into a Command. Flags override config-file values,
// which override built-in defaults. Unknown verbs or flags raise
// UsageError; --help raises CliExit.
Command parse_cli(const std::vector<std::string>& args);

// Runs a validated command, writing its artifacts atomically. Returns
// the exit status (0 on success); data and model errors are thrown and
// mapped by run_cli.
int execute(const Command& cmd);

// parse + execute + error mapping: 0 success, 1 data/model error,
// 2 usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace bioeco
