#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "bioeco/date.hpp"
#include "bioeco/fixed.hpp"

namespace bioeco {

enum class Method { shotgun, snare, unknown };
enum class Condition { alive, fresh, smoked, unknown };
enum class AgeClass { adult, immature, unknown };
enum class Sex { male, female, unknown };
enum class Guild { arboreal, ground };
enum class Longevity { short_lived, medium_lived, long_lived };

// One carcass row as recorded at the market. mass_kg and price are row
// totals, not per-carcass figures. `line` is the source CSV line, kept
// for diagnostics.
struct HarvestRecord {
    Date date;
    std::string species;
    int count = 0;
    Fixed mass_kg;
    Fixed price;
    Method method = Method::unknown;
    std::string origin;
    Condition condition = Condition::unknown;
    AgeClass age = AgeClass::unknown;
    Sex sex = Sex::unknown;
    int line = 0;
};

// Per-species parameters. The guild drives the two-output split; the
// population fields feed the sustainability assessments.
struct SpeciesProfile {
    std::string species;
    Guild guild = Guild::ground;
    double mean_mass_kg = 0;
    double lambda_max = 1;
    double density_per_km2 = 0;
    Longevity longevity = Longevity::medium_lived;
};

using SpeciesTable = std::map<std::string, SpeciesProfile>;

// One (date, region) cell of the two-output series.
struct DailyTakeoff {
    Date date;
    std::string region;
    Fixed arboreal_kg;
    Fixed ground_kg;
    Fixed arboreal_revenue;
    Fixed ground_revenue;
    int carcass_count = 0;

    Fixed total_kg() const { return arboreal_kg + ground_kg; }
};

// Unit prices per kg of biomass; both strictly positive.
struct PriceSystem {
    double p_ground = 0;
    double p_arboreal = 0;

    void validate() const;  // throws std::invalid_argument
};

struct RowError {
    int line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<HarvestRecord> records;  // well-formed rows, input order
    std::vector<RowError> errors;        // malformed rows, by line
};

// Records CSV header (exact, ordered):
//   date,species,count,mass_kg,price,method,origin,condition,age,sex
// Malformed rows are collected, not fatal; a bad header is.
ParseResult parse_records(std::istream& csv);

// Species CSV header:
//   species,guild,mean_mass_kg,lambda_max,density_per_km2,longevity_class
// Any malformed row is fatal here: the species table is reference data.
SpeciesTable parse_species(std::istream& csv);

// Collapses records into one DailyTakeoff per (date, region), biomass
// and revenue split by the species guild. Output sorted by (region, date).
// Throws if a record's species does not resolve in the table.
std::vector<DailyTakeoff> aggregate_daily(const std::vector<HarvestRecord>& records,
                                          const SpeciesTable& species);

// (sum ground revenue / sum ground kg) / (sum arboreal revenue / sum
// arboreal kg): the biomass-weighted mean unit price of ground animals
// over arboreal ones. Throws when either guild has zero total biomass.
double weighted_price_ratio(const std::vector<HarvestRecord>& records,
                            const SpeciesTable& species);

// nominal / (1 + annual_rate)^years_elapsed, rounded to the fixed-point
// grid. annual_rate must exceed -1, years_elapsed must be >= 0.
Fixed deflate_revenue(Fixed nominal, int years_elapsed, double annual_rate);

// Fraction of the period's total biomass originating from region_set.
// Throws when the period has zero total biomass.
double regional_share(const std::vector<DailyTakeoff>& daily,
                      const std::set<std::string>& region_set, int year);

// Daily output CSV:
//   region,date,arboreal_kg,ground_kg,arboreal_revenue,ground_revenue,carcass_count
void write_daily_csv(std::ostream& out, const std::vector<DailyTakeoff>& daily);
std::vector<DailyTakeoff> read_daily_csv(std::istream& in);

const char* guild_name(Guild g);

}  // namespace bioeco
