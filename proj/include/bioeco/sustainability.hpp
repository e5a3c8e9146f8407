#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

namespace bioeco {

// Multipliers the two published sustainable-yield formulas carry; both
// are configuration, never baked into the arithmetic.
struct SustainabilityCoefficients {
    double rr_production_factor = 0.6;  // production multiplier in the Robinson-Redford form
    double pbr_factor = 0.5;            // half of maximum net productivity in the PBR form
};

struct SustainabilityInputs {
    std::string species;
    double actual_takeoff = 0;    // animals per year
    double area_km2 = 0;
    double density_per_km2 = 0;   // carrying-capacity density K
    double lambda_max = 1;        // maximum finite annual growth rate
    double harvest_fraction = 0;  // F, longevity-based, (0, 1]
    double n_min = 0;             // minimum population estimate
    double recovery_factor = 0;   // Fr, (0, 1]

    void validate() const;  // throws std::invalid_argument naming the field
};

// F * rr_production_factor * K * area * (lambda_max - 1), animals/yr.
double rr_sustainable_harvest(const SustainabilityInputs& in,
                              const SustainabilityCoefficients& coeffs = {});

// pbr_factor * (lambda_max - 1) * n_min * Fr, animals/yr.
double nmfs_pbr(const SustainabilityInputs& in, const SustainabilityCoefficients& coeffs = {});

// 100 * (actual - sustainable) / sustainable. A zero sustainable yield
// with positive takeoff returns +infinity (unbounded excess); zero over
// zero is 0.
double excess_percent(double actual, double sustainable);

struct SustainabilityAssessment {
    std::string species;
    double msy_rr = 0;
    double msy_pbr = 0;
    double excess_rr_pct = 0;
    double excess_pbr_pct = 0;
};

SustainabilityAssessment assess(const SustainabilityInputs& in,
                                const SustainabilityCoefficients& coeffs = {});

// One input CSV row carrying lower and upper population estimates.
struct SustainabilityRow {
    std::string species;
    double actual_takeoff = 0;
    double area_km2 = 0;
    double density_lower = 0;
    double density_upper = 0;
    double lambda_max = 1;
    double harvest_fraction = 0;
    double n_min_lower = 0;
    double n_min_upper = 0;
    double recovery_factor = 0;
};

// The lower/upper suffix names the population bound that produced the
// column, so the lower bound carries the higher excess.
struct BoundedAssessment {
    std::string species;
    double msy_rr_lower = 0;
    double msy_rr_upper = 0;
    double excess_rr_lower_pct = 0;
    double excess_rr_upper_pct = 0;
    double msy_pbr_lower = 0;
    double msy_pbr_upper = 0;
    double excess_pbr_lower_pct = 0;
    double excess_pbr_upper_pct = 0;
};

BoundedAssessment assess_bounds(const SustainabilityRow& row,
                                const SustainabilityCoefficients& coeffs = {});

// Input CSV header:
//   species,actual_takeoff,area_km2,density_lower,density_upper,
//   lambda_max,harvest_fraction,n_min_lower,n_min_upper,recovery_factor
std::vector<SustainabilityRow> read_sustainability_csv(std::istream& in);

// Output CSV, one row per species, preceded by a comment line that
// records the excess definition in force.
std::string assessment_csv(std::span<const BoundedAssessment> rows);

}  // namespace bioeco
