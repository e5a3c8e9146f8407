#pragma once

#include <vector>

#include "bioeco/market_data.hpp"

namespace bioeco {

// Parameters of the joint production technology. The zero-net-growth
// frontier in the (a, g) harvest-rate plane is the level set
//   a^exp_a * s + g^exp_g * (labor - s) = alpha + gamma
// and population indices grow like exp((alpha - a^exp_a * s) t) and
// exp((gamma - g^exp_g * (labor - s)) t).
struct ProductionParams {
    double alpha = 0;    // arboreal instantaneous growth rate, per year
    double gamma = 0;    // ground instantaneous growth rate, per year
    double s = 0;        // share of labor in shotgun hunting, [0, 1)
    double labor = 1;    // total labor input
    double exp_a = 2.0;  // arboreal harvest exponent
    double exp_g = 1.9;  // ground harvest exponent

    void validate() const;  // throws std::invalid_argument
};

struct HarvestRates {
    double a = 0;  // arboreal harvest rate, per year
    double g = 0;  // ground harvest rate, per year

    void validate() const;
};

struct PopulationPath {
    std::vector<double> times;
    std::vector<double> arboreal_index;  // N_A(t) / N_A(0)
    std::vector<double> ground_index;    // N_G(t) / N_G(0)
};

// Harvest-pressure terms a^exp_a * s and g^exp_g * (labor - s).
double arboreal_pressure(const ProductionParams& params, const HarvestRates& rates);
double ground_pressure(const ProductionParams& params, const HarvestRates& rates);

// Largest feasible arboreal rate, ((alpha + gamma) / s)^(1/exp_a).
// Requires s > 0.
double ppf_intercept_a(const ProductionParams& params);

// Ground rate paired with `a` on the frontier. Throws "infeasible
// arboreal rate" when a^exp_a * s exceeds alpha + gamma.
double ppf_ground(double a, const ProductionParams& params);

// Frontier slope dg/da at (a, g):
//   -(exp_a/exp_g) * a^(exp_a-1) * s / (g^(exp_g-1) * (labor - s))
// Throws when g == 0 (slope singular at the axis).
double mrt(double a, double g, const ProductionParams& params);

// Exponential population indices at the given times (increasing,
// starting at >= 0).
PopulationPath population_path(const ProductionParams& params, const HarvestRates& rates,
                               std::vector<double> times);

struct SustainabilityFlags {
    bool arboreal_ok = false;  // alpha >= arboreal pressure
    bool ground_ok = false;    // gamma >= ground pressure
};

SustainabilityFlags is_sustainable(const ProductionParams& params, const HarvestRates& rates);

struct Tangency {
    HarvestRates rates;
    bool interior = true;  // false: corner solution at a frontier endpoint
};

// The point on the frontier where the slope equals the isorevenue slope
// -p_arboreal/p_ground, located by bisection (|mrt| grows monotonically
// from 0 to infinity along the frontier, so the interior root is unique
// whenever it exists). Requires 0 < s < labor and positive prices.
Tangency parametric_tangency(const ProductionParams& params, const PriceSystem& prices);

}  // namespace bioeco
