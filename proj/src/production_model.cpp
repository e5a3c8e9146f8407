#include "bioeco/production_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "bioeco/csv.hpp"

namespace bioeco {

void ProductionParams::validate() const {
    if (!(s >= 0) || !(s < 1)) {
        throw std::invalid_argument("s must lie in [0, 1)");
    }
    if (!(labor > 0)) {
        throw std::invalid_argument("labor must be positive");
    }
    if (!(s < labor)) {
        throw std::invalid_argument("s must be less than labor");
    }
    if (!(exp_a > 1) || !(exp_g > 1)) {
        throw std::invalid_argument("harvest exponents must exceed 1");
    }
    if (!(alpha >= 0) || !(gamma >= 0)) {
        throw std::invalid_argument("growth rates must be nonnegative");
    }
}

void HarvestRates::validate() const {
    if (!(a >= 0) || !(g >= 0)) {
        throw std::invalid_argument("harvest rates must be nonnegative");
    }
}

double arboreal_pressure(const ProductionParams& params, const HarvestRates& rates) {
    return std::pow(rates.a, params.exp_a) * params.s;
}

double ground_pressure(const ProductionParams& params, const HarvestRates& rates) {
    return std::pow(rates.g, params.exp_g) * (params.labor - params.s);
}

double ppf_intercept_a(const ProductionParams& params) {
    if (!(params.s > 0)) {
        throw std::invalid_argument("frontier intercept requires s > 0");
    }
    return std::pow((params.alpha + params.gamma) / params.s, 1.0 / params.exp_a);
}

double ppf_ground(double a, const ProductionParams& params) {
    if (!(a >= 0)) {
        throw std::invalid_argument("arboreal rate must be nonnegative");
    }
    double budget = params.alpha + params.gamma;
    double used = std::pow(a, params.exp_a) * params.s;
    if (used > budget) {
        throw std::runtime_error("infeasible arboreal rate " + fmt_general(a) +
                                 ": harvest pressure exceeds alpha + gamma");
    }
    return std::pow((budget - used) / (params.labor - params.s), 1.0 / params.exp_g);
}

double mrt(double a, double g, const ProductionParams& params) {
    if (g == 0) {
        throw std::runtime_error("frontier slope singular at the g = 0 axis");
    }
    double numerator = params.exp_a * std::pow(a, params.exp_a - 1.0) * params.s;
    double denominator = params.exp_g * std::pow(g, params.exp_g - 1.0) * (params.labor - params.s);
    return -numerator / denominator;
}

PopulationPath population_path(const ProductionParams& params, const HarvestRates& rates,
                               std::vector<double> times) {
    if (!times.empty() && times.front() < 0) {
        throw std::invalid_argument("times must start at >= 0");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("times must be strictly increasing");
        }
    }
    double net_arboreal = params.alpha - arboreal_pressure(params, rates);
    double net_ground = params.gamma - ground_pressure(params, rates);
    PopulationPath path;
    path.arboreal_index.reserve(times.size());
    path.ground_index.reserve(times.size());
    for (double t : times) {
        path.arboreal_index.push_back(std::exp(net_arboreal * t));
        path.ground_index.push_back(std::exp(net_ground * t));
    }
    path.times = std::move(times);
    return path;
}

SustainabilityFlags is_sustainable(const ProductionParams& params, const HarvestRates& rates) {
    SustainabilityFlags flags;
    flags.arboreal_ok = params.alpha >= arboreal_pressure(params, rates);
    flags.ground_ok = params.gamma >= ground_pressure(params, rates);
    return flags;
}

Tangency parametric_tangency(const ProductionParams& params, const PriceSystem& prices) {
    params.validate();
    prices.validate();
    if (!(params.s > 0)) {
        throw std::invalid_argument("tangency requires 0 < s < 1");
    }

    double intercept = ppf_intercept_a(params);
    double target = prices.p_arboreal / prices.p_ground;  // |isorevenue slope|

    // f(a) = |mrt(a, g(a))| - target is monotone increasing, from below
    // zero at the g-axis to +infinity near the a-axis intercept.
    auto f = [&](double a) { return -mrt(a, ppf_ground(a, params), params) - target; };

    double lo = intercept * 1e-12;
    double hi = intercept * (1.0 - 1e-12);
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (std::isnan(f_lo) || std::isnan(f_hi)) {
        throw std::runtime_error("tangency bracket failed: f(" + fmt_general(lo) + ") = " +
                                 fmt_general(f_lo) + ", f(" + fmt_general(hi) + ") = " +
                                 fmt_general(f_hi));
    }

    auto endpoint = [&]() {
        // Corner solution: the revenue-maximizing frontier endpoint.
        double g_intercept = ppf_ground(0.0, params);
        double revenue_g_axis = prices.p_ground * g_intercept;
        double revenue_a_axis = prices.p_arboreal * intercept;
        Tangency corner;
        corner.interior = false;
        if (revenue_g_axis >= revenue_a_axis) {
            corner.rates = {0.0, g_intercept};
        } else {
            corner.rates = {intercept, 0.0};
        }
        return corner;
    };

    if (f_lo >= 0 || f_hi <= 0) {
        return endpoint();
    }

    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double a_star = 0.5 * (lo + hi);
    Tangency result;
    result.rates = {a_star, ppf_ground(a_star, params)};
    result.interior = true;
    return result;
}

}  // namespace bioeco
