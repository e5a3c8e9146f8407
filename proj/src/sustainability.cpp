#include "bioeco/sustainability.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bioeco/csv.hpp"

namespace bioeco {

void SustainabilityInputs::validate() const {
    auto require = [&](bool ok, const char* field) {
        if (!ok) {
            throw std::invalid_argument("sustainability inputs for \"" + species + "\": bad " +
                                        field);
        }
    };
    require(!species.empty(), "species");
    require(actual_takeoff > 0, "actual_takeoff");
    require(area_km2 > 0, "area_km2");
    require(density_per_km2 > 0, "density_per_km2");
    require(lambda_max >= 1, "lambda_max");
    require(harvest_fraction > 0 && harvest_fraction <= 1, "harvest_fraction");
    require(n_min > 0, "n_min");
    require(recovery_factor > 0 && recovery_factor <= 1, "recovery_factor");
}

double rr_sustainable_harvest(const SustainabilityInputs& in,
                              const SustainabilityCoefficients& coeffs) {
    in.validate();
    double production =
        coeffs.rr_production_factor * in.density_per_km2 * in.area_km2 * (in.lambda_max - 1.0);
    return in.harvest_fraction * production;
}

double nmfs_pbr(const SustainabilityInputs& in, const SustainabilityCoefficients& coeffs) {
    in.validate();
    return coeffs.pbr_factor * (in.lambda_max - 1.0) * in.n_min * in.recovery_factor;
}

double excess_percent(double actual, double sustainable) {
    if (sustainable == 0) {
        if (actual == 0) {
            return 0;
        }
        return actual > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    }
    return 100.0 * (actual - sustainable) / sustainable;
}

SustainabilityAssessment assess(const SustainabilityInputs& in,
                                const SustainabilityCoefficients& coeffs) {
    SustainabilityAssessment out;
    out.species = in.species;
    out.msy_rr = rr_sustainable_harvest(in, coeffs);
    out.msy_pbr = nmfs_pbr(in, coeffs);
    out.excess_rr_pct = excess_percent(in.actual_takeoff, out.msy_rr);
    out.excess_pbr_pct = excess_percent(in.actual_takeoff, out.msy_pbr);
    return out;
}

BoundedAssessment assess_bounds(const SustainabilityRow& row,
                                const SustainabilityCoefficients& coeffs) {
    auto at_bound = [&](double density, double n_min) {
        SustainabilityInputs in;
        in.species = row.species;
        in.actual_takeoff = row.actual_takeoff;
        in.area_km2 = row.area_km2;
        in.density_per_km2 = density;
        in.lambda_max = row.lambda_max;
        in.harvest_fraction = row.harvest_fraction;
        in.n_min = n_min;
        in.recovery_factor = row.recovery_factor;
        return assess(in, coeffs);
    };
    auto lower = at_bound(row.density_lower, row.n_min_lower);
    auto upper = at_bound(row.density_upper, row.n_min_upper);
    BoundedAssessment out;
    out.species = row.species;
    out.msy_rr_lower = lower.msy_rr;
    out.msy_rr_upper = upper.msy_rr;
    out.excess_rr_lower_pct = lower.excess_rr_pct;
    out.excess_rr_upper_pct = upper.excess_rr_pct;
    out.msy_pbr_lower = lower.msy_pbr;
    out.msy_pbr_upper = upper.msy_pbr;
    out.excess_pbr_lower_pct = lower.excess_pbr_pct;
    out.excess_pbr_upper_pct = upper.excess_pbr_pct;
    return out;
}

std::vector<SustainabilityRow> read_sustainability_csv(std::istream& in) {
    const std::string expected =
        "species,actual_takeoff,area_km2,density_lower,density_upper,lambda_max,"
        "harvest_fraction,n_min_lower,n_min_upper,recovery_factor";
    std::string line;
    if (!read_csv_line(in, line)) {
        throw std::runtime_error("sustainability CSV: missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != expected) {
        throw std::runtime_error("sustainability CSV: header must be exactly \"" + expected +
                                 "\"");
    }
    std::vector<SustainabilityRow> rows;
    int line_no = 1;
    while (read_csv_line(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto fields = split_csv_line(line);
        auto fail = [&](const std::string& message) -> std::runtime_error {
            return std::runtime_error("sustainability CSV row " + std::to_string(line_no) + ": " +
                                      message);
        };
        if (fields.size() != 10) {
            throw fail("expected 10 fields, got " + std::to_string(fields.size()));
        }
        SustainabilityRow row;
        row.species = fields[0];
        if (row.species.empty()) {
            throw fail("empty species");
        }
        auto num = [&](const std::string& text, const char* what) {
            char* end = nullptr;
            double v = std::strtod(text.c_str(), &end);
            if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
                throw fail(std::string("bad ") + what + " \"" + text + "\"");
            }
            return v;
        };
        row.actual_takeoff = num(fields[1], "actual_takeoff");
        row.area_km2 = num(fields[2], "area_km2");
        row.density_lower = num(fields[3], "density_lower");
        row.density_upper = num(fields[4], "density_upper");
        row.lambda_max = num(fields[5], "lambda_max");
        row.harvest_fraction = num(fields[6], "harvest_fraction");
        row.n_min_lower = num(fields[7], "n_min_lower");
        row.n_min_upper = num(fields[8], "n_min_upper");
        row.recovery_factor = num(fields[9], "recovery_factor");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string assessment_csv(std::span<const BoundedAssessment> rows) {
    std::ostringstream out;
    out << "# excess_pct = 100 * (actual_takeoff / msy - 1); lower/upper name the population "
           "bound used\n";
    out << "species,msy_rr_lower,msy_rr_upper,excess_rr_lower_pct,excess_rr_upper_pct,"
           "msy_pbr_lower,msy_pbr_upper,excess_pbr_lower_pct,excess_pbr_upper_pct\n";
    for (const auto& row : rows) {
        out << row.species << ',' << fmt_general(row.msy_rr_lower) << ','
            << fmt_general(row.msy_rr_upper) << ',' << fmt_general(row.excess_rr_lower_pct) << ','
            << fmt_general(row.excess_rr_upper_pct) << ',' << fmt_general(row.msy_pbr_lower) << ','
            << fmt_general(row.msy_pbr_upper) << ',' << fmt_general(row.excess_pbr_lower_pct)
            << ',' << fmt_general(row.excess_pbr_upper_pct) << "\n";
    }
    return out.str();
}

}  // namespace bioeco
