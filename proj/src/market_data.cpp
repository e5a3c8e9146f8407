#include "bioeco/market_data.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "bioeco/csv.hpp"

namespace bioeco {

namespace {

const char* kRecordsHeader = "date,species,count,mass_kg,price,method,origin,condition,age,sex";
const char* kSpeciesHeader = "species,guild,mean_mass_kg,lambda_max,density_per_km2,longevity_class";
const char* kDailyHeader =
    "region,date,arboreal_kg,ground_kg,arboreal_revenue,ground_revenue,carcass_count";

void check_header(std::istream& in, const char* expected, const char* what) {
    std::string line;
    if (!read_csv_line(in, line)) {
        throw std::runtime_error(std::string(what) + ": missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != expected) {
        throw std::runtime_error(std::string(what) + ": header must be exactly \"" + expected +
                                 "\"");
    }
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) {
        return false;
    }
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) {
        return false;
    }
    out = static_cast<int>(v);
    return true;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) {
        return false;
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        return false;
    }
    out = v;
    return true;
}

bool parse_method(const std::string& s, Method& out) {
    if (s == "shotgun") {
        out = Method::shotgun;
    } else if (s == "snare") {
        out = Method::snare;
    } else if (s == "unknown") {
        out = Method::unknown;
    } else {
        return false;
    }
    return true;
}

bool parse_condition(const std::string& s, Condition& out) {
    if (s == "alive") {
        out = Condition::alive;
    } else if (s == "fresh") {
        out = Condition::fresh;
    } else if (s == "smoked") {
        out = Condition::smoked;
    } else if (s == "unknown") {
        out = Condition::unknown;
    } else {
        return false;
    }
    return true;
}

bool parse_age(const std::string& s, AgeClass& out) {
    if (s == "adult") {
        out = AgeClass::adult;
    } else if (s == "immature") {
        out = AgeClass::immature;
    } else if (s == "unknown") {
        out = AgeClass::unknown;
    } else {
        return false;
    }
    return true;
}

bool parse_sex(const std::string& s, Sex& out) {
    if (s == "male") {
        out = Sex::male;
    } else if (s == "female") {
        out = Sex::female;
    } else if (s == "unknown") {
        out = Sex::unknown;
    } else {
        return false;
    }
    return true;
}

struct GuildTotals {
    Fixed arboreal_kg;
    Fixed ground_kg;
    Fixed arboreal_revenue;
    Fixed ground_revenue;
};

// Shared by aggregate_daily and weighted_price_ratio: resolves each
// record's guild and accumulates into `add`, throwing on an unknown
// species with the offending row named.
template <typename Add>
void fold_by_guild(const std::vector<HarvestRecord>& records, const SpeciesTable& species,
                   Add add) {
    for (const auto& record : records) {
        auto it = species.find(record.species);
        if (it == species.end()) {
            throw std::runtime_error("unresolvable species \"" + record.species + "\" at row " +
                                     std::to_string(record.line));
        }
        add(record, it->second.guild);
    }
}

}  // namespace

void PriceSystem::validate() const {
    if (!(p_ground > 0) || !(p_arboreal > 0)) {
        throw std::invalid_argument("prices must be strictly positive");
    }
}

const char* guild_name(Guild g) {
    return g == Guild::arboreal ? "arboreal" : "ground";
}

ParseResult parse_records(std::istream& csv) {
    check_header(csv, kRecordsHeader, "records CSV");
    ParseResult result;
    std::string line;
    int line_no = 1;  // header was line 1
    while (read_csv_line(csv, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto fields = split_csv_line(line);
        auto fail = [&](const std::string& message) {
            result.errors.push_back({line_no, message});
        };
        if (fields.size() != 10) {
            fail("expected 10 fields, got " + std::to_string(fields.size()));
            continue;
        }
        HarvestRecord r;
        r.line = line_no;
        auto date = Date::parse(fields[0]);
        if (!date) {
            fail("bad date \"" + fields[0] + "\"");
            continue;
        }
        r.date = *date;
        r.species = fields[1];
        if (r.species.empty()) {
            fail("empty species");
            continue;
        }
        if (!parse_int(fields[2], r.count)) {
            fail("bad count \"" + fields[2] + "\"");
            continue;
        }
        if (r.count < 1) {
            fail("count >= 1 violated");
            continue;
        }
        auto mass = Fixed::parse(fields[3]);
        if (!mass) {
            fail("bad mass_kg \"" + fields[3] + "\"");
            continue;
        }
        r.mass_kg = *mass;
        if (r.mass_kg.raw() <= 0) {
            fail("mass_kg > 0 violated");
            continue;
        }
        auto price = Fixed::parse(fields[4]);
        if (!price) {
            fail("bad price \"" + fields[4] + "\"");
            continue;
        }
        r.price = *price;
        if (r.price.raw() < 0) {
            fail("price >= 0 violated");
            continue;
        }
        if (!parse_method(fields[5], r.method)) {
            fail("bad method \"" + fields[5] + "\"");
            continue;
        }
        r.origin = fields[6];
        if (r.origin.empty()) {
            fail("empty origin");
            continue;
        }
        if (!parse_condition(fields[7], r.condition)) {
            fail("bad condition \"" + fields[7] + "\"");
            continue;
        }
        if (!parse_age(fields[8], r.age)) {
            fail("bad age \"" + fields[8] + "\"");
            continue;
        }
        if (!parse_sex(fields[9], r.sex)) {
            fail("bad sex \"" + fields[9] + "\"");
            continue;
        }
        result.records.push_back(std::move(r));
    }
    return result;
}

SpeciesTable parse_species(std::istream& csv) {
    check_header(csv, kSpeciesHeader, "species CSV");
    SpeciesTable table;
    std::string line;
    int line_no = 1;
    while (read_csv_line(csv, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto fields = split_csv_line(line);
        auto fail = [&](const std::string& message) -> std::runtime_error {
            return std::runtime_error("species CSV row " + std::to_string(line_no) + ": " +
                                      message);
        };
        if (fields.size() != 6) {
            throw fail("expected 6 fields, got " + std::to_string(fields.size()));
        }
        SpeciesProfile p;
        p.species = fields[0];
        if (p.species.empty()) {
            throw fail("empty species");
        }
        if (fields[1] == "arboreal") {
            p.guild = Guild::arboreal;
        } else if (fields[1] == "ground") {
            p.guild = Guild::ground;
        } else {
            throw fail("bad guild \"" + fields[1] + "\"");
        }
        if (!parse_double(fields[2], p.mean_mass_kg) || p.mean_mass_kg < 0) {
            throw fail("bad mean_mass_kg \"" + fields[2] + "\"");
        }
        if (!parse_double(fields[3], p.lambda_max) || p.lambda_max < 1) {
            throw fail("lambda_max >= 1 violated (\"" + fields[3] + "\")");
        }
        if (!parse_double(fields[4], p.density_per_km2) || p.density_per_km2 < 0) {
            throw fail("density_per_km2 >= 0 violated (\"" + fields[4] + "\")");
        }
        if (fields[5] == "short") {
            p.longevity = Longevity::short_lived;
        } else if (fields[5] == "medium") {
            p.longevity = Longevity::medium_lived;
        } else if (fields[5] == "long") {
            p.longevity = Longevity::long_lived;
        } else {
            throw fail("bad longevity_class \"" + fields[5] + "\"");
        }
        if (table.count(p.species)) {
            throw fail("duplicate species \"" + p.species + "\"");
        }
        table.emplace(p.species, std::move(p));
    }
    return table;
}

std::vector<DailyTakeoff> aggregate_daily(const std::vector<HarvestRecord>& records,
                                          const SpeciesTable& species) {
    // map keyed by (region, date) gives the required output order directly
    std::map<std::pair<std::string, Date>, DailyTakeoff> cells;
    fold_by_guild(records, species, [&](const HarvestRecord& r, Guild guild) {
        auto key = std::make_pair(r.origin, r.date);
        auto [it, inserted] = cells.try_emplace(key);
        DailyTakeoff& cell = it->second;
        if (inserted) {
            cell.date = r.date;
            cell.region = r.origin;
        }
        if (guild == Guild::arboreal) {
            cell.arboreal_kg += r.mass_kg;
            cell.arboreal_revenue += r.price;
        } else {
            cell.ground_kg += r.mass_kg;
            cell.ground_revenue += r.price;
        }
        cell.carcass_count += r.count;
    });
    std::vector<DailyTakeoff> out;
    out.reserve(cells.size());
    for (auto& [key, cell] : cells) {
        out.push_back(std::move(cell));
    }
    return out;
}

double weighted_price_ratio(const std::vector<HarvestRecord>& records,
                            const SpeciesTable& species) {
    GuildTotals totals;
    fold_by_guild(records, species, [&](const HarvestRecord& r, Guild guild) {
        if (guild == Guild::arboreal) {
            totals.arboreal_kg += r.mass_kg;
            totals.arboreal_revenue += r.price;
        } else {
            totals.ground_kg += r.mass_kg;
            totals.ground_revenue += r.price;
        }
    });
    if (totals.ground_kg.is_zero() || totals.arboreal_kg.is_zero()) {
        throw std::runtime_error("weighted price ratio undefined: a guild has zero total biomass");
    }
    double ground_unit = totals.ground_revenue.to_double() / totals.ground_kg.to_double();
    double arboreal_unit = totals.arboreal_revenue.to_double() / totals.arboreal_kg.to_double();
    return ground_unit / arboreal_unit;
}

Fixed deflate_revenue(Fixed nominal, int years_elapsed, double annual_rate) {
    if (years_elapsed < 0) {
        throw std::invalid_argument("years_elapsed must be >= 0");
    }
    if (!(annual_rate > -1.0)) {
        throw std::invalid_argument("annual_rate must exceed -1");
    }
    double factor = std::pow(1.0 + annual_rate, years_elapsed);
    return Fixed::from_double(nominal.to_double() / factor);
}

double regional_share(const std::vector<DailyTakeoff>& daily,
                      const std::set<std::string>& region_set, int year) {
    Fixed total;
    Fixed in_set;
    for (const auto& d : daily) {
        if (d.date.year != year) {
            continue;
        }
        total += d.total_kg();
        if (region_set.count(d.region)) {
            in_set += d.total_kg();
        }
    }
    if (total.is_zero()) {
        throw std::runtime_error("regional share undefined: zero total biomass in period");
    }
    return in_set.to_double() / total.to_double();
}

void write_daily_csv(std::ostream& out, const std::vector<DailyTakeoff>& daily) {
    out << kDailyHeader << "\n";
    for (const auto& d : daily) {
        out << d.region << ',' << d.date.str() << ',' << d.arboreal_kg.str() << ','
            << d.ground_kg.str() << ',' << d.arboreal_revenue.str() << ','
            << d.ground_revenue.str() << ',' << d.carcass_count << "\n";
    }
}

std::vector<DailyTakeoff> read_daily_csv(std::istream& in) {
    check_header(in, kDailyHeader, "daily CSV");
    std::vector<DailyTakeoff> out;
    std::string line;
    int line_no = 1;
    while (read_csv_line(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto fields = split_csv_line(line);
        auto fail = [&](const std::string& message) -> std::runtime_error {
            return std::runtime_error("daily CSV row " + std::to_string(line_no) + ": " + message);
        };
        if (fields.size() != 7) {
            throw fail("expected 7 fields, got " + std::to_string(fields.size()));
        }
        DailyTakeoff d;
        d.region = fields[0];
        if (d.region.empty()) {
            throw fail("empty region");
        }
        auto date = Date::parse(fields[1]);
        if (!date) {
            throw fail("bad date \"" + fields[1] + "\"");
        }
        d.date = *date;
        auto parse_qty = [&](const std::string& text, const char* what) {
            auto v = Fixed::parse(text);
            if (!v || v->raw() < 0) {
                throw fail(std::string("bad ") + what + " \"" + text + "\"");
            }
            return *v;
        };
        d.arboreal_kg = parse_qty(fields[2], "arboreal_kg");
        d.ground_kg = parse_qty(fields[3], "ground_kg");
        d.arboreal_revenue = parse_qty(fields[4], "arboreal_revenue");
        d.ground_revenue = parse_qty(fields[5], "ground_revenue");
        if (!parse_int(fields[6], d.carcass_count) || d.carcass_count < 0) {
            throw fail("bad carcass_count \"" + fields[6] + "\"");
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace bioeco
