#include "bioeco/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "bioeco/config.hpp"
#include "bioeco/csv.hpp"
#include "bioeco/efficiency.hpp"
#include "bioeco/market_data.hpp"
#include "bioeco/svg_plot.hpp"

namespace bioeco {

namespace {

using nlohmann::json;

// Sentinel in group keys for a year pooled away.
constexpr int kPooledYear = -1;

std::string group_label(const std::string& region, const std::optional<int>& year) {
    return region + "/" + (year ? std::to_string(*year) : std::string("all"));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

std::vector<DailyTakeoff> read_daily_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_daily_csv(in);
}

// Buckets the daily series per the pooling choice, after the optional
// region/year filters. When no explicit prices are given each group is
// judged against its own biomass-weighted mean unit prices.
std::vector<DayGroup> make_groups(const std::vector<DailyTakeoff>& daily, Pooling pooling,
                                  const std::optional<std::string>& region,
                                  const std::optional<int>& year,
                                  const std::optional<PriceSystem>& prices) {
    struct Bucket {
        std::vector<TakeoffPoint> days;
        Fixed a_kg, g_kg, a_rev, g_rev;
    };
    const bool pool_region = pooling == Pooling::year || pooling == Pooling::all;
    const bool pool_year = pooling == Pooling::region || pooling == Pooling::all;

    std::map<std::pair<std::string, int>, Bucket> buckets;
    for (const auto& row : daily) {
        if (region && row.region != *region) continue;
        if (year && row.date.year != *year) continue;
        std::pair<std::string, int> key{pool_region ? std::string("all") : row.region,
                                        pool_year ? kPooledYear : row.date.year};
        Bucket& b = buckets[key];
        b.days.push_back(
            {row.arboreal_kg.to_double(), row.ground_kg.to_double(), row.date, row.region});
        b.a_kg += row.arboreal_kg;
        b.g_kg += row.ground_kg;
        b.a_rev += row.arboreal_revenue;
        b.g_rev += row.ground_revenue;
    }
    if (buckets.empty()) throw std::runtime_error("no days selected; check --region/--year");

    std::vector<DayGroup> groups;
    for (auto& [key, b] : buckets) {
        DayGroup g;
        g.region = key.first;
        if (key.second != kPooledYear) g.year = key.second;
        g.days = std::move(b.days);
        if (prices) {
            g.prices = *prices;
        } else {
            if (b.a_kg.is_zero() || b.g_kg.is_zero() || b.a_rev.is_zero() || b.g_rev.is_zero())
                throw std::runtime_error("group " + group_label(g.region, g.year) +
                                         ": cannot derive prices (a guild has zero biomass or "
                                         "revenue); pass --p-ground and --p-arboreal");
            g.prices.p_ground = b.g_rev.to_double() / b.g_kg.to_double();
            g.prices.p_arboreal = b.a_rev.to_double() / b.a_kg.to_double();
            g.prices.validate();
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

json summary_json(const RegionYearSummary& s) {
    json j;
    j["region"] = s.region;
    j["year"] = s.year ? json(*s.year) : json(nullptr);
    j["n_days"] = s.n_days;
    j["mean_technical"] = s.mean_technical;
    j["mean_allocative"] = s.mean_allocative;
    j["sd_technical"] = s.sd_technical ? json(*s.sd_technical) : json(nullptr);
    j["sd_allocative"] = s.sd_allocative ? json(*s.sd_allocative) : json(nullptr);
    j["t_technical"] = s.t_technical ? json(*s.t_technical) : json(nullptr);
    j["t_allocative"] = s.t_allocative ? json(*s.t_allocative) : json(nullptr);
    return j;
}

json results_json(const std::vector<GroupResult>& results, Pooling pooling,
                  bool explicit_prices) {
    json doc;
    doc["metadata"] = {{"pooling", pooling_name(pooling)},
                       {"price_source", explicit_prices ? "explicit" : "derived-per-group"},
                       {"loss_units", "revenue per day"}};
    json& jgroups = doc["groups"] = json::array();
    json& jdays = doc["days"] = json::array();
    json& jsummary = doc["summary"] = json::array();
    for (const auto& r : results) {
        json jg;
        jg["region"] = r.summary.region;
        jg["year"] = r.summary.year ? json(*r.summary.year) : json(nullptr);
        jg["n_days"] = r.summary.n_days;
        jg["zero_days"] = r.zero_days;
        jg["p_ground"] = r.prices.p_ground;
        jg["p_arboreal"] = r.prices.p_arboreal;
        json& jf = jg["frontier"] = json::array();
        for (const auto& v : r.frontier.vertices) jf.push_back({{"a", v.a}, {"g", v.g}});
        FrontierPoint opt = optimal_point(r.frontier, r.prices);
        jg["optimal"] = {{"a", opt.a}, {"g", opt.g}};
        jgroups.push_back(std::move(jg));

        for (const auto& d : r.days) {
            jdays.push_back({{"region", d.observed.region},
                             {"date", d.observed.date.str()},
                             {"year", d.observed.date.year},
                             {"a_qty", d.observed.a_qty},
                             {"g_qty", d.observed.g_qty},
                             {"theta", d.theta},
                             {"technical_loss", d.technical_loss},
                             {"allocative_loss", d.allocative_loss},
                             {"technical_loss_kg", d.technical_loss_kg()}});
        }
        jsummary.push_back(summary_json(r.summary));
    }
    return doc;
}

// Scatter + frontier + isorevenue + one highlighted ray, for a single
// analyzed group. The highlighted day carries the largest technical
// loss; ties resolve to the earliest date.
PlotSpec frontier_plot(const GroupResult& r) {
    PlotSpec spec;
    spec.kind = PlotKind::frontier_scatter;
    spec.title = "Harvest mix vs frontier: " + group_label(r.summary.region, r.summary.year);
    spec.x_label = "arboreal kg/day";
    spec.y_label = "ground kg/day";

    Series days;
    days.label = "days";
    days.style = SeriesStyle::markers;
    days.color = "#555555";
    days.size = 3.0;
    for (const auto& d : r.days) days.points.emplace_back(d.observed.a_qty, d.observed.g_qty);

    Series frontier;
    frontier.label = "frontier";
    frontier.style = SeriesStyle::line;
    frontier.color = "#1f77b4";
    frontier.size = 2.0;
    for (const auto& v : r.frontier.vertices) frontier.points.emplace_back(v.a, v.g);

    FrontierPoint opt = optimal_point(r.frontier, r.prices);
    double rev_opt = revenue(opt, r.prices);
    // Isorevenue segment through the optimal point, clipped to a box a
    // little larger than the frontier so lopsided prices cannot blow up
    // the plot scale. The segment runs from (0, R/pg) to (R/pa, 0).
    double bx = r.frontier.a_max() * 1.02;
    double by = r.frontier.g_max() * 1.02;
    double t_lo = std::max(0.0, 1.0 - by * r.prices.p_ground / rev_opt);
    double t_hi = std::min(1.0, bx * r.prices.p_arboreal / rev_opt);
    if (t_hi < t_lo) t_hi = t_lo;
    auto iso_point = [&](double t) {
        return std::pair<double, double>{t * rev_opt / r.prices.p_arboreal,
                                         (1.0 - t) * rev_opt / r.prices.p_ground};
    };
    Series iso;
    iso.label = "isorevenue";
    iso.style = SeriesStyle::line;
    iso.color = "#9467bd";
    iso.size = 1.5;
    iso.points.push_back(iso_point(t_lo));
    iso.points.push_back(iso_point(t_hi));

    const EfficiencyDecomposition* worst = &r.days.front();
    for (const auto& d : r.days)
        if (d.technical_loss > worst->technical_loss) worst = &d;

    Series ray;
    ray.label = "ray";
    ray.style = SeriesStyle::line;
    ray.color = "#d62728";
    ray.size = 1.5;
    ray.points.emplace_back(0.0, 0.0);
    ray.points.emplace_back(worst->projected.a, worst->projected.g);

    Series highlight;
    highlight.label = "highlighted day";
    highlight.style = SeriesStyle::markers;
    highlight.color = "#d62728";
    highlight.size = 4.5;
    highlight.points.emplace_back(worst->observed.a_qty, worst->observed.g_qty);

    Series best;
    best.label = "optimal";
    best.style = SeriesStyle::markers;
    best.color = "#2ca02c";
    best.size = 5.0;
    best.points.emplace_back(opt.a, opt.g);

    spec.series = {std::move(days), std::move(frontier), std::move(iso),
                   std::move(ray),  std::move(highlight), std::move(best)};
    return spec;
}

PlotSpec population_plot(const PopulationPath& path) {
    PlotSpec spec;
    spec.kind = PlotKind::population_path;
    spec.title = "Population index paths";
    spec.x_label = "years";
    spec.y_label = "population index N(t)/N(0)";

    Series arboreal;
    arboreal.label = "arboreal";
    arboreal.style = SeriesStyle::line;
    arboreal.color = "#1f77b4";
    arboreal.size = 2.0;
    Series ground;
    ground.label = "ground";
    ground.style = SeriesStyle::line;
    ground.color = "#ff7f0e";
    ground.size = 2.0;
    for (size_t i = 0; i < path.times.size(); ++i) {
        arboreal.points.emplace_back(path.times[i], path.arboreal_index[i]);
        ground.points.emplace_back(path.times[i], path.ground_index[i]);
    }
    spec.series = {std::move(arboreal), std::move(ground)};
    return spec;
}

// Corpus-level descriptive statistics: biomass and revenue by year
// (revenue both nominal and deflated to the first year), regional
// shares, and the ground/arboreal unit-price ratio.
json build_stats(const ParseResult& parsed, const SpeciesTable& species,
                 const std::vector<DailyTakeoff>& daily, double deflation_rate) {
    json stats;
    stats["n_records"] = parsed.records.size();
    stats["n_row_errors"] = parsed.errors.size();
    stats["n_days"] = daily.size();

    std::set<std::string> regions;
    std::set<int> years;
    for (const auto& row : daily) {
        regions.insert(row.region);
        years.insert(row.date.year);
    }
    stats["regions"] = json(regions);
    stats["years"] = json(years);

    try {
        stats["weighted_price_ratio"] = weighted_price_ratio(parsed.records, species);
    } catch (const std::exception&) {
        stats["weighted_price_ratio"] = nullptr;
    }

    if (!years.empty()) {
        const int base_year = *years.begin();
        stats["deflation"] = {{"annual_rate", deflation_rate}, {"base_year", base_year}};
        struct Totals {
            Fixed a_kg, g_kg, revenue;
        };
        std::map<int, Totals> by_year;
        for (const auto& row : daily) {
            Totals& t = by_year[row.date.year];
            t.a_kg += row.arboreal_kg;
            t.g_kg += row.ground_kg;
            t.revenue += row.arboreal_revenue + row.ground_revenue;
        }
        json jy;
        for (const auto& [y, t] : by_year) {
            json entry;
            entry["arboreal_kg"] = t.a_kg.to_double();
            entry["ground_kg"] = t.g_kg.to_double();
            entry["total_kg"] = (t.a_kg + t.g_kg).to_double();
            entry["nominal_revenue"] = t.revenue.to_double();
            entry["real_revenue"] =
                deflate_revenue(t.revenue, y - base_year, deflation_rate).to_double();
            try {
                json shares;
                for (const auto& r : regions) shares[r] = regional_share(daily, {r}, y);
                entry["share_by_region"] = std::move(shares);
            } catch (const std::exception&) {
                // zero-biomass year: shares undefined, omitted
            }
            jy[std::to_string(y)] = std::move(entry);
        }
        stats["by_year"] = std::move(jy);
    }
    return stats;
}

struct ParsedCorpus {
    ParseResult parsed;
    SpeciesTable species;
    std::vector<DailyTakeoff> daily;
};

// Shared front half of ingest and report: parse both files, surface row
// errors on stderr, aggregate.
ParsedCorpus load_corpus(const std::string& records_path, const std::string& species_path) {
    std::ifstream rf(records_path, std::ios::binary);
    if (!rf) throw std::runtime_error("cannot open " + records_path);
    ParsedCorpus c;
    c.parsed = parse_records(rf);

    std::ifstream sf(species_path, std::ios::binary);
    if (!sf) throw std::runtime_error("cannot open " + species_path);
    c.species = parse_species(sf);

    for (const auto& e : c.parsed.errors)
        std::cerr << "row " << e.line << ": " << e.message << "\n";
    c.daily = aggregate_daily(c.parsed.records, c.species);
    return c;
}

int run_ingest(const IngestOptions& opt) {
    ParsedCorpus c = load_corpus(opt.records_path, opt.species_path);
    std::ostringstream os;
    write_daily_csv(os, c.daily);
    write_file_atomic(opt.out_path, os.str());
    if (opt.stats_path) {
        json stats = build_stats(c.parsed, c.species, c.daily, opt.deflation_rate);
        write_file_atomic(*opt.stats_path, stats.dump(2) + "\n");
    }
    return 0;
}

int run_efficiency(const EfficiencyOptions& opt) {
    auto daily = read_daily_file(opt.daily_path);
    std::optional<PriceSystem> prices;
    if (opt.p_ground) {
        prices = PriceSystem{*opt.p_ground, *opt.p_arboreal};
        prices->validate();
    }
    auto groups = make_groups(daily, opt.pooling, opt.region, opt.year, prices);
    auto results = batch_analyze(std::move(groups));

    json doc = results_json(results, opt.pooling, prices.has_value());
    write_file_atomic(opt.out_path, doc.dump(2) + "\n");

    if (opt.summary_path) {
        std::vector<RegionYearSummary> rows;
        rows.reserve(results.size());
        for (const auto& r : results) rows.push_back(r.summary);
        write_file_atomic(*opt.summary_path, summary_csv(rows));
    }
    if (opt.svg_path) {
        if (results.size() != 1)
            throw std::runtime_error(
                "--svg needs exactly one group (got " + std::to_string(results.size()) +
                "); narrow with --region/--year or pool with --pool all");
        write_file_atomic(*opt.svg_path, emit_svg(frontier_plot(results.front())));
    }
    return 0;
}

int run_simulate(const SimulateOptions& opt) {
    opt.params.validate();
    opt.rates.validate();
    std::vector<double> times(static_cast<size_t>(opt.steps) + 1);
    for (size_t i = 0; i < times.size(); ++i)
        times[i] = opt.t_max * static_cast<double>(i) / static_cast<double>(opt.steps);
    PopulationPath path = population_path(opt.params, opt.rates, std::move(times));

    std::string csv = "t,arboreal_index,ground_index\n";
    for (size_t i = 0; i < path.times.size(); ++i) {
        csv += fmt_general(path.times[i], 12);
        csv += ',';
        csv += fmt_general(path.arboreal_index[i], 12);
        csv += ',';
        csv += fmt_general(path.ground_index[i], 12);
        csv += '\n';
    }
    write_file_atomic(opt.out_path, csv);
    if (opt.svg_path) write_file_atomic(*opt.svg_path, emit_svg(population_plot(path)));
    return 0;
}

int run_sustainability(const SustainabilityOptions& opt) {
    std::ifstream in(opt.inputs_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opt.inputs_path);
    auto rows = read_sustainability_csv(in);
    std::vector<BoundedAssessment> assessed;
    assessed.reserve(rows.size());
    for (const auto& row : rows) assessed.push_back(assess_bounds(row, opt.coeffs));
    write_file_atomic(opt.out_path, assessment_csv(assessed));
    return 0;
}

int run_report(const ReportOptions& opt) {
    namespace fs = std::filesystem;
    ParsedCorpus c = load_corpus(opt.records_path, opt.species_path);

    std::optional<PriceSystem> prices;
    if (opt.p_ground) {
        prices = PriceSystem{*opt.p_ground, *opt.p_arboreal};
        prices->validate();
    }
    auto groups = make_groups(c.daily, opt.pooling, std::nullopt, std::nullopt, prices);
    auto results = batch_analyze(std::move(groups));

    fs::create_directories(opt.out_dir);
    fs::path dir(opt.out_dir);

    std::ostringstream daily_os;
    write_daily_csv(daily_os, c.daily);
    write_file_atomic((dir / "daily.csv").string(), daily_os.str());

    json doc = results_json(results, opt.pooling, prices.has_value());
    write_file_atomic((dir / "results.json").string(), doc.dump(2) + "\n");

    std::vector<RegionYearSummary> rows;
    rows.reserve(results.size());
    for (const auto& r : results) rows.push_back(r.summary);
    write_file_atomic((dir / "summary.csv").string(), summary_csv(rows));

    json manifest;
    manifest["command"] = "report";
    manifest["inputs"] = {{"records", opt.records_path}, {"species", opt.species_path}};
    manifest["parameters"] = {
        {"pooling", pooling_name(opt.pooling)},
        {"p_ground", prices ? json(prices->p_ground) : json(nullptr)},
        {"p_arboreal", prices ? json(prices->p_arboreal) : json(nullptr)},
        {"deflation_rate", opt.deflation_rate}};
    manifest["artifacts"] = {"daily.csv", "results.json", "summary.csv"};
    manifest["stats"] = build_stats(c.parsed, c.species, c.daily, opt.deflation_rate);
    write_file_atomic((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    return 0;
}

}  // namespace

const char* pooling_name(Pooling p) {
    switch (p) {
        case Pooling::region_year: return "region-year";
        case Pooling::region: return "region";
        case Pooling::year: return "year";
        case Pooling::all: return "all";
    }
    return "region-year";
}

Command parse_cli(const std::vector<std::string>& args) {
    CLI::App app{"Two-output harvest efficiency toolkit"};
    app.name("bioeco");
    app.require_subcommand(1);

    const std::map<std::string, Pooling> pool_map{{"region-year", Pooling::region_year},
                                                  {"region", Pooling::region},
                                                  {"year", Pooling::year},
                                                  {"all", Pooling::all}};

    IngestOptions ing;
    std::optional<std::string> ing_config;
    CLI::App* ingest = app.add_subcommand(
        "ingest", "Aggregate market records into a daily two-output series");
    ingest->add_option("--records", ing.records_path, "market records CSV")->required();
    ingest->add_option("--species", ing.species_path, "species reference CSV")->required();
    ingest->add_option("--out", ing.out_path, "daily series CSV to write")->required();
    ingest->add_option("--stats", ing.stats_path, "also write descriptive statistics JSON here");
    ingest->add_option("--deflation-rate", ing.deflation_rate,
                       "annual rate for real-revenue statistics (default 0.05)");
    ingest->add_option("--config", ing_config, "TOML parameter file");

    EfficiencyOptions ef;
    std::optional<std::string> eff_config;
    CLI::App* eff = app.add_subcommand(
        "efficiency", "Frontier construction, radial projection, and loss decomposition");
    eff->add_option("--daily", ef.daily_path, "daily series CSV (from ingest)")->required();
    eff->add_option("--out", ef.out_path, "results JSON to write")->required();
    eff->add_option("--summary", ef.summary_path, "summary CSV to write");
    eff->add_option("--svg", ef.svg_path, "frontier scatter SVG (single group only)");
    eff->add_option("--region", ef.region, "keep only this region");
    eff->add_option("--year", ef.year, "keep only this year");
    eff->add_option("--p-ground", ef.p_ground, "ground price per kg");
    eff->add_option("--p-arboreal", ef.p_arboreal, "arboreal price per kg");
    eff->add_option("--pool", ef.pooling, "frontier pooling (default region-year)")
        ->transform(CLI::CheckedTransformer(pool_map));
    eff->add_option("--config", eff_config, "TOML parameter file");

    SimulateOptions sm;
    std::optional<std::string> sim_config;
    std::optional<double> s_alpha, s_gamma, s_s, s_labor, s_exp_a, s_exp_g, s_a, s_g;
    CLI::App* sim =
        app.add_subcommand("simulate", "Population index paths under constant harvest rates");
    sim->add_option("--alpha", s_alpha, "arboreal growth rate per year");
    sim->add_option("--gamma", s_gamma, "ground growth rate per year");
    sim->add_option("--s", s_s, "shotgun labor share");
    sim->add_option("--labor", s_labor, "total labor input (default 1)");
    sim->add_option("--exp-a", s_exp_a, "arboreal harvest exponent (default 2)");
    sim->add_option("--exp-g", s_exp_g, "ground harvest exponent (default 1.9)");
    sim->add_option("--a", s_a, "arboreal harvest rate per year");
    sim->add_option("--g", s_g, "ground harvest rate per year");
    sim->add_option("--t-max", sm.t_max, "horizon in years (default 100)")
        ->check(CLI::PositiveNumber);
    sim->add_option("--steps", sm.steps, "output rows after t=0 (default 100)")
        ->check(CLI::Range(1, 10000000));
    sim->add_option("--out", sm.out_path, "path CSV to write")->required();
    sim->add_option("--svg", sm.svg_path, "population path SVG");
    sim->add_option("--config", sim_config, "TOML parameter file");

    SustainabilityOptions su;
    std::optional<std::string> sus_config;
    std::optional<double> su_rr, su_pbr;
    CLI::App* sus = app.add_subcommand(
        "sustainability", "Sustainable-yield assessments from bounded population inputs");
    sus->add_option("--inputs", su.inputs_path, "species inputs CSV")->required();
    sus->add_option("--out", su.out_path, "assessment CSV to write")->required();
    sus->add_option("--rr-factor", su_rr, "production multiplier (default 0.6)");
    sus->add_option("--pbr-factor", su_pbr, "net-productivity multiplier (default 0.5)");
    sus->add_option("--config", sus_config, "TOML parameter file");

    ReportOptions rep;
    std::optional<std::string> rep_config;
    CLI::App* report =
        app.add_subcommand("report", "Ingest plus efficiency plus a manifest, in one run");
    report->add_option("--records", rep.records_path, "market records CSV")->required();
    report->add_option("--species", rep.species_path, "species reference CSV")->required();
    report->add_option("--out-dir", rep.out_dir, "directory for the artifact set")->required();
    report->add_option("--p-ground", rep.p_ground, "ground price per kg");
    report->add_option("--p-arboreal", rep.p_arboreal, "arboreal price per kg");
    report->add_option("--pool", rep.pooling, "frontier pooling (default region-year)")
        ->transform(CLI::CheckedTransformer(pool_map));
    report->add_option("--deflation-rate", rep.deflation_rate,
                       "annual rate for real-revenue statistics (default 0.05)");
    report->add_option("--config", rep_config, "TOML parameter file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        throw CliExit(subs.empty() ? app.help() : subs.front()->help());
    } catch (const CLI::CallForAllHelp&) {
        throw CliExit(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "; run 'bioeco --help' for usage");
    }

    auto load_cfg = [](const std::optional<std::string>& path) {
        return path ? load_config_file(*path) : AppConfig{};
    };
    auto require_price_pair = [](std::optional<double>& pg, std::optional<double>& pa,
                                 const AppConfig& cfg) {
        if (!pg) pg = cfg.p_ground;
        if (!pa) pa = cfg.p_arboreal;
        if (pg.has_value() != pa.has_value())
            throw UsageError("--p-ground and --p-arboreal must be given together");
    };

    if (ingest->parsed()) {
        (void)load_cfg(ing_config);  // validate only; ingest takes no parameters from it
        if (ing.deflation_rate <= -1) throw UsageError("--deflation-rate must exceed -1");
        return Command{Verb::ingest, ing};
    }
    if (eff->parsed()) {
        AppConfig cfg = load_cfg(eff_config);
        require_price_pair(ef.p_ground, ef.p_arboreal, cfg);
        return Command{Verb::efficiency, ef};
    }
    if (sim->parsed()) {
        AppConfig cfg = load_cfg(sim_config);
        sm.params = cfg.production;
        sm.rates = cfg.rates;
        if (s_alpha) sm.params.alpha = *s_alpha;
        if (s_gamma) sm.params.gamma = *s_gamma;
        if (s_s) sm.params.s = *s_s;
        if (s_labor) sm.params.labor = *s_labor;
        if (s_exp_a) sm.params.exp_a = *s_exp_a;
        if (s_exp_g) sm.params.exp_g = *s_exp_g;
        if (s_a) sm.rates.a = *s_a;
        if (s_g) sm.rates.g = *s_g;
        return Command{Verb::simulate, sm};
    }
    if (sus->parsed()) {
        AppConfig cfg = load_cfg(sus_config);
        su.coeffs = cfg.sustainability;
        if (su_rr) su.coeffs.rr_production_factor = *su_rr;
        if (su_pbr) su.coeffs.pbr_factor = *su_pbr;
        return Command{Verb::sustainability, su};
    }
    AppConfig cfg = load_cfg(rep_config);
    require_price_pair(rep.p_ground, rep.p_arboreal, cfg);
    if (rep.deflation_rate <= -1) throw UsageError("--deflation-rate must exceed -1");
    return Command{Verb::report, rep};
}

int execute(const Command& cmd) {
    switch (cmd.verb) {
        case Verb::ingest: return run_ingest(std::get<IngestOptions>(cmd.options));
        case Verb::efficiency: return run_efficiency(std::get<EfficiencyOptions>(cmd.options));
        case Verb::simulate: return run_simulate(std::get<SimulateOptions>(cmd.options));
        case Verb::sustainability:
            return run_sustainability(std::get<SustainabilityOptions>(cmd.options));
        case Verb::report: return run_report(std::get<ReportOptions>(cmd.options));
    }
    throw std::logic_error("unhandled verb");
}

int run_cli(const std::vector<std::string>& args) {
    try {
        return execute(parse_cli(args));
    } catch (const CliExit& e) {
        std::cout << e.text();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace bioeco
