#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bioeco/market_data.hpp"

namespace bioeco {

// One day's harvest mix in the (arboreal, ground) biomass plane.
struct TakeoffPoint {
    double a_qty = 0;  // arboreal kg on the day
    double g_qty = 0;  // ground kg on the day
    Date date;
    std::string region;
};

struct FrontierPoint {
    double a = 0;
    double g = 0;
};

// Outer boundary of a point cloud: the upper-right convex hull chain
// with free-disposal anchors, running from (0, g_max) to (a_max, 0).
// Interior g strictly decreases and a strictly increases along it.
struct Frontier {
    std::vector<FrontierPoint> vertices;
    // provenance
    std::string region;
    int year = 0;
    int point_count = 0;

    double a_max() const { return vertices.back().a; }
    double g_max() const { return vertices.front().g; }
};

// Builds the frontier from a day cloud. Collinear interior points are
// dropped; exact duplicates count once. Throws "degenerate frontier"
// when every point is (0, 0).
Frontier build_frontier(std::span<const TakeoffPoint> points);

struct RadialProjection {
    FrontierPoint point;  // theta * observed, componentwise
    double theta = 1;     // >= 1 for points inside the frontier
};

// Intersects the ray {lambda * observed} with the frontier chain.
// Throws for the zero point ("ray undefined") and for points strictly
// outside the frontier, which signals a stale frontier.
RadialProjection radial_project(const TakeoffPoint& point, const Frontier& frontier);

// p_ground * g + p_arboreal * a.
double revenue(const FrontierPoint& point, const PriceSystem& prices);

// Frontier vertex with maximal revenue; when an edge is parallel to
// the isorevenue line the higher-g endpoint wins.
FrontierPoint optimal_point(const Frontier& frontier, const PriceSystem& prices);

struct EfficiencyDecomposition {
    TakeoffPoint observed;
    FrontierPoint projected;
    double theta = 1;
    FrontierPoint optimal;
    double technical_loss = 0;   // revenue(projected) - revenue(observed)
    double allocative_loss = 0;  // revenue(optimal) - revenue(projected)

    // Radial biomass shortfall, the auxiliary biomass-unit metric.
    double technical_loss_kg() const {
        return (theta - 1.0) * (observed.a_qty + observed.g_qty);
    }
};

EfficiencyDecomposition decompose_day(const TakeoffPoint& point, const Frontier& frontier,
                                      const PriceSystem& prices);

// Region/year cell of the batch summary. sd and t are absent for
// single-day groups; t is also absent when sd is zero.
struct RegionYearSummary {
    std::string region;  // empty when pooled across regions
    std::optional<int> year;
    int n_days = 0;
    double mean_technical = 0;
    double mean_allocative = 0;
    std::optional<double> sd_technical;
    std::optional<double> sd_allocative;
    std::optional<double> t_technical;
    std::optional<double> t_allocative;
};

// One pooled group: its days and the price system its frontier is
// judged against.
struct DayGroup {
    std::string region;
    std::optional<int> year;
    std::vector<TakeoffPoint> days;
    PriceSystem prices;
};

struct GroupResult {
    RegionYearSummary summary;
    std::vector<EfficiencyDecomposition> days;  // zero-biomass days excluded
    int zero_days = 0;                          // excluded count
    Frontier frontier;
    PriceSystem prices;
};

// Builds the group's frontier from its own days, decomposes each
// nonzero day, and summarizes. Throws when the group is empty.
GroupResult analyze_group(const DayGroup& group);

// analyze_group over every group, sorted by (region, year).
std::vector<GroupResult> batch_analyze(std::vector<DayGroup> groups);
std::vector<RegionYearSummary> batch_summarize(std::vector<DayGroup> groups);

// Summary CSV:
//   region,year,n_days,mean_technical,sd_technical,t_technical,
//   mean_allocative,sd_allocative,t_allocative
std::string summary_csv(std::span<const RegionYearSummary> rows);

}  // namespace bioeco
