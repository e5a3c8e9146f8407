#include "bioeco/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bioeco/csv.hpp"

namespace bioeco {

namespace {

// Twice the signed area of (o, u, v); negative for a clockwise turn.
double cross(const FrontierPoint& o, const FrontierPoint& u, const FrontierPoint& v) {
    return (u.a - o.a) * (v.g - o.g) - (u.g - o.g) * (v.a - o.a);
}

// cross of vertex with the ray direction; negative while the vertex
// lies on the steep side of the ray.
double ray_side(const FrontierPoint& v, double da, double dg) {
    return v.a * dg - v.g * da;
}

constexpr double kOnFrontierTol = 1e-9;

}  // namespace

Frontier build_frontier(std::span<const TakeoffPoint> points) {
    double g_max = 0;
    double a_max = 0;
    bool any = false;
    for (const auto& p : points) {
        if (p.a_qty < 0 || p.g_qty < 0) {
            throw std::invalid_argument("takeoff quantities must be nonnegative");
        }
        g_max = std::max(g_max, p.g_qty);
        a_max = std::max(a_max, p.a_qty);
        any = true;
    }
    if (!any || (g_max == 0 && a_max == 0)) {
        throw std::runtime_error("degenerate frontier: no point with positive biomass");
    }

    // One candidate per distinct a: only the largest g can be extreme.
    std::map<double, double> best_g;
    for (const auto& p : points) {
        auto [it, inserted] = best_g.try_emplace(p.a_qty, p.g_qty);
        if (!inserted) {
            it->second = std::max(it->second, p.g_qty);
        }
    }

    Frontier frontier;
    frontier.point_count = static_cast<int>(points.size());
    auto& chain = frontier.vertices;
    chain.push_back({0.0, g_max});
    for (const auto& [a, g] : best_g) {
        if (a == 0.0) {
            continue;  // at the axis the anchor already dominates
        }
        FrontierPoint p{a, g};
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) >= 0) {
            chain.pop_back();
        }
        chain.push_back(p);
    }
    FrontierPoint b{a_max, 0.0};
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), b) >= 0) {
        chain.pop_back();
    }
    if (chain.back().a != b.a || chain.back().g != b.g) {
        chain.push_back(b);
    }
    return frontier;
}

RadialProjection radial_project(const TakeoffPoint& point, const Frontier& frontier) {
    double pa = point.a_qty;
    double pg = point.g_qty;
    if (pa == 0 && pg == 0) {
        throw std::runtime_error("radial projection undefined for the zero point");
    }
    if (pa < 0 || pg < 0) {
        throw std::invalid_argument("takeoff quantities must be nonnegative");
    }

    auto beyond = [&]() {
        return std::runtime_error("point (" + fmt_general(pa) + ", " + fmt_general(pg) +
                                  ") lies beyond the frontier (stale frontier?)");
    };

    auto finish = [&](double theta) {
        if (theta < 1.0 - kOnFrontierTol) {
            throw beyond();
        }
        if (theta < 1.0) {
            theta = 1.0;  // on the frontier up to rounding
        }
        RadialProjection proj;
        proj.theta = theta;
        proj.point = {theta * pa, theta * pg};
        return proj;
    };

    // Axis rays project to the corresponding anchor.
    if (pg == 0) {
        if (frontier.a_max() == 0) {
            throw beyond();
        }
        return finish(frontier.a_max() / pa);
    }
    if (pa == 0) {
        if (frontier.g_max() == 0) {
            throw beyond();
        }
        return finish(frontier.g_max() / pg);
    }
    if (frontier.a_max() == 0 || frontier.g_max() == 0) {
        throw beyond();
    }

    // The chain runs from the g-axis to the a-axis, so ray_side moves
    // from negative to positive; the crossing sits where it changes sign.
    const auto& chain = frontier.vertices;
    double prev_side = ray_side(chain.front(), pa, pg);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        double side = ray_side(chain[i], pa, pg);
        if (side >= 0) {
            double t = prev_side / (prev_side - side);
            const auto& u = chain[i - 1];
            const auto& v = chain[i];
            FrontierPoint x{u.a + t * (v.a - u.a), u.g + t * (v.g - u.g)};
            double lambda = (x.a * pa + x.g * pg) / (pa * pa + pg * pg);
            return finish(lambda);
        }
        prev_side = side;
    }
    throw beyond();  // unreachable for a well-formed chain
}

double revenue(const FrontierPoint& point, const PriceSystem& prices) {
    prices.validate();
    return prices.p_ground * point.g + prices.p_arboreal * point.a;
}

FrontierPoint optimal_point(const Frontier& frontier, const PriceSystem& prices) {
    prices.validate();
    if (frontier.vertices.empty()) {
        throw std::invalid_argument("empty frontier");
    }
    // Vertices are ordered by decreasing g, so keeping strict
    // improvements only makes the higher-g endpoint win ties.
    FrontierPoint best = frontier.vertices.front();
    double best_revenue = revenue(best, prices);
    for (const auto& v : frontier.vertices) {
        double r = revenue(v, prices);
        if (r > best_revenue) {
            best_revenue = r;
            best = v;
        }
    }
    return best;
}

EfficiencyDecomposition decompose_day(const TakeoffPoint& point, const Frontier& frontier,
                                      const PriceSystem& prices) {
    EfficiencyDecomposition d;
    d.observed = point;
    auto proj = radial_project(point, frontier);
    d.projected = proj.point;
    d.theta = proj.theta;
    d.optimal = optimal_point(frontier, prices);
    double r_observed = revenue({point.a_qty, point.g_qty}, prices);
    double r_projected = revenue(d.projected, prices);
    double r_optimal = revenue(d.optimal, prices);
    d.technical_loss = r_projected - r_observed;
    // The projection lies on a chord of the hull, so the optimal vertex
    // revenue dominates it up to rounding.
    d.allocative_loss = std::max(0.0, r_optimal - r_projected);
    return d;
}

namespace {

void summarize_losses(const std::vector<EfficiencyDecomposition>& days,
                      RegionYearSummary& summary) {
    int n = static_cast<int>(days.size());
    summary.n_days = n;
    if (n == 0) {
        return;
    }
    double sum_t = 0;
    double sum_a = 0;
    for (const auto& d : days) {
        sum_t += d.technical_loss;
        sum_a += d.allocative_loss;
    }
    summary.mean_technical = sum_t / n;
    summary.mean_allocative = sum_a / n;
    if (n < 2) {
        return;
    }
    double ss_t = 0;
    double ss_a = 0;
    for (const auto& d : days) {
        double dt = d.technical_loss - summary.mean_technical;
        double da = d.allocative_loss - summary.mean_allocative;
        ss_t += dt * dt;
        ss_a += da * da;
    }
    summary.sd_technical = std::sqrt(ss_t / (n - 1));
    summary.sd_allocative = std::sqrt(ss_a / (n - 1));
    double root_n = std::sqrt(static_cast<double>(n));
    if (*summary.sd_technical > 0) {
        summary.t_technical = summary.mean_technical / (*summary.sd_technical / root_n);
    }
    if (*summary.sd_allocative > 0) {
        summary.t_allocative = summary.mean_allocative / (*summary.sd_allocative / root_n);
    }
}

}  // namespace

GroupResult analyze_group(const DayGroup& group) {
    if (group.days.empty()) {
        throw std::invalid_argument("empty day group");
    }
    group.prices.validate();

    GroupResult result;
    result.prices = group.prices;
    result.summary.region = group.region;
    result.summary.year = group.year;

    std::vector<TakeoffPoint> nonzero;
    nonzero.reserve(group.days.size());
    for (const auto& day : group.days) {
        if (day.a_qty == 0 && day.g_qty == 0) {
            ++result.zero_days;
        } else {
            nonzero.push_back(day);
        }
    }
    if (nonzero.empty()) {
        throw std::runtime_error("degenerate frontier: no point with positive biomass");
    }
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const TakeoffPoint& x, const TakeoffPoint& y) { return x.date < y.date; });

    result.frontier = build_frontier(nonzero);
    result.frontier.region = group.region;
    result.frontier.year = group.year.value_or(0);

    result.days.reserve(nonzero.size());
    for (const auto& day : nonzero) {
        result.days.push_back(decompose_day(day, result.frontier, group.prices));
    }
    summarize_losses(result.days, result.summary);
    return result;
}

std::vector<GroupResult> batch_analyze(std::vector<DayGroup> groups) {
    std::sort(groups.begin(), groups.end(), [](const DayGroup& x, const DayGroup& y) {
        if (x.region != y.region) {
            return x.region < y.region;
        }
        return x.year < y.year;
    });
    std::vector<GroupResult> results;
    results.reserve(groups.size());
    for (const auto& group : groups) {
        results.push_back(analyze_group(group));
    }
    return results;
}

std::vector<RegionYearSummary> batch_summarize(std::vector<DayGroup> groups) {
    std::vector<RegionYearSummary> summaries;
    for (auto& result : batch_analyze(std::move(groups))) {
        summaries.push_back(std::move(result.summary));
    }
    return summaries;
}

std::string summary_csv(std::span<const RegionYearSummary> rows) {
    std::ostringstream out;
    out << "region,year,n_days,mean_technical,sd_technical,t_technical,"
           "mean_allocative,sd_allocative,t_allocative\n";
    auto opt = [](const std::optional<double>& v) { return v ? fmt_general(*v) : std::string(); };
    for (const auto& row : rows) {
        out << row.region << ',';
        if (row.year) {
            out << *row.year;
        }
        out << ',' << row.n_days << ',' << fmt_general(row.mean_technical) << ','
            << opt(row.sd_technical) << ',' << opt(row.t_technical) << ','
            << fmt_general(row.mean_allocative) << ',' << opt(row.sd_allocative) << ','
            << opt(row.t_allocative) << "\n";
    }
    return out.str();
}

}  // namespace bioeco
