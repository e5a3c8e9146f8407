#pragma once

// Shared scaffolding for the test binaries: exact-arithmetic geometry
// oracles, grid-point generators, a temp-dir guard, and a subprocess
// runner for the CLI suites.

#include <sys/wait.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bioeco/efficiency.hpp"

namespace testutil {

using GridPoint = std::pair<int, int>;  // coordinates in eighths

// Random point cloud on the 1/8 grid, coordinates in [0, 12]. At least
// one point has positive biomass so frontier construction is defined.
inline std::vector<GridPoint> random_grid_points(std::mt19937& rng, int max_points = 12) {
    std::uniform_int_distribution<int> n_dist(1, max_points);
    std::uniform_int_distribution<int> c_dist(0, 96);
    for (;;) {
        int n = n_dist(rng);
        std::vector<GridPoint> pts;
        pts.reserve(static_cast<std::size_t>(n));
        bool any = false;
        for (int i = 0; i < n; ++i) {
            int a = c_dist(rng);
            int g = c_dist(rng);
            any = any || a > 0 || g > 0;
            pts.emplace_back(a, g);
        }
        if (any) {
            return pts;
        }
    }
}

inline std::vector<bioeco::TakeoffPoint> to_takeoff(const std::vector<GridPoint>& pts) {
    std::vector<bioeco::TakeoffPoint> out;
    out.reserve(pts.size());
    for (auto [a, g] : pts) {
        bioeco::TakeoffPoint p;
        p.a_qty = a / 8.0;
        p.g_qty = g / 8.0;
        out.push_back(p);
    }
    return out;
}

// Exhaustive free-disposal hull oracle in exact integer arithmetic.
// A data point survives iff no other point dominates it componentwise
// and no segment between two other points passes on or above it. The
// two axis anchors are part of the hull by construction.
inline std::vector<GridPoint> oracle_vertices(const std::vector<GridPoint>& pts) {
    std::set<GridPoint> uniq(pts.begin(), pts.end());
    int amax = 0;
    int gmax = 0;
    for (auto [a, g] : uniq) {
        amax = std::max(amax, a);
        gmax = std::max(gmax, g);
    }
    const GridPoint top{0, gmax};
    const GridPoint right{amax, 0};
    std::set<GridPoint> universe = uniq;
    universe.insert(top);
    universe.insert(right);

    std::set<GridPoint> verts{top, right};
    for (const auto& p : uniq) {
        if (p == top || p == right) {
            continue;
        }
        bool dominated = false;
        for (const auto& q : universe) {
            if (q != p && q.first >= p.first && q.second >= p.second) {
                dominated = true;
                break;
            }
        }
        for (auto qi = universe.begin(); !dominated && qi != universe.end(); ++qi) {
            for (auto ri = universe.begin(); !dominated && ri != universe.end(); ++ri) {
                const auto& q = *qi;
                const auto& r = *ri;
                if (q == p || r == p) {
                    continue;
                }
                if (!(q.first < p.first && p.first < r.first)) {
                    continue;
                }
                std::int64_t cx =
                    static_cast<std::int64_t>(r.first - q.first) * (p.second - q.second) -
                    static_cast<std::int64_t>(r.second - q.second) * (p.first - q.first);
                if (cx <= 0) {
                    dominated = true;
                }
            }
        }
        if (!dominated) {
            verts.insert(p);
        }
    }
    return {verts.begin(), verts.end()};
}

// Frontier vertices mapped back onto the integer grid (exact, since
// grid coordinates are dyadic) and set-ordered for comparison.
inline std::vector<GridPoint> frontier_grid_vertices(const bioeco::Frontier& frontier) {
    std::set<GridPoint> verts;
    for (const auto& v : frontier.vertices) {
        verts.emplace(static_cast<int>(std::llround(v.a * 8.0)),
                      static_cast<int>(std::llround(v.g * 8.0)));
    }
    return {verts.begin(), verts.end()};
}

// Independent ray-chain intersection in extended precision, for
// synthetic-corpus truth values. Direction (da, dg) points into the
// positive quadrant.
inline std::pair<double, double> ray_crossing(const std::vector<std::pair<double, double>>& chain,
                                              double da, double dg) {
    long double prev = static_cast<long double>(chain.front().first) * dg -
                       static_cast<long double>(chain.front().second) * da;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        long double side = static_cast<long double>(chain[i].first) * dg -
                           static_cast<long double>(chain[i].second) * da;
        if (side >= 0) {
            long double t = prev / (prev - side);
            long double x =
                chain[i - 1].first + t * (chain[i].first - chain[i - 1].first);
            long double y =
                chain[i - 1].second + t * (chain[i].second - chain[i - 1].second);
            return {static_cast<double>(x), static_cast<double>(y)};
        }
        prev = side;
    }
    throw std::runtime_error("ray does not cross the chain");
}

// ---- filesystem + subprocess scaffolding ----

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

class TempDir {
  public:
    TempDir() {
        std::string templ =
            (std::filesystem::temp_directory_path() / "bioeco_test_XXXXXX").string();
        std::vector<char> buf(templ.begin(), templ.end());
        buf.push_back('\0');
        if (mkdtemp(buf.data()) == nullptr) {
            throw std::runtime_error("mkdtemp failed");
        }
        path_ = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

// Runs a shell command with stdout/stderr captured into `dir`.
inline RunResult run_cmd(const std::string& cmd, const std::filesystem::path& dir) {
    auto out_path = dir / "_stdout.txt";
    auto err_path = dir / "_stderr.txt";
    std::string full = cmd + " >" + out_path.string() + " 2>" + err_path.string();
    int rc = std::system(full.c_str());
    RunResult result;
    if (rc == -1) {
        result.status = -1;
    } else if (WIFEXITED(rc)) {
        result.status = WEXITSTATUS(rc);
    } else {
        result.status = -2;
    }
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

// ---- shared sample corpus (hand-checked aggregates) ----

inline const char* kRecordsCsv =
    "date,species,count,mass_kg,price,method,origin,condition,age,sex\n"
    "2007-03-01,blue_duiker,2,9.500,38.000,snare,Luba,fresh,adult,female\n"
    "2007-03-01,red_colobus,1,8.000,8.000,shotgun,Luba,fresh,adult,male\n"
    "2007-03-02,blue_duiker,1,4.200,16.800,snare,Luba,smoked,adult,male\n"
    "2007-03-02,red_colobus,3,21.000,21.000,shotgun,Luba,fresh,immature,unknown\n"
    "2007-03-03,pouched_rat,4,6.000,24.000,snare,Luba,alive,adult,unknown\n"
    "2007-03-03,red_colobus,1,7.000,7.000,shotgun,Malabo,fresh,adult,female\n"
    "2007-03-03,blue_duiker,1,5.000,20.000,snare,Malabo,fresh,adult,female\n"
    "bogus-row,xx,0,0,0,?,?,?,?,?\n"
    "2008-05-09,blue_duiker,2,11.000,44.000,snare,Luba,fresh,adult,female\n"
    "2008-05-09,red_colobus,2,15.000,15.000,shotgun,Luba,fresh,adult,male\n";

inline const char* kSpeciesCsv =
    "species,guild,mean_mass_kg,lambda_max,density_per_km2,longevity_class\n"
    "blue_duiker,ground,4.7,1.57,12.0,medium\n"
    "pouched_rat,ground,1.5,2.0,20.0,short\n"
    "red_colobus,arboreal,7.5,1.16,15.0,long\n";

inline const char* kDailyCsv =
    "region,date,arboreal_kg,ground_kg,arboreal_revenue,ground_revenue,carcass_count\n"
    "Luba,2007-03-01,8.000,9.500,8.000,38.000,3\n"
    "Luba,2007-03-02,21.000,4.200,21.000,16.800,4\n"
    "Luba,2007-03-03,0.000,6.000,0.000,24.000,4\n"
    "Luba,2008-05-09,15.000,11.000,15.000,44.000,4\n"
    "Malabo,2007-03-03,7.000,5.000,7.000,20.000,2\n";

inline const char* kSustainabilityCsv =
    "species,actual_takeoff,area_km2,density_lower,density_upper,lambda_max,"
    "harvest_fraction,n_min_lower,n_min_upper,recovery_factor\n"
    "blue_duiker,28,100,0.5,1.0,1.5,0.2,50,100,0.5\n"
    "red_colobus,120,780,10,18,1.16,0.2,7800,14040,0.5\n";

}  // namespace testutil
