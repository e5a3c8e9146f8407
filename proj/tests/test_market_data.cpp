#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "bioeco/market_data.hpp"

using namespace bioeco;

namespace {

ParseResult parse_records_str(const std::string& text) {
    std::istringstream in(text);
    return parse_records(in);
}

SpeciesTable parse_species_str(const std::string& text) {
    std::istringstream in(text);
    return parse_species(in);
}

bool has_error(const ParseResult& r, int line, const std::string& fragment) {
    for (const auto& e : r.errors) {
        if (e.line == line && e.message.find(fragment) != std::string::npos) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("record parsing keeps well-formed rows and their line numbers") {
    auto r = parse_records_str(testutil::kRecordsCsv);
    REQUIRE(r.records.size() == 9);
    REQUIRE(r.errors.size() == 1);
    CHECK(has_error(r, 9, "bad date"));

    const auto& first = r.records.front();
    CHECK(first.date.str() == "2007-03-01");
    CHECK(first.species == "blue_duiker");
    CHECK(first.count == 2);
    CHECK(first.mass_kg.str() == "9.500");
    CHECK(first.price.str() == "38.000");
    CHECK(first.method == Method::snare);
    CHECK(first.origin == "Luba");
    CHECK(first.condition == Condition::fresh);
    CHECK(first.age == AgeClass::adult);
    CHECK(first.sex == Sex::female);
    CHECK(first.line == 2);
}

TEST_CASE("record parsing rejects a wrong header outright") {
    CHECK_THROWS_AS(parse_records_str("species,date\nx,y\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_records_str(""), std::runtime_error);
}

TEST_CASE("record parsing collects per-row violations without stopping") {
    std::string head = "date,species,count,mass_kg,price,method,origin,condition,age,sex\n";
    auto r = parse_records_str(
        head +
        "2007-03-01,blue_duiker,0,9.500,38.000,snare,Luba,fresh,adult,female\n"   // count 0
        "2007-03-01,blue_duiker,1,0,38.000,snare,Luba,fresh,adult,female\n"       // zero mass
        "2007-03-01,blue_duiker,1,9.500,-1,snare,Luba,fresh,adult,female\n"       // negative price
        "2007-03-01,blue_duiker,1,9.500,38.000,spear,Luba,fresh,adult,female\n"   // bad method
        "2007-03-01,blue_duiker,1,9.500,38.000,snare,,fresh,adult,female\n"       // empty origin
        "2007-03-01,blue_duiker,1,9.500,38.000,snare,Luba,fresh,adult\n"          // 9 fields
        "2007-03-01,,1,9.500,38.000,snare,Luba,fresh,adult,female\n"              // empty species
        "2007-03-01,blue_duiker,1,9.5001,38.000,snare,Luba,fresh,adult,female\n"  // 4 decimals
        "2007-03-01,blue_duiker,1,9.500,38.000,snare,Luba,fresh,adult,female\n");  // good
    CHECK(r.records.size() == 1);
    REQUIRE(r.errors.size() == 8);
    CHECK(has_error(r, 2, "count >= 1 violated"));
    CHECK(has_error(r, 3, "mass_kg > 0 violated"));
    CHECK(has_error(r, 4, "price >= 0 violated"));
    CHECK(has_error(r, 5, "bad method"));
    CHECK(has_error(r, 6, "empty origin"));
    CHECK(has_error(r, 7, "expected 10 fields"));
    CHECK(has_error(r, 8, "empty species"));
    CHECK(has_error(r, 9, "bad mass_kg"));
}

TEST_CASE("species table parsing") {
    auto table = parse_species_str(testutil::kSpeciesCsv);
    REQUIRE(table.size() == 3);
    CHECK(table.at("blue_duiker").guild == Guild::ground);
    CHECK(table.at("red_colobus").guild == Guild::arboreal);
    CHECK(table.at("red_colobus").lambda_max == doctest::Approx(1.16));
    CHECK(table.at("pouched_rat").longevity == Longevity::short_lived);
    CHECK(table.at("blue_duiker").longevity == Longevity::medium_lived);
    CHECK(table.at("red_colobus").longevity == Longevity::long_lived);
}

TEST_CASE("species table rejects malformed reference rows") {
    std::string head = "species,guild,mean_mass_kg,lambda_max,density_per_km2,longevity_class\n";
    CHECK_THROWS_AS(parse_species_str(head + "x,flying,1,1.2,1,medium\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_species_str(head + "x,ground,1,0.9,1,medium\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_species_str(head + "x,ground,1,1.2,-1,medium\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_species_str(head + "x,ground,1,1.2,1,eternal\n"), std::runtime_error);
    CHECK_THROWS_AS(
        parse_species_str(head + "x,ground,1,1.2,1,medium\nx,ground,2,1.3,2,short\n"),
        std::runtime_error);
    CHECK_THROWS_AS(parse_species_str("wrong,header\n"), std::runtime_error);
}

TEST_CASE("daily aggregation splits by guild and sorts by region then date") {
    auto r = parse_records_str(testutil::kRecordsCsv);
    auto species = parse_species_str(testutil::kSpeciesCsv);
    auto daily = aggregate_daily(r.records, species);
    REQUIRE(daily.size() == 5);

    CHECK(daily[0].region == "Luba");
    CHECK(daily[0].date.str() == "2007-03-01");
    CHECK(daily[0].arboreal_kg.str() == "8.000");
    CHECK(daily[0].ground_kg.str() == "9.500");
    CHECK(daily[0].arboreal_revenue.str() == "8.000");
    CHECK(daily[0].ground_revenue.str() == "38.000");
    CHECK(daily[0].carcass_count == 3);
    CHECK(daily[0].total_kg().str() == "17.500");

    CHECK(daily[2].date.str() == "2007-03-03");
    CHECK(daily[2].arboreal_kg.is_zero());
    CHECK(daily[2].ground_kg.str() == "6.000");

    CHECK(daily[3].date.str() == "2008-05-09");  // Luba before Malabo
    CHECK(daily[4].region == "Malabo");
    CHECK(daily[4].carcass_count == 2);
}

TEST_CASE("daily aggregation refuses records without a species profile") {
    auto r = parse_records_str(
        "date,species,count,mass_kg,price,method,origin,condition,age,sex\n"
        "2007-03-01,ghost_monkey,1,2.000,4.000,shotgun,Luba,fresh,adult,male\n");
    auto species = parse_species_str(testutil::kSpeciesCsv);
    try {
        aggregate_daily(r.records, species);
        FAIL("expected a throw");
    } catch (const std::exception& e) {
        std::string msg = e.what();
        CHECK(msg.find("ghost_monkey") != std::string::npos);
        CHECK(msg.find("row 2") != std::string::npos);
    }
}

TEST_CASE("biomass-weighted price ratio") {
    // Ground sells at 4.0 per kg across the corpus, arboreal at 1.0.
    auto r = parse_records_str(testutil::kRecordsCsv);
    auto species = parse_species_str(testutil::kSpeciesCsv);
    CHECK(weighted_price_ratio(r.records, species) == doctest::Approx(4.0).epsilon(1e-12));

    // 10 kg ground for 30 vs 5 kg arboreal for 7.5: (30/10)/(7.5/5) = 2.
    auto r2 = parse_records_str(
        "date,species,count,mass_kg,price,method,origin,condition,age,sex\n"
        "2007-03-01,blue_duiker,1,4.000,12.000,snare,Luba,fresh,adult,male\n"
        "2007-03-02,blue_duiker,1,6.000,18.000,snare,Luba,fresh,adult,male\n"
        "2007-03-01,red_colobus,1,5.000,7.500,shotgun,Luba,fresh,adult,male\n");
    CHECK(weighted_price_ratio(r2.records, species) == doctest::Approx(2.0).epsilon(1e-12));

    auto only_ground = parse_records_str(
        "date,species,count,mass_kg,price,method,origin,condition,age,sex\n"
        "2007-03-01,blue_duiker,1,4.000,12.000,snare,Luba,fresh,adult,male\n");
    CHECK_THROWS_AS(weighted_price_ratio(only_ground.records, species), std::runtime_error);
}

TEST_CASE("revenue deflation") {
    CHECK(deflate_revenue(*Fixed::parse("105"), 1, 0.05).str() == "100.000");
    CHECK(deflate_revenue(*Fixed::parse("100"), 9, 0.05).str() == "64.461");
    CHECK(deflate_revenue(*Fixed::parse("250.125"), 0, 0.05).str() == "250.125");
    CHECK(deflate_revenue(*Fixed::parse("100"), 2, 0.0).str() == "100.000");
    CHECK_THROWS_AS(deflate_revenue(*Fixed::parse("100"), -1, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(deflate_revenue(*Fixed::parse("100"), 1, -1.0), std::invalid_argument);
}

TEST_CASE("regional share partitions the period's biomass") {
    auto r = parse_records_str(testutil::kRecordsCsv);
    auto species = parse_species_str(testutil::kSpeciesCsv);
    auto daily = aggregate_daily(r.records, species);

    // 2007 biomass: Luba 48.7 kg, Malabo 12 kg.
    double luba = regional_share(daily, {"Luba"}, 2007);
    double malabo = regional_share(daily, {"Malabo"}, 2007);
    CHECK(luba == doctest::Approx(48.7 / 60.7).epsilon(1e-12));
    CHECK(malabo == doctest::Approx(12.0 / 60.7).epsilon(1e-12));
    CHECK(luba + malabo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(regional_share(daily, {"Luba", "Malabo"}, 2007) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(regional_share(daily, {"Atlantis"}, 2007) == 0.0);
    CHECK(regional_share(daily, {"Luba"}, 2008) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(regional_share(daily, {"Luba"}, 1990), std::runtime_error);
}

TEST_CASE("daily CSV writes and reads back identically") {
    auto r = parse_records_str(testutil::kRecordsCsv);
    auto species = parse_species_str(testutil::kSpeciesCsv);
    auto daily = aggregate_daily(r.records, species);

    std::ostringstream out;
    write_daily_csv(out, daily);
    CHECK(out.str() == testutil::kDailyCsv);

    std::istringstream in(out.str());
    auto back = read_daily_csv(in);
    REQUIRE(back.size() == daily.size());
    for (std::size_t i = 0; i < daily.size(); ++i) {
        CHECK(back[i].region == daily[i].region);
        CHECK(back[i].date == daily[i].date);
        CHECK(back[i].arboreal_kg == daily[i].arboreal_kg);
        CHECK(back[i].ground_kg == daily[i].ground_kg);
        CHECK(back[i].arboreal_revenue == daily[i].arboreal_revenue);
        CHECK(back[i].ground_revenue == daily[i].ground_revenue);
        CHECK(back[i].carcass_count == daily[i].carcass_count);
    }
}

TEST_CASE("price system validation") {
    CHECK_THROWS_AS((PriceSystem{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PriceSystem{1.0, -2.0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((PriceSystem{4.0, 1.0}.validate()));
}
