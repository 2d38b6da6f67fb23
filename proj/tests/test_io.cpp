#include "frr/io.hpp"

#include "frr/errors.hpp"
#include "frr/simulate.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <fstream>
#include <string>

using namespace frr;
using namespace frr::test;

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

constexpr char kFleetHeader[] =
    "id,fuel_type,rated_mva,pmax_mw,pset_mw,inertia_h_s,droop_pu,deadband_hz,"
    "responsive,committed,merit_rank\n";

} // namespace

TEST_CASE("fleet csv loading") {
    SUBCASE("the bundled fleet parses") {
        const Fleet fleet = load_fleet_csv(data_path("fleet.csv"));
        REQUIRE(fleet.units.size() == 50);
        CHECK(fleet.units[0].id == "g01");
        CHECK(fleet.units[0].fuel_type == FuelType::gas);
        CHECK(fleet.units[0].rated_mva == 17920.0);
        CHECK(fleet.units[0].responsive);
        CHECK(fleet.units[49].merit_rank == 50);
    }
    SUBCASE("bad rows are reported with their line number") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("fleet.csv");
        write_text(path, std::string(kFleetHeader) +
                             "ok,steam,100,90,50,4.0,0.05,0.017,true,true,1\n"
                             "bad,steam,100,90,50,4.0,0.05,0.017,maybe,true,2\n");
        try {
            load_fleet_csv(path);
            FAIL("expected a parse error");
        } catch (const ParseError& err) {
            CHECK(std::string(err.what()).find(":3:") != std::string::npos);
        }
    }
    SUBCASE("wrong header is rejected") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("fleet.csv");
        write_text(path, "id,fuel\nx,steam\n");
        CHECK_THROWS_AS(load_fleet_csv(path), ParseError);
    }
    SUBCASE("invariant violations are parse errors with context") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("fleet.csv");
        write_text(path, std::string(kFleetHeader) +
                             "x,steam,100,120,50,4.0,0.05,0.017,true,true,1\n");
        CHECK_THROWS_AS(load_fleet_csv(path), ParseError);
    }
    SUBCASE("duplicate ids are rejected") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("fleet.csv");
        write_text(path, std::string(kFleetHeader) +
                             "x,steam,100,90,50,4.0,0.05,0.017,true,true,1\n"
                             "x,gas,100,90,50,4.0,0.05,0.017,true,true,2\n");
        CHECK_THROWS_AS(load_fleet_csv(path), ParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_fleet_csv("no_such_file.csv"), ParseError);
    }
}

TEST_CASE("fleet csv round trip") {
    const Fleet fleet = load_fleet_csv(data_path("fleet.csv"));
    TempDir tmp("frr_io");
    const std::string path = tmp.file("fleet.csv");
    save_fleet_csv(path, fleet);
    const Fleet again = load_fleet_csv(path);
    REQUIRE(again.units.size() == fleet.units.size());
    for (std::size_t i = 0; i < fleet.units.size(); ++i) {
        CHECK(again.units[i].id == fleet.units[i].id);
        CHECK(again.units[i].rated_mva == fleet.units[i].rated_mva);
        CHECK(again.units[i].pset_mw == fleet.units[i].pset_mw);
        CHECK(again.units[i].inertia_h_s == fleet.units[i].inertia_h_s);
    }
}

TEST_CASE("scenario json") {
    SUBCASE("the bundled scenario parses") {
        const Scenario scenario = load_scenario_json(data_path("scenario.json"));
        CHECK(scenario.condition.load_mw == 500000.0);
        CHECK(scenario.condition.contingency_mw == 12000.0);
        CHECK(scenario.condition.ufls_threshold_hz == 59.5);
        CHECK_FALSE(scenario.condition.inertia_override_mvas.has_value());
        REQUIRE(scenario.governors.has_value());
        const GovernorParams& steam = (*scenario.governors)[static_cast<int>(FuelType::steam)];
        CHECK(steam.t2_s == 20.0);
        CHECK(steam.hp_fraction == 0.02);
    }
    SUBCASE("governor parameters land on the fleet") {
        Fleet fleet = load_fleet_csv(data_path("fleet.csv"));
        CHECK(fleet.governors[static_cast<int>(FuelType::steam)].t2_s == 8.0);
        apply_scenario_governors(fleet, load_scenario_json(data_path("scenario.json")));
        CHECK(fleet.governors[static_cast<int>(FuelType::steam)].t2_s == 20.0);
    }
    SUBCASE("missing keys are named") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("scenario.json");
        write_text(path, R"({"nominal_freq_hz": 60.0})");
        try {
            load_scenario_json(path);
            FAIL("expected a parse error");
        } catch (const ParseError& err) {
            CHECK(std::string(err.what()).find("load_mw") != std::string::npos);
        }
    }
    SUBCASE("override round trips through save") {
        TempDir tmp("frr_io");
        Scenario scenario = load_scenario_json(data_path("scenario.json"));
        scenario.condition.inertia_override_mvas = 1.5e6;
        const std::string path = tmp.file("scenario.json");
        save_scenario_json(path, scenario);
        const Scenario again = load_scenario_json(path);
        CHECK(again.condition.inertia_override_mvas == 1.5e6);
        REQUIRE(again.governors.has_value());
        CHECK((*again.governors)[static_cast<int>(FuelType::gas)].t2_s == 2.0);
    }
    SUBCASE("invalid condition values are parse errors") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("scenario.json");
        write_text(path, R"({"nominal_freq_hz": 60.0, "load_mw": -5.0, "damping_pu": 1.0,
                             "contingency_mw": 0.0, "ufls_threshold_hz": 59.5,
                             "horizon_s": 60.0, "dt_s": 0.01})");
        CHECK_THROWS_AS(load_scenario_json(path), ParseError);
    }
}

TEST_CASE("trace csv round trip is lossless") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = bundled_condition();
    cond.horizon_s = 2.0;
    const FrequencyTrace trace = simulate(fleet, cond);

    TempDir tmp("frr_io");
    const std::string path = tmp.file("trace.csv");
    save_trace_csv(path, trace);
    const FrequencyTrace again = load_trace_csv(path);

    CHECK(again.dt_s == trace.dt_s);
    REQUIRE(again.samples() == trace.samples());
    CHECK(again.freq_hz == trace.freq_hz);
    for (int t = 0; t < kFuelTypeCount; ++t) {
        CHECK(again.mech_mw_by_type[t] == trace.mech_mw_by_type[t]);
    }
}

TEST_CASE("curve round trip keeps points and metadata") {
    const ReserveCurve curve({{0.39e6, 20159.32617}, {1.93e6, 10332.37305}}, {0.2e6}, 59.5,
                             CurveMode::override_inertia, "abcd1234", 1.0);
    TempDir tmp("frr_io");
    const std::string path = tmp.file("curve.csv");
    save_curve(path, curve);

    const ReserveCurve again = load_curve(path);
    REQUIRE(again.points().size() == 2);
    CHECK(again.points()[0].inertia_mvas == 0.39e6);
    CHECK(again.points()[0].min_frr_mw == 20159.32617);
    CHECK(again.points()[1].min_frr_mw == 10332.37305);
    CHECK(again.ufls_threshold_hz() == 59.5);
    CHECK(again.mode() == CurveMode::override_inertia);
    CHECK(again.provenance() == "abcd1234");
    CHECK(again.tolerance_mw() == 1.0);
    REQUIRE(again.infeasible_inertia_mvas().size() == 1);
    CHECK(again.infeasible_inertia_mvas()[0] == 0.2e6);
}

TEST_CASE("profile csv forms") {
    SUBCASE("bundled pv day") {
        const InertiaProfile profile = load_profile_csv(data_path("day_pv.csv"));
        CHECK(profile.form == ProfileForm::pv_capacity_factor);
        REQUIRE(profile.entries.size() == 24);
        CHECK(profile.entries[12].value == 1.0);
        CHECK(profile.entries[12].time_h == 12.0);
    }
    SUBCASE("inertia form") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("profile.csv");
        write_text(path, "time,inertia_mvas\n00:00,1930000\n06:30,1220000\n");
        const InertiaProfile profile = load_profile_csv(path);
        CHECK(profile.form == ProfileForm::inertia);
        CHECK(profile.entries[1].time_h == 6.5);
    }
    SUBCASE("iso timestamps carry across days") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("profile.csv");
        write_text(path, "time,inertia_mvas\n"
                         "2024-06-01T23:00:00,1930000\n"
                         "2024-06-02T01:00:00,1220000\n");
        const InertiaProfile profile = load_profile_csv(path);
        CHECK(profile.entries[1].time_h - profile.entries[0].time_h == doctest::Approx(2.0));
    }
    SUBCASE("bad labels and orderings are rejected") {
        TempDir tmp("frr_io");
        const std::string path = tmp.file("profile.csv");
        write_text(path, "time,inertia_mvas\nnoon,1930000\n");
        CHECK_THROWS_AS(load_profile_csv(path), ParseError);
        write_text(path, "time,inertia_mvas\n10:00,1930000\n09:00,1220000\n");
        CHECK_THROWS_AS(load_profile_csv(path), ParseError);
        write_text(path, "time,watts\n00:00,5\n");
        CHECK_THROWS_AS(load_profile_csv(path), ParseError);
    }
}

TEST_CASE("time label parsing") {
    CHECK(parse_time_label("00:00") == 0.0);
    CHECK(parse_time_label("23:59") == doctest::Approx(23.0 + 59.0 / 60.0));
    CHECK(parse_time_label("2024-06-02T00:00:00") - parse_time_label("2024-06-01T00:00:00") ==
          24.0);
    CHECK(parse_time_label("2024-06-01 12:30") - parse_time_label("2024-06-01T12:00:00") ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(parse_time_label("25:00"), ParseError);
    CHECK_THROWS_AS(parse_time_label("12:60"), ParseError);
    CHECK_THROWS_AS(parse_time_label("garbage"), ParseError);
}

TEST_CASE("prices csv") {
    const PriceTable prices = load_prices_csv(data_path("prices.csv"));
    REQUIRE(prices.rows.size() == 3);
    CHECK(prices.rows[0].source == "NYISO");
    CHECK(prices.rows[1].price_per_mw == 15.92);

    TempDir tmp("frr_io");
    const std::string path = tmp.file("prices.csv");
    write_text(path, "source,price_per_mw\nX,-2.0\n");
    CHECK_THROWS_AS(load_prices_csv(path), ParseError);
}

TEST_CASE("schedule csv round trip") {
    ReserveSchedule schedule;
    schedule.entries.push_back({"00:00", 0.0, 1.93e6, 10332.373046875});
    schedule.entries.push_back({"01:00", 1.0, 1.61e6, 10869.482421875});

    TempDir tmp("frr_io");
    const std::string path = tmp.file("schedule.csv");
    save_schedule_csv(path, schedule);
    const ReserveSchedule again = load_schedule_csv(path);
    REQUIRE(again.entries.size() == 2);
    CHECK(again.entries[0].time_label == "00:00");
    CHECK(again.entries[0].inertia_mvas == 1.93e6);
    CHECK(again.entries[1].frr_mw == 10869.482421875);
    CHECK(again.entries[1].time_h == 1.0);
}

TEST_CASE("cost report json round trip") {
    const CostReport report{3757126.856484375, 6560651.109375, 20159.326171875,
                            0.4273240881357738};
    TempDir tmp("frr_io");
    const std::string path = tmp.file("cost.json");
    save_cost_report_json(path, report);
    const CostReport again = load_cost_report_json(path);
    CHECK(again.adaptive_cost == report.adaptive_cost);
    CHECK(again.bau_cost == report.bau_cost);
    CHECK(again.bau_frr_mw == report.bau_frr_mw);
    CHECK(again.savings_fraction == report.savings_fraction);
}

TEST_CASE("metrics json round trip with and without estimates") {
    TempDir tmp("frr_io");
    MetricsReport report;
    report.value_a_hz = 60.0;
    report.value_b_hz = 59.91;
    report.point_c_hz = 59.75;
    report.c_to_b_ratio = 2.78;

    const std::string path = tmp.file("metrics.json");
    save_metrics_json(path, report);
    MetricsReport again = load_metrics_json(path);
    CHECK(again.value_b_hz == report.value_b_hz);
    CHECK_FALSE(again.rocof_hzps.has_value());
    CHECK_FALSE(again.inertia_estimate_mvas.has_value());

    report.rocof_hzps = -0.1808881203326487;
    report.inertia_estimate_mvas = 1990180.446001479;
    save_metrics_json(path, report);
    again = load_metrics_json(path);
    CHECK(again.rocof_hzps == report.rocof_hzps);
    CHECK(again.inertia_estimate_mvas == report.inertia_estimate_mvas);
}

TEST_CASE("scenario hash is stable and input-sensitive") {
    const Fleet fleet = bundled_fleet();
    const SystemCondition cond = bundled_condition();
    const std::string h1 = scenario_hash(fleet, cond);
    const std::string h2 = scenario_hash(fleet, cond);
    CHECK(h1 == h2);
    CHECK(h1.size() == 16);

    SystemCondition changed = cond;
    changed.contingency_mw += 1.0;
    CHECK(scenario_hash(fleet, changed) != h1);

    Fleet tweaked = fleet;
    tweaked.units[0].pset_mw += 1.0;
    CHECK(scenario_hash(tweaked, cond) != h1);
}
