#include "frr/simulate.hpp"

#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/metrics.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace frr;
using namespace frr::test;

namespace {

SystemCondition basic_condition() {
    SystemCondition cond;
    cond.load_mw = 500000.0;
    cond.damping_pu = 0.0;
    cond.contingency_mw = 0.0;
    cond.ufls_threshold_hz = 59.5;
    cond.horizon_s = 10.0;
    cond.dt_s = 0.01;
    return cond;
}

} // namespace

TEST_CASE("no contingency keeps the system at nominal") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = basic_condition();
    const FrequencyTrace trace = simulate(fleet, cond);
    CHECK(trace.freq_hz[0] == 60.0);
    CHECK(nadir(trace) == 60.0);
    CHECK(trace.freq_hz.maxCoeff() == 60.0);
    for (const auto& series : trace.mech_mw_by_type) {
        CHECK(series.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("without governors or damping the decline is linear") {
    const Fleet fleet = inertia_only_fleet(1000.0);
    SystemCondition cond = basic_condition();
    cond.inertia_override_mvas = 1.2e6;
    cond.contingency_mw = 1000.0;

    const FrequencyTrace trace = simulate(fleet, cond);
    for (Eigen::Index i = 0; i < trace.samples(); ++i) {
        const double expected = 60.0 - 0.025 * trace.time_at(i);
        CHECK(trace.freq_hz[i] == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(nadir(trace) == doctest::Approx(59.75).epsilon(1e-12));

    SUBCASE("the slope matches the closed-form rocof") {
        CHECK(rocof_initial(trace, 0.5) == doctest::Approx(-0.025).epsilon(1e-12));
        CHECK(rocof_initial(trace, 5.0) == doctest::Approx(-0.025).epsilon(1e-12));
    }
}

TEST_CASE("damping alone settles at the load-relief balance") {
    const Fleet fleet = inertia_only_fleet(1000.0);
    SystemCondition cond = basic_condition();
    cond.inertia_override_mvas = 1.2e6;
    cond.contingency_mw = 1000.0;
    cond.damping_pu = 1.0;
    cond.horizon_s = 60.0;

    const FrequencyTrace trace = simulate(fleet, cond);
    const double settled = trace.freq_hz[trace.samples() - 1];
    CHECK(settled == doctest::Approx(60.0 - 0.12).epsilon(1e-7));
    // first-order approach, no undershoot
    CHECK(nadir(trace) == settled);
}

TEST_CASE("zero inertia is rejected") {
    Fleet empty;
    SystemCondition cond = basic_condition();
    cond.contingency_mw = 500.0;
    CHECK_THROWS_AS(simulate(empty, cond), DomainError);
}

TEST_CASE("simulation matches the closed-form linear case") {
    // Single responsive type, zero deadband, full fast path, no damping, and
    // headroom far above the droop command: the model is exactly the
    // second-order equation solved by the oracle.
    Fleet fleet;
    fleet.units.push_back(
        make_unit("s1", FuelType::steam, 2000.0, 1800.0, 1000.0, 5.0, 0.05, 0.0));
    fleet.governors[static_cast<int>(FuelType::steam)] = {0.5, 8.0, 1.0};

    SystemCondition cond;
    cond.load_mw = 1600.0;
    cond.damping_pu = 0.0;
    cond.contingency_mw = 200.0;
    cond.ufls_threshold_hz = 59.0;
    cond.horizon_s = 20.0;
    cond.dt_s = 0.01;

    const double k_mvas = total_inertia(fleet);
    const double gain = 1800.0 / (0.05 * 60.0);
    const LinearCaseOracle oracle(60.0, 200.0, k_mvas, 0.5, gain);

    const FrequencyTrace trace = simulate(fleet, cond);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < trace.samples(); ++i) {
        const double expected = 60.0 + oracle.deviation(trace.time_at(i));
        worst = std::max(worst, std::abs(trace.freq_hz[i] - expected));
    }
    CHECK(worst < 1e-3);
    CHECK(worst < 1e-6); // fourth-order integration does far better

    // saturation never engaged, so the linear model was the right oracle
    const auto& mech = trace.mech_mw_by_type[static_cast<int>(FuelType::steam)];
    CHECK(mech.minCoeff() >= 0.0);
    CHECK(mech.maxCoeff() < 800.0);
}

TEST_CASE("halving the step barely moves the nadir") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = bundled_condition();
    const double coarse = nadir(simulate(fleet, cond));
    cond.dt_s /= 2.0;
    const double fine = nadir(simulate(fleet, cond));
    CHECK(std::abs(coarse - fine) < 1e-4);
}

TEST_CASE("nadir rises with inertia") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = bundled_condition();
    double previous = 0.0;
    bool first = true;
    for (double k = 0.39e6; k <= 2.4e6; k += 0.2e6) {
        cond.inertia_override_mvas = k;
        const double value = nadir(simulate(fleet, cond));
        if (!first) {
            CHECK(value >= previous - 1e-9);
        }
        first = false;
        previous = value;
    }
}

TEST_CASE("nadir rises with reserve and saturation respects the scaled cap") {
    const Fleet fleet = bundled_fleet();
    const SystemCondition cond = bundled_condition();
    const auto base_agg = aggregate_by_type(fleet);

    double previous = -1e9;
    for (int i = 0; i <= 10; ++i) {
        const double s = i / 10.0;
        const Fleet scaled = scale_headroom(fleet, s);
        const FrequencyTrace trace = simulate(scaled, cond);
        const double value = nadir(trace);
        CHECK(value >= previous - 1e-9);
        previous = value;

        for (int t = 0; t < kFuelTypeCount; ++t) {
            const auto& series = trace.mech_mw_by_type[t];
            CHECK(series.minCoeff() >= 0.0);
            CHECK(series.maxCoeff() <= s * base_agg[t].headroom_mw + 1e-9);
        }
    }
}

TEST_CASE("identical inputs give bit-identical traces") {
    const Fleet fleet = bundled_fleet();
    const SystemCondition cond = bundled_condition();
    const FrequencyTrace one = simulate(fleet, cond);
    const FrequencyTrace two = simulate(fleet, cond);
    CHECK(one.freq_hz == two.freq_hz);
    for (int t = 0; t < kFuelTypeCount; ++t) {
        CHECK(one.mech_mw_by_type[t] == two.mech_mw_by_type[t]);
    }
}

TEST_CASE("rocof window validation") {
    const Fleet fleet = inertia_only_fleet(1000.0);
    SystemCondition cond = basic_condition();
    cond.inertia_override_mvas = 1.2e6;
    cond.contingency_mw = 1000.0;
    const FrequencyTrace trace = simulate(fleet, cond);

    CHECK_THROWS_AS(rocof_initial(trace, 0.001), DomainError);  // under one step
    CHECK_THROWS_AS(rocof_initial(trace, 10.0), DomainError);   // not shorter than horizon
    CHECK_THROWS_AS(rocof_initial(trace, 11.0), DomainError);
}

TEST_CASE("measured rocof with an active deadband tracks the closed form") {
    Fleet fleet = bundled_fleet();
    for (GeneratorUnit& unit : fleet.units) {
        if (unit.responsive) {
            unit.deadband_hz = 0.017;
        }
    }
    SystemCondition cond = bundled_condition();
    cond.damping_pu = 0.05;
    cond.contingency_mw = 1000.0;
    cond.horizon_s = 10.0;
    cond.inertia_override_mvas = 1.2e6;

    const double measured = std::abs(rocof_initial(simulate(fleet, cond), 0.5));
    const double expected = rocof_eq1(60.0, 1000.0, 1.2e6);
    CHECK(measured == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("ufls crossing is reported but never acted on") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = bundled_condition();

    CHECK_FALSE(ufls_crossing_time(simulate(fleet, cond), cond.ufls_threshold_hz));

    const Fleet starved = scale_headroom(fleet, 0.0);
    const auto crossing = ufls_crossing_time(simulate(starved, cond), cond.ufls_threshold_hz);
    REQUIRE(crossing.has_value());
    CHECK(*crossing > 0.0);
}

TEST_CASE("trace length follows the horizon") {
    const Fleet fleet = bundled_fleet();
    SystemCondition cond = bundled_condition();
    cond.horizon_s = 2.0;
    cond.dt_s = 0.5;
    const FrequencyTrace trace = simulate(fleet, cond);
    CHECK(trace.samples() == 5);
    CHECK(trace.time_at(trace.samples() - 1) == doctest::Approx(2.0));
}
