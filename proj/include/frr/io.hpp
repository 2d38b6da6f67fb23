#pragma once

#include "frr/metrics.hpp"
#include "frr/reserve.hpp"
#include "frr/schedule.hpp"
#include "frr/types.hpp"

#include <array>
#include <optional>
#include <string>

namespace frr {

// Fleet CSV with header
// id,fuel_type,rated_mva,pmax_mw,pset_mw,inertia_h_s,droop_pu,deadband_hz,responsive,committed,merit_rank
// Booleans are "true"/"false". Errors name the file and row.
Fleet load_fleet_csv(const std::string& path);
void save_fleet_csv(const std::string& path, const Fleet& fleet);

struct Scenario {
    SystemCondition condition;
    // Present when the file carries a governor_params object.
    std::optional<std::array<GovernorParams, kFuelTypeCount>> governors;
};

Scenario load_scenario_json(const std::string& path);
void save_scenario_json(const std::string& path, const Scenario& scenario);

// Installs the scenario's governor parameters on the fleet when present.
void apply_scenario_governors(Fleet& fleet, const Scenario& scenario);

// Trace CSV: t_s,freq_hz,mech_hydro_mw,mech_steam_mw,mech_gas_mw,mech_other_mw
// written at full double precision.
void save_trace_csv(const std::string& path, const FrequencyTrace& trace);
FrequencyTrace load_trace_csv(const std::string& path);

// Curve CSV (inertia_mvas,min_frr_mw) plus a JSON sidecar holding threshold,
// mode, tolerance, provenance hash, and infeasible grid values. The sidecar
// path is the CSV path with its extension replaced by .json.
void save_curve(const std::string& csv_path, const ReserveCurve& curve);
ReserveCurve load_curve(const std::string& csv_path);

// Profile CSV: time,inertia_mvas or time,pv_capacity_factor. The header
// picks the form; time is "HH:MM" or ISO-8601.
InertiaProfile load_profile_csv(const std::string& path);

// Price CSV: source,price_per_mw
PriceTable load_prices_csv(const std::string& path);

// Schedule CSV: time,inertia_mvas,frr_mw
void save_schedule_csv(const std::string& path, const ReserveSchedule& schedule);
ReserveSchedule load_schedule_csv(const std::string& path);

void save_cost_report_json(const std::string& path, const CostReport& report);
CostReport load_cost_report_json(const std::string& path);

struct MetricsReport {
    double value_a_hz = 0.0;
    double value_b_hz = 0.0;
    double point_c_hz = 0.0;
    double c_to_b_ratio = 0.0;
    // Absent when the event has no imbalance to measure against.
    std::optional<double> rocof_hzps;
    std::optional<double> inertia_estimate_mvas;
};

void save_metrics_json(const std::string& path, const MetricsReport& report);
MetricsReport load_metrics_json(const std::string& path);

// Stable FNV-1a digest of the fleet and study condition, used to tag curve
// outputs with their provenance.
std::string scenario_hash(const Fleet& fleet, const SystemCondition& cond);

// "HH:MM" or ISO-8601 ("YYYY-MM-DD[T ]HH:MM[:SS]") to absolute hours.
double parse_time_label(const std::string& label);

} // namespace frr
