#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frr {

enum class FuelType : int { hydro = 0, steam = 1, gas = 2, other = 3 };

inline constexpr int kFuelTypeCount = 4;

inline constexpr std::array<FuelType, kFuelTypeCount> kFuelTypes = {
    FuelType::hydro, FuelType::steam, FuelType::gas, FuelType::other};

std::string_view to_string(FuelType type);
std::optional<FuelType> fuel_type_from_string(std::string_view name);

// One synchronous machine (or an aggregated plant group).
// inertia_h_s is the inertia constant on the unit's own MVA base.
struct GeneratorUnit {
    std::string id;
    FuelType fuel_type = FuelType::other;
    double rated_mva = 0.0;
    double pmax_mw = 0.0;
    double pset_mw = 0.0;
    double inertia_h_s = 0.0;
    double droop_pu = 0.0;
    double deadband_hz = 0.0;
    bool responsive = false;
    bool committed = false;
    int merit_rank = 0; // lower rank is decommitted first under displacement
};

// Upward reserve the unit can deliver: pmax - pset.
double headroom_mw(const GeneratorUnit& unit);

// Throws DomainError unless 0 <= pset <= pmax <= rated, fields are
// non-negative, and responsive implies droop > 0.
void validate(const GeneratorUnit& unit);

// Governor/turbine response blocks for one fuel type: two cascaded lags with
// a fast-path fraction. hp_fraction < 0 models hydro's initial inverse
// response.
struct GovernorParams {
    double t1_s = 0.5;
    double t2_s = 8.0;
    double hp_fraction = 0.3;
};

GovernorParams default_governor_params(FuelType type);
std::array<GovernorParams, kFuelTypeCount> default_governor_set();

void validate(const GovernorParams& params);

struct Fleet {
    std::vector<GeneratorUnit> units;
    std::array<GovernorParams, kFuelTypeCount> governors = default_governor_set();
};

// Validates every unit plus fleet-level invariants (unique ids).
void validate(const Fleet& fleet);

// Post-contingency study conditions. contingency_mw is the generation loss
// applied at t = 0. When inertia_override_mvas is set it replaces the
// fleet's kinetic sum in the swing equation.
struct SystemCondition {
    double nominal_freq_hz = 60.0;
    double load_mw = 0.0;
    double damping_pu = 1.0;
    double contingency_mw = 0.0;
    double ufls_threshold_hz = 59.5;
    double horizon_s = 60.0;
    double dt_s = 0.01;
    std::optional<double> inertia_override_mvas;
};

void validate(const SystemCondition& cond);

// Fixed-step record of one simulation. freq_hz[0] equals the nominal
// frequency; mech_mw_by_type holds the delivered governor response of each
// fuel type, clamped to [0, type headroom].
struct FrequencyTrace {
    double dt_s = 0.0;
    Eigen::VectorXd freq_hz;
    std::array<Eigen::VectorXd, kFuelTypeCount> mech_mw_by_type;

    Eigen::Index samples() const { return freq_hz.size(); }
    double time_at(Eigen::Index i) const { return static_cast<double>(i) * dt_s; }
};

} // namespace frr
