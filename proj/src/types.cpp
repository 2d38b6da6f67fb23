#include "frr/types.hpp"

#include "frr/errors.hpp"

#include <cmath>
#include <unordered_set>

namespace frr {

std::string_view to_string(FuelType type) {
    switch (type) {
    case FuelType::hydro: return "hydro";
    case FuelType::steam: return "steam";
    case FuelType::gas: return "gas";
    case FuelType::other: return "other";
    }
    return "other";
}

std::optional<FuelType> fuel_type_from_string(std::string_view name) {
    if (name == "hydro") return FuelType::hydro;
    if (name == "steam") return FuelType::steam;
    if (name == "gas") return FuelType::gas;
    if (name == "other") return FuelType::other;
    return std::nullopt;
}

double headroom_mw(const GeneratorUnit& unit) {
    return unit.pmax_mw - unit.pset_mw;
}

void validate(const GeneratorUnit& unit) {
    auto fail = [&](const std::string& what) {
        throw DomainError("unit '" + unit.id + "': " + what);
    };
    if (unit.id.empty()) fail("empty id");
    if (!(unit.rated_mva > 0.0)) fail("rated_mva must be positive");
    if (unit.pset_mw < 0.0) fail("pset_mw must be non-negative");
    if (unit.pset_mw > unit.pmax_mw) fail("pset_mw exceeds pmax_mw");
    if (unit.pmax_mw > unit.rated_mva) fail("pmax_mw exceeds rated_mva");
    if (unit.inertia_h_s < 0.0) fail("inertia_h_s must be non-negative");
    if (unit.droop_pu < 0.0) fail("droop_pu must be non-negative");
    if (unit.deadband_hz < 0.0) fail("deadband_hz must be non-negative");
    if (unit.responsive && !(unit.droop_pu > 0.0)) fail("responsive unit needs droop_pu > 0");
}

GovernorParams default_governor_params(FuelType type) {
    // Tuning constants for the aggregated response blocks; the hydro fast
    // path is negative to give the initial inverse response.
    switch (type) {
    case FuelType::hydro: return {0.5, 5.0, -0.6};
    case FuelType::steam: return {0.5, 8.0, 0.3};
    case FuelType::gas: return {0.4, 1.5, 0.5};
    case FuelType::other: return {0.5, 8.0, 0.3};
    }
    return {};
}

std::array<GovernorParams, kFuelTypeCount> default_governor_set() {
    std::array<GovernorParams, kFuelTypeCount> set;
    for (FuelType type : kFuelTypes) {
        set[static_cast<int>(type)] = default_governor_params(type);
    }
    return set;
}

void validate(const GovernorParams& params) {
    if (!(params.t1_s > 0.0) || !(params.t2_s > 0.0)) {
        throw DomainError("governor lags t1_s and t2_s must be positive");
    }
    if (!std::isfinite(params.hp_fraction)) {
        throw DomainError("governor hp_fraction must be finite");
    }
}

void validate(const Fleet& fleet) {
    std::unordered_set<std::string_view> ids;
    ids.reserve(fleet.units.size());
    for (const GeneratorUnit& unit : fleet.units) {
        validate(unit);
        if (!ids.insert(unit.id).second) {
            throw DomainError("duplicate unit id '" + unit.id + "'");
        }
    }
    for (const GovernorParams& params : fleet.governors) {
        validate(params);
    }
}

void validate(const SystemCondition& cond) {
    if (!(cond.nominal_freq_hz > 0.0)) {
        throw DomainError("nominal_freq_hz must be positive");
    }
    if (!(cond.load_mw > 0.0)) {
        throw DomainError("load_mw must be positive");
    }
    if (cond.damping_pu < 0.0) {
        throw DomainError("damping_pu must be non-negative");
    }
    if (cond.contingency_mw < 0.0) {
        throw DomainError("contingency_mw must be non-negative");
    }
    if (!(cond.ufls_threshold_hz < cond.nominal_freq_hz)) {
        throw DomainError("ufls_threshold_hz must be below nominal_freq_hz");
    }
    if (!(cond.dt_s > 0.0) || cond.dt_s > cond.horizon_s) {
        throw DomainError("need 0 < dt_s <= horizon_s");
    }
    if (cond.inertia_override_mvas && !(*cond.inertia_override_mvas > 0.0)) {
        throw DomainError("inertia_override_mvas must be positive when set");
    }
}

} // namespace frr
