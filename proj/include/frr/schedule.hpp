#pragma once

#include "frr/reserve.hpp"
#include "frr/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frr {

enum class ProfileForm { inertia, pv_capacity_factor };

struct ProfileEntry {
    std::string time_label; // original "HH:MM" or ISO-8601 text
    double time_h = 0.0;    // absolute hours used for ordering and durations
    double value = 0.0;     // inertia in MVA*s or PV capacity factor
};

// Daily series of either inertia or PV capacity factor, strictly increasing
// in time.
struct InertiaProfile {
    ProfileForm form = ProfileForm::inertia;
    std::vector<ProfileEntry> entries;
};

void validate(const InertiaProfile& profile);

struct PriceRow {
    std::string source;
    double price_per_mw = 0.0; // $/MW for one hour of reserve provision
};

struct PriceTable {
    std::vector<PriceRow> rows;
};

// Arithmetic mean over rows; empty table throws DomainError.
double average_price(const PriceTable& prices);

struct ScheduleEntry {
    std::string time_label;
    double time_h = 0.0;
    double inertia_mvas = 0.0;
    double frr_mw = 0.0;
};

struct ReserveSchedule {
    std::vector<ScheduleEntry> entries;
};

struct CostReport {
    double adaptive_cost = 0.0;
    double bau_cost = 0.0;
    double bau_frr_mw = 0.0;
    double savings_fraction = 0.0;
};

// Fleet and load needed to turn PV capacity factors into inertia via
// commitment displacement.
struct DisplacementContext {
    Fleet fleet;
    double load_mw = 0.0;
    double pv_capacity_mw = 0.0;
};

// Monotone piecewise-linear lookup, exact at grid points. Queries outside
// the curve's inertia range throw DomainError; there is no extrapolation.
double evaluate_curve(const ReserveCurve& curve, double inertia_mvas);

// One reserve value per profile entry via evaluate_curve. PV-form entries
// are first converted to inertia through displace_for_renewables, which
// requires a context. Range errors carry the offending timestamp. Entries
// are independent; jobs > 1 fans them out without changing the result.
ReserveSchedule make_schedule(const InertiaProfile& profile,
                              const ReserveCurve& curve,
                              const std::optional<DisplacementContext>& context = std::nullopt,
                              int jobs = 1);

// Largest scheduled reserve; the default business-as-usual level.
double peak_frr(const ReserveSchedule& schedule);

// Prices the adaptive schedule against a constant business-as-usual reserve
// of bau_frr_mw. bau_frr_mw below the schedule peak throws DomainError.
CostReport cost_report(const ReserveSchedule& schedule,
                       const PriceTable& prices,
                       double bau_frr_mw);

} // namespace frr
