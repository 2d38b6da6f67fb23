#include "frr/schedule.hpp"

#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace frr {

void validate(const InertiaProfile& profile) {
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        const ProfileEntry& entry = profile.entries[i];
        if (!std::isfinite(entry.value) || entry.value < 0.0) {
            throw DomainError("profile value at '" + entry.time_label + "' must be non-negative");
        }
        if (profile.form == ProfileForm::pv_capacity_factor && entry.value > 1.0) {
            throw DomainError("pv capacity factor at '" + entry.time_label + "' exceeds 1");
        }
        if (i > 0 && !(entry.time_h > profile.entries[i - 1].time_h)) {
            throw DomainError("profile times must be strictly increasing (at '" +
                              entry.time_label + "')");
        }
    }
}

double average_price(const PriceTable& prices) {
    if (prices.rows.empty()) {
        throw DomainError("price table is empty");
    }
    double sum = 0.0;
    for (const PriceRow& row : prices.rows) {
        if (!(row.price_per_mw >= 0.0)) {
            throw DomainError("price for '" + row.source + "' must be non-negative");
        }
        sum += row.price_per_mw;
    }
    return sum / static_cast<double>(prices.rows.size());
}

double evaluate_curve(const ReserveCurve& curve, double inertia_mvas) {
    const auto& points = curve.points();
    if (points.empty()) {
        throw DomainError("reserve curve has no feasible points");
    }
    if (inertia_mvas < points.front().inertia_mvas || inertia_mvas > points.back().inertia_mvas) {
        std::ostringstream msg;
        msg << "inertia " << inertia_mvas << " MVA*s outside curve range ["
            << points.front().inertia_mvas << ", " << points.back().inertia_mvas << "]";
        throw DomainError(msg.str());
    }

    const auto upper = std::lower_bound(
        points.begin(), points.end(), inertia_mvas,
        [](const CurvePoint& p, double value) { return p.inertia_mvas < value; });
    if (upper->inertia_mvas == inertia_mvas) {
        return upper->min_frr_mw;
    }
    const auto lower = upper - 1;
    const double t =
        (inertia_mvas - lower->inertia_mvas) / (upper->inertia_mvas - lower->inertia_mvas);
    return lower->min_frr_mw + t * (upper->min_frr_mw - lower->min_frr_mw);
}

ReserveSchedule make_schedule(const InertiaProfile& profile,
                              const ReserveCurve& curve,
                              const std::optional<DisplacementContext>& context,
                              int jobs) {
    validate(profile);
    if (profile.entries.empty()) {
        throw DomainError("profile is empty");
    }
    if (profile.form == ProfileForm::pv_capacity_factor) {
        if (!context) {
            throw DomainError("pv capacity factor profile needs a fleet/load context");
        }
        if (!(context->pv_capacity_mw >= 0.0)) {
            throw DomainError("pv_capacity_mw must be non-negative");
        }
    }

    ReserveSchedule schedule;
    schedule.entries.resize(profile.entries.size());
    parallel_for(profile.entries.size(), jobs, [&](std::size_t i) {
        const ProfileEntry& entry = profile.entries[i];
        double inertia_mvas = entry.value;
        if (profile.form == ProfileForm::pv_capacity_factor) {
            const double renewable_mw = entry.value * context->pv_capacity_mw;
            const Fleet displaced =
                displace_for_renewables(context->fleet, context->load_mw, renewable_mw);
            inertia_mvas = total_inertia(displaced);
        }
        double frr_mw = 0.0;
        try {
            frr_mw = evaluate_curve(curve, inertia_mvas);
        } catch (const DomainError& err) {
            throw DomainError("at '" + entry.time_label + "': " + err.what());
        }
        schedule.entries[i] = {entry.time_label, entry.time_h, inertia_mvas, frr_mw};
    });
    return schedule;
}

double peak_frr(const ReserveSchedule& schedule) {
    double peak = 0.0;
    for (const ScheduleEntry& entry : schedule.entries) {
        peak = std::max(peak, entry.frr_mw);
    }
    return peak;
}

CostReport cost_report(const ReserveSchedule& schedule,
                       const PriceTable& prices,
                       double bau_frr_mw) {
    if (schedule.entries.empty()) {
        throw DomainError("schedule is empty");
    }
    const double peak_mw = peak_frr(schedule);
    if (bau_frr_mw < peak_mw - 1e-9) {
        std::ostringstream msg;
        msg << "business-as-usual reserve " << bau_frr_mw << " MW is below the schedule peak "
            << peak_mw << " MW and would be insecure";
        throw DomainError(msg.str());
    }
    const double price = average_price(prices);

    // Each entry holds its reserve until the next one; the last entry
    // repeats the preceding duration (one hour for a single-entry schedule).
    const std::size_t n = schedule.entries.size();
    double adaptive_cost = 0.0;
    double total_hours = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double duration_h = 1.0;
        if (i + 1 < n) {
            duration_h = schedule.entries[i + 1].time_h - schedule.entries[i].time_h;
        } else if (n >= 2) {
            duration_h = schedule.entries[n - 1].time_h - schedule.entries[n - 2].time_h;
        }
        adaptive_cost += schedule.entries[i].frr_mw * price * duration_h;
        total_hours += duration_h;
    }

    CostReport report;
    report.adaptive_cost = adaptive_cost;
    report.bau_cost = bau_frr_mw * price * total_hours;
    report.bau_frr_mw = bau_frr_mw;
    report.savings_fraction = report.bau_cost > 0.0 ? 1.0 - adaptive_cost / report.bau_cost : 0.0;
    return report;
}

} // namespace frr
