#pragma once

#include "frr/types.hpp"

#include <array>

namespace frr {

// Kinetic base of the committed fleet in MVA*s: sum of H * S over committed
// units. Non-committed units contribute nothing; an empty fleet gives 0.
double total_inertia(const Fleet& fleet);

// Frequency response reserve in MW: total headroom over units that are both
// committed and responsive.
double total_frr(const Fleet& fleet);

// Returns a fleet whose responsive committed units have their pset raised so
// each headroom becomes scale * original headroom. Per-fuel-type headroom
// shares are preserved exactly; commitment and inertia are untouched.
// scale outside [0, 1] throws DomainError.
Fleet scale_headroom(const Fleet& fleet, double scale);

// Decommits units in ascending merit_rank until the committed dispatch fits
// load_mw - renewable_mw, redispatching the marginal unit instead of
// dropping it when the match is not exact. load_mw <= 0 or renewable_mw
// outside [0, load_mw] throws DomainError.
Fleet displace_for_renewables(const Fleet& fleet, double load_mw, double renewable_mw);

// Responsive committed capacity of one fuel type, with droop and deadband
// aggregated as capacity-weighted means and headroom summed.
struct TypeAggregate {
    double responsive_pmax_mw = 0.0;
    double droop_pu = 0.0;
    double deadband_hz = 0.0;
    double headroom_mw = 0.0;
};

std::array<TypeAggregate, kFuelTypeCount> aggregate_by_type(const Fleet& fleet);

} // namespace frr
