#pragma once

#include "frr/types.hpp"

#include <optional>

namespace frr {

// Integrates the aggregated swing equation after a contingency_mw generation
// loss at t = 0, with per-fuel-type droop/deadband governor response through
// two cascaded lags, headroom saturation, and load damping. Classical
// fourth-order Runge-Kutta at cond.dt_s. Deterministic: identical inputs
// produce bit-identical traces.
//
// Throws DomainError when the effective inertia is not positive and
// NumericalError (with the step index) if the state stops being finite.
FrequencyTrace simulate(const Fleet& fleet, const SystemCondition& cond);

// Minimum sampled frequency over the horizon. Empty trace throws.
double nadir(const FrequencyTrace& trace);

// Least-squares slope of frequency over [0, window_s]. The window must be at
// least one step and shorter than the horizon.
double rocof_initial(const FrequencyTrace& trace, double window_s);

// First sample time at which frequency falls below threshold_hz, if any.
// Shedding is never actuated; crossings are only reported.
std::optional<double> ufls_crossing_time(const FrequencyTrace& trace, double threshold_hz);

} // namespace frr
