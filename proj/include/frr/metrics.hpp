#pragma once

#include "frr/types.hpp"

namespace frr {

// Initial rate of change of frequency for a power imbalance against a
// kinetic base k_sys_mvas (the product of inertia constant and system MVA
// carried as one quantity):
//
//   rocof = f_n * p_imbalance / (2 * k_sys)
//
// Positive input means generation loss; the magnitude of decline is
// returned. Non-positive inertia throws DomainError.
double rocof_eq1(double f_n_hz, double p_imbalance_mw, double k_sys_mvas);

// Inverse form: kinetic base from a measured rocof. Round-trips with
// rocof_eq1 to machine precision. Zero rocof throws DomainError.
double estimate_inertia(double rocof_hzps, double p_imbalance_mw, double f_n_hz);

// Averaging window for the post-response settling value (Value B). The
// default [20 s, 52 s] follows the BAL-003 measurement convention.
struct BWindow {
    double start_s = 20.0;
    double end_s = 52.0;
};

struct AbcPoints {
    double value_a_hz = 0.0;  // pre-disturbance frequency
    double value_b_hz = 0.0;  // settling average over the B window
    double point_c_hz = 0.0;  // nadir
    double c_to_b_ratio = 0.0; // (A - C) / (A - B); 1 for a flat trace
};

// Extracts the A/B/C measurement points from a trace. The horizon must
// cover the B window.
AbcPoints abc_points(const FrequencyTrace& trace, const BWindow& window = {});

} // namespace frr
