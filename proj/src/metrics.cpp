#include "frr/metrics.hpp"

#include "frr/errors.hpp"
#include "frr/simulate.hpp"

#include <cmath>

namespace frr {

double rocof_eq1(double f_n_hz, double p_imbalance_mw, double k_sys_mvas) {
    if (!(k_sys_mvas > 0.0)) {
        throw DomainError("rocof needs positive system inertia");
    }
    return f_n_hz * p_imbalance_mw / (2.0 * k_sys_mvas);
}

double estimate_inertia(double rocof_hzps, double p_imbalance_mw, double f_n_hz) {
    if (rocof_hzps == 0.0) {
        throw DomainError("cannot estimate inertia from zero rocof");
    }
    return f_n_hz * p_imbalance_mw / (2.0 * rocof_hzps);
}

AbcPoints abc_points(const FrequencyTrace& trace, const BWindow& window) {
    if (trace.freq_hz.size() == 0) {
        throw DomainError("abc points of an empty trace");
    }
    if (!(window.start_s >= 0.0) || !(window.end_s > window.start_s)) {
        throw DomainError("B window must satisfy 0 <= start < end");
    }
    const double horizon_s = static_cast<double>(trace.freq_hz.size() - 1) * trace.dt_s;
    if (window.end_s > horizon_s + 1e-9) {
        throw DomainError("trace horizon does not cover the B window");
    }

    const auto first = static_cast<Eigen::Index>(std::ceil(window.start_s / trace.dt_s - 1e-9));
    const auto last = static_cast<Eigen::Index>(std::floor(window.end_s / trace.dt_s + 1e-9));

    AbcPoints points;
    points.value_a_hz = trace.freq_hz[0];
    points.value_b_hz = trace.freq_hz.segment(first, last - first + 1).mean();
    points.point_c_hz = nadir(trace);

    const double a_to_b = points.value_a_hz - points.value_b_hz;
    const double a_to_c = points.value_a_hz - points.point_c_hz;
    if (a_to_b == 0.0 && a_to_c == 0.0) {
        points.c_to_b_ratio = 1.0; // flat trace
    } else {
        points.c_to_b_ratio = a_to_c / a_to_b;
    }
    return points;
}

} // namespace frr
