#include "frr/simulate.hpp"

#include "frr/errors.hpp"
#include "frr/fleet.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace frr {

namespace {

// State layout: [0] frequency deviation, then (x1, x2) lag states per fuel
// type. Lag states are the raw block outputs; saturation applies only to the
// delivered response.
constexpr int kStateDim = 1 + 2 * kFuelTypeCount;
using StateVec = Eigen::Matrix<double, kStateDim, 1>;

struct TypeDynamics {
    bool active = false;
    double gain_mw_per_hz = 0.0; // responsive capacity over (droop * f_n)
    double deadband_hz = 0.0;
    double headroom_mw = 0.0;
    double hp_fraction = 0.0;
    double inv_t1 = 0.0;
    double inv_t2 = 0.0;
};

struct SwingModel {
    double nominal_freq_hz = 0.0;
    double freq_gain = 0.0;        // f_n / (2 * k_sys)
    double loss_mw = 0.0;
    double damping_mw_per_hz = 0.0; // D * P_load / f_n
    std::array<TypeDynamics, kFuelTypeCount> types{};

    double delivered_mw(const StateVec& y, int t) const {
        const TypeDynamics& td = types[t];
        if (!td.active) {
            return 0.0;
        }
        const double raw = td.hp_fraction * y[1 + 2 * t] + (1.0 - td.hp_fraction) * y[2 + 2 * t];
        return std::clamp(raw, 0.0, td.headroom_mw);
    }

    StateVec derivative(const StateVec& y) const {
        StateVec dy = StateVec::Zero();
        const double df = y[0];
        double mech_total_mw = 0.0;
        for (int t = 0; t < kFuelTypeCount; ++t) {
            const TypeDynamics& td = types[t];
            if (!td.active) {
                continue;
            }
            // Step-offset deadband: response follows the excursion beyond
            // the band, continuous at the band edge.
            double df_effective = 0.0;
            if (df > td.deadband_hz) {
                df_effective = df - td.deadband_hz;
            } else if (df < -td.deadband_hz) {
                df_effective = df + td.deadband_hz;
            }
            const double command_mw = -df_effective * td.gain_mw_per_hz;
            const double x1 = y[1 + 2 * t];
            const double x2 = y[2 + 2 * t];
            dy[1 + 2 * t] = (command_mw - x1) * td.inv_t1;
            dy[2 + 2 * t] = (x1 - x2) * td.inv_t2;
            mech_total_mw += delivered_mw(y, t);
        }
        dy[0] = freq_gain * (mech_total_mw - loss_mw - damping_mw_per_hz * df);
        return dy;
    }
};

SwingModel build_model(const Fleet& fleet, const SystemCondition& cond) {
    const double k_sys_mvas =
        cond.inertia_override_mvas ? *cond.inertia_override_mvas : total_inertia(fleet);
    if (!(k_sys_mvas > 0.0)) {
        throw DomainError("system inertia must be positive (infinite initial ROCOF)");
    }

    SwingModel model;
    model.nominal_freq_hz = cond.nominal_freq_hz;
    model.freq_gain = cond.nominal_freq_hz / (2.0 * k_sys_mvas);
    model.loss_mw = cond.contingency_mw;
    model.damping_mw_per_hz = cond.damping_pu * cond.load_mw / cond.nominal_freq_hz;

    const auto aggregates = aggregate_by_type(fleet);
    for (int t = 0; t < kFuelTypeCount; ++t) {
        const TypeAggregate& agg = aggregates[t];
        if (!(agg.responsive_pmax_mw > 0.0) || !(agg.droop_pu > 0.0)) {
            continue;
        }
        const GovernorParams& gov = fleet.governors[t];
        validate(gov);
        TypeDynamics& td = model.types[t];
        td.active = true;
        td.gain_mw_per_hz = agg.responsive_pmax_mw / (agg.droop_pu * cond.nominal_freq_hz);
        td.deadband_hz = agg.deadband_hz;
        td.headroom_mw = agg.headroom_mw;
        td.hp_fraction = gov.hp_fraction;
        td.inv_t1 = 1.0 / gov.t1_s;
        td.inv_t2 = 1.0 / gov.t2_s;
    }
    return model;
}

} // namespace

FrequencyTrace simulate(const Fleet& fleet, const SystemCondition& cond) {
    validate(cond);
    const SwingModel model = build_model(fleet, cond);

    const auto steps = static_cast<Eigen::Index>(std::llround(cond.horizon_s / cond.dt_s));
    if (steps < 1) {
        throw DomainError("horizon shorter than one step");
    }

    FrequencyTrace trace;
    trace.dt_s = cond.dt_s;
    trace.freq_hz.resize(steps + 1);
    for (auto& series : trace.mech_mw_by_type) {
        series = Eigen::VectorXd::Zero(steps + 1);
    }

    StateVec y = StateVec::Zero();
    trace.freq_hz[0] = cond.nominal_freq_hz;

    const double dt = cond.dt_s;
    for (Eigen::Index i = 1; i <= steps; ++i) {
        const StateVec k1 = model.derivative(y);
        const StateVec k2 = model.derivative(y + (0.5 * dt) * k1);
        const StateVec k3 = model.derivative(y + (0.5 * dt) * k2);
        const StateVec k4 = model.derivative(y + dt * k3);
        y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!y.allFinite()) {
            std::ostringstream msg;
            msg << "non-finite state at step " << i << " (t = " << static_cast<double>(i) * dt
                << " s)";
            throw NumericalError(msg.str());
        }
        trace.freq_hz[i] = cond.nominal_freq_hz + y[0];
        for (int t = 0; t < kFuelTypeCount; ++t) {
            trace.mech_mw_by_type[t][i] = model.delivered_mw(y, t);
        }
    }
    return trace;
}

double nadir(const FrequencyTrace& trace) {
    if (trace.freq_hz.size() == 0) {
        throw DomainError("nadir of an empty trace");
    }
    return trace.freq_hz.minCoeff();
}

double rocof_initial(const FrequencyTrace& trace, double window_s) {
    if (trace.freq_hz.size() < 2) {
        throw DomainError("trace too short for a slope");
    }
    if (window_s < trace.dt_s) {
        throw DomainError("rocof window shorter than one step");
    }
    const double horizon_s = static_cast<double>(trace.freq_hz.size() - 1) * trace.dt_s;
    if (window_s >= horizon_s) {
        throw DomainError("rocof window must be shorter than the horizon");
    }

    const auto last = static_cast<Eigen::Index>(std::floor(window_s / trace.dt_s + 1e-9));
    const Eigen::Index count = last + 1;
    const Eigen::VectorXd t =
        Eigen::VectorXd::LinSpaced(count, 0.0, static_cast<double>(last) * trace.dt_s);
    const auto f = trace.freq_hz.head(count);
    const Eigen::VectorXd t_centered = t.array() - t.mean();
    const Eigen::VectorXd f_centered = f.array() - f.mean();
    return t_centered.dot(f_centered) / t_centered.squaredNorm();
}

std::optional<double> ufls_crossing_time(const FrequencyTrace& trace, double threshold_hz) {
    for (Eigen::Index i = 0; i < trace.freq_hz.size(); ++i) {
        if (trace.freq_hz[i] < threshold_hz) {
            return trace.time_at(i);
        }
    }
    return std::nullopt;
}

} // namespace frr
