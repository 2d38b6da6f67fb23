#include "frr/reserve.hpp"

#include "frr/errors.hpp"
#include "frr/parallel.hpp"
#include "frr/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

namespace frr {

namespace {

// FP-noise slack for comparisons between simulated nadir values.
constexpr double kNadirSlackHz = 1e-9;

double nadir_at_scale(const Fleet& fleet, const SystemCondition& cond, double scale) {
    return nadir(simulate(scale_headroom(fleet, scale), cond));
}

void check_options(const MinFrrOptions& options) {
    if (!(options.tolerance_mw > 0.0)) {
        throw DomainError("tolerance_mw must be positive");
    }
    if (options.max_iterations < 1) {
        throw DomainError("max_iterations must be at least 1");
    }
}

void verify_nadir_monotone(const Fleet& fleet, const SystemCondition& cond, int scan_points) {
    if (scan_points < 2) {
        return;
    }
    double previous = 0.0;
    for (int i = 0; i < scan_points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(scan_points - 1);
        const double value = nadir_at_scale(fleet, cond, s);
        if (i > 0 && value < previous - kNadirSlackHz) {
            std::ostringstream msg;
            msg << "nadir decreases as reserve grows (scan at scale " << s << ": " << value
                << " Hz < " << previous << " Hz); bisection result unreliable";
            throw NonMonotoneError(msg.str());
        }
        previous = value;
    }
}

} // namespace

std::string_view to_string(CurveMode mode) {
    return mode == CurveMode::override_inertia ? "override_inertia" : "displacement";
}

std::optional<CurveMode> curve_mode_from_string(std::string_view name) {
    if (name == "override_inertia") return CurveMode::override_inertia;
    if (name == "displacement") return CurveMode::displacement;
    return std::nullopt;
}

ReserveCurve::ReserveCurve(std::vector<CurvePoint> points,
                           std::vector<double> infeasible_inertia_mvas,
                           double ufls_threshold_hz,
                           CurveMode mode,
                           std::string provenance,
                           double tolerance_mw)
    : points_(std::move(points)),
      infeasible_(std::move(infeasible_inertia_mvas)),
      ufls_threshold_hz_(ufls_threshold_hz),
      mode_(mode),
      provenance_(std::move(provenance)),
      tolerance_mw_(tolerance_mw) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].inertia_mvas) || !std::isfinite(points_[i].min_frr_mw)) {
            throw DomainError("reserve curve has a non-finite point");
        }
        if (points_[i].min_frr_mw < 0.0) {
            throw DomainError("reserve curve has a negative reserve value");
        }
        if (i > 0) {
            if (!(points_[i].inertia_mvas > points_[i - 1].inertia_mvas)) {
                throw DomainError("reserve curve inertia values must be strictly increasing");
            }
            if (points_[i].min_frr_mw > points_[i - 1].min_frr_mw + 1e-9) {
                std::ostringstream msg;
                msg << "reserve curve not non-increasing: " << points_[i].min_frr_mw
                    << " MW at " << points_[i].inertia_mvas << " MVA*s exceeds "
                    << points_[i - 1].min_frr_mw << " MW at " << points_[i - 1].inertia_mvas;
                throw DomainError(msg.str());
            }
        }
    }
}

double min_frr(const Fleet& fleet, const SystemCondition& cond, const MinFrrOptions& options) {
    check_options(options);
    validate(cond);

    const double full_frr_mw = total_frr(fleet);
    const double threshold = cond.ufls_threshold_hz;

    double result_mw = 0.0;
    if (nadir_at_scale(fleet, cond, 0.0) >= threshold) {
        // No responsive headroom needed at all.
        result_mw = 0.0;
    } else if (nadir_at_scale(fleet, cond, 1.0) < threshold) {
        std::ostringstream msg;
        msg << "infeasible: full headroom of " << full_frr_mw
            << " MW still lets the nadir cross " << threshold << " Hz";
        throw InfeasibleError(msg.str());
    } else {
        // lo violates the threshold, hi satisfies it; shrink to tolerance.
        double lo = 0.0;
        double hi = 1.0;
        int iterations = 0;
        while ((hi - lo) * full_frr_mw > options.tolerance_mw) {
            if (++iterations > options.max_iterations) {
                throw NumericalError("reserve bisection exceeded the iteration cap");
            }
            const double mid = 0.5 * (lo + hi);
            if (nadir_at_scale(fleet, cond, mid) >= threshold) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        result_mw = hi * full_frr_mw;
    }

    if (options.verify_monotone) {
        verify_nadir_monotone(fleet, cond, options.monotone_scan_points);
    }
    return result_mw;
}

double solve_displacement_mw(const Fleet& fleet,
                             double load_mw,
                             double target_inertia_mvas,
                             double rel_tol) {
    if (!(target_inertia_mvas > 0.0)) {
        throw DomainError("target inertia must be positive");
    }
    if (!(rel_tol > 0.0)) {
        throw DomainError("displacement tolerance must be positive");
    }
    const auto inertia_at = [&](double renewable_mw) {
        return total_inertia(displace_for_renewables(fleet, load_mw, renewable_mw));
    };
    const auto matches = [&](double inertia_mvas) {
        return std::abs(inertia_mvas - target_inertia_mvas) <= rel_tol * target_inertia_mvas;
    };

    double lo = 0.0;
    double lo_inertia = inertia_at(lo);
    if (matches(lo_inertia)) {
        return lo;
    }
    if (lo_inertia < target_inertia_mvas) {
        std::ostringstream msg;
        msg << "committed inertia " << lo_inertia << " MVA*s cannot reach target "
            << target_inertia_mvas << " MVA*s";
        throw DomainError(msg.str());
    }

    double hi = load_mw;
    double hi_inertia = inertia_at(hi);
    if (matches(hi_inertia)) {
        return hi;
    }
    if (hi_inertia > target_inertia_mvas) {
        std::ostringstream msg;
        msg << "full displacement still leaves " << hi_inertia << " MVA*s above target "
            << target_inertia_mvas << " MVA*s";
        throw DomainError(msg.str());
    }

    // Commitment makes inertia a non-increasing step function of renewable
    // output; narrow the bracket around the step nearest the target.
    while (hi - lo > 1e-9 * load_mw) {
        const double mid = 0.5 * (lo + hi);
        const double mid_inertia = inertia_at(mid);
        if (matches(mid_inertia)) {
            return mid;
        }
        if (mid_inertia > target_inertia_mvas) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::ostringstream msg;
    msg << "no commitment level matches inertia " << target_inertia_mvas << " MVA*s within "
        << rel_tol * 100.0 << "% (nearest step: " << inertia_at(lo) << " / " << inertia_at(hi)
        << " MVA*s)";
    throw DomainError(msg.str());
}

ReserveCurve build_curve(const Fleet& fleet,
                         const SystemCondition& cond,
                         std::span<const double> inertia_grid_mvas,
                         CurveMode mode,
                         const MinFrrOptions& options,
                         int jobs,
                         std::string provenance) {
    if (inertia_grid_mvas.empty()) {
        throw DomainError("inertia grid is empty");
    }
    for (std::size_t i = 1; i < inertia_grid_mvas.size(); ++i) {
        if (!(inertia_grid_mvas[i] > inertia_grid_mvas[i - 1])) {
            throw DomainError("inertia grid must be strictly increasing");
        }
    }

    const std::size_t n = inertia_grid_mvas.size();
    std::vector<std::optional<CurvePoint>> computed(n);
    std::vector<char> infeasible(n, 0);

    parallel_for(n, jobs, [&](std::size_t i) {
        const double k_mvas = inertia_grid_mvas[i];
        Fleet point_fleet = fleet;
        SystemCondition point_cond = cond;
        if (mode == CurveMode::override_inertia) {
            point_cond.inertia_override_mvas = k_mvas;
        } else {
            const double renewable_mw = solve_displacement_mw(fleet, cond.load_mw, k_mvas);
            point_fleet = displace_for_renewables(fleet, cond.load_mw, renewable_mw);
            point_cond.inertia_override_mvas.reset();
        }
        try {
            const double frr_mw = min_frr(point_fleet, point_cond, options);
            computed[i] = CurvePoint{k_mvas, frr_mw};
        } catch (const InfeasibleError&) {
            infeasible[i] = 1;
        }
    });

    std::vector<CurvePoint> points;
    std::vector<double> gaps;
    for (std::size_t i = 0; i < n; ++i) {
        if (computed[i]) {
            points.push_back(*computed[i]);
        } else if (infeasible[i]) {
            gaps.push_back(inertia_grid_mvas[i]);
        }
    }
    if (points.empty()) {
        throw InfeasibleError("every grid point is infeasible at full headroom");
    }
    return ReserveCurve(std::move(points), std::move(gaps), cond.ufls_threshold_hz, mode,
                        std::move(provenance), options.tolerance_mw);
}

std::vector<ReserveCurve> compare_thresholds(const Fleet& fleet,
                                             const SystemCondition& cond,
                                             std::span<const double> thresholds_hz,
                                             std::span<const double> inertia_grid_mvas,
                                             CurveMode mode,
                                             const MinFrrOptions& options,
                                             int jobs,
                                             std::string provenance) {
    if (thresholds_hz.empty()) {
        throw DomainError("threshold list is empty");
    }
    std::vector<ReserveCurve> curves;
    curves.reserve(thresholds_hz.size());
    for (const double threshold : thresholds_hz) {
        SystemCondition threshold_cond = cond;
        threshold_cond.ufls_threshold_hz = threshold;
        curves.push_back(
            build_curve(fleet, threshold_cond, inertia_grid_mvas, mode, options, jobs, provenance));
    }
    return curves;
}

} // namespace frr
