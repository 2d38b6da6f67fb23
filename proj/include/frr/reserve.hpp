#pragma once

#include "frr/fleet.hpp"
#include "frr/types.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frr {

struct CurvePoint {
    double inertia_mvas = 0.0;
    double min_frr_mw = 0.0;
};

enum class CurveMode { override_inertia, displacement };

std::string_view to_string(CurveMode mode);
std::optional<CurveMode> curve_mode_from_string(std::string_view name);

// Inertia to minimum-reserve lookup curve. Points are strictly increasing in
// inertia and non-increasing in reserve; both are enforced at construction.
// Grid values that had no feasible reserve are kept as explicit gaps.
class ReserveCurve {
public:
    ReserveCurve(std::vector<CurvePoint> points,
                 std::vector<double> infeasible_inertia_mvas,
                 double ufls_threshold_hz,
                 CurveMode mode,
                 std::string provenance = {},
                 double tolerance_mw = 1.0);

    const std::vector<CurvePoint>& points() const { return points_; }
    const std::vector<double>& infeasible_inertia_mvas() const { return infeasible_; }
    double ufls_threshold_hz() const { return ufls_threshold_hz_; }
    CurveMode mode() const { return mode_; }
    const std::string& provenance() const { return provenance_; }
    double tolerance_mw() const { return tolerance_mw_; }

private:
    std::vector<CurvePoint> points_;
    std::vector<double> infeasible_;
    double ufls_threshold_hz_ = 0.0;
    CurveMode mode_ = CurveMode::override_inertia;
    std::string provenance_;
    double tolerance_mw_ = 1.0;
};

struct MinFrrOptions {
    double tolerance_mw = 1.0;   // bisection stops when the bracket is this narrow
    int max_iterations = 60;
    bool verify_monotone = true; // coarse post-run scan for nadir monotonicity
    int monotone_scan_points = 11;
};

// Smallest total reserve (MW) whose post-contingency nadir stays at or above
// cond.ufls_threshold_hz, found by bisection on the headroom scale factor.
// Returns the feasible upper end of the final bracket.
//
// Throws InfeasibleError when full headroom already violates the threshold
// and NonMonotoneError if the verification scan sees the nadir decrease as
// reserve grows.
double min_frr(const Fleet& fleet, const SystemCondition& cond, const MinFrrOptions& options = {});

// One min_frr evaluation per grid value. In override_inertia mode the grid
// value replaces the kinetic base directly; in displacement mode it is
// reached by solving for the renewable output whose unit displacement
// matches the grid inertia within 1%. Infeasible grid values become gaps.
ReserveCurve build_curve(const Fleet& fleet,
                         const SystemCondition& cond,
                         std::span<const double> inertia_grid_mvas,
                         CurveMode mode,
                         const MinFrrOptions& options = {},
                         int jobs = 1,
                         std::string provenance = {});

// One curve per threshold over a shared grid, in the input threshold order.
std::vector<ReserveCurve> compare_thresholds(const Fleet& fleet,
                                             const SystemCondition& cond,
                                             std::span<const double> thresholds_hz,
                                             std::span<const double> inertia_grid_mvas,
                                             CurveMode mode = CurveMode::override_inertia,
                                             const MinFrrOptions& options = {},
                                             int jobs = 1,
                                             std::string provenance = {});

// Renewable output whose displacement brings the committed inertia within
// rel_tol of target_inertia_mvas. Exposed for the displacement curve mode.
double solve_displacement_mw(const Fleet& fleet,
                             double load_mw,
                             double target_inertia_mvas,
                             double rel_tol = 0.01);

} // namespace frr
