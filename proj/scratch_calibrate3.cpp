// Throwaway: day-profile savings, rocof family, oracle cross-check.
#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/metrics.hpp"
#include "frr/reserve.hpp"
#include "frr/schedule.hpp"
#include "frr/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

using namespace frr;

int main() {
    Fleet fleet = load_fleet_csv("data/fleet.csv");
    fleet.governors[(int)FuelType::steam] = {0.5, 20.0, 0.02};
    fleet.governors[(int)FuelType::other] = {0.5, 20.0, 0.02};
    fleet.governors[(int)FuelType::gas] = {0.4, 2.0, 0.5};
    fleet.governors[(int)FuelType::hydro] = {0.5, 8.0, -0.6};

    SystemCondition cond;
    cond.load_mw = 500000.0;
    cond.damping_pu = 0.4;
    cond.contingency_mw = 12000.0;
    cond.ufls_threshold_hz = 59.5;
    cond.horizon_s = 60.0;
    cond.dt_s = 0.01;

    const std::vector<double> grid = {0.39e6, 0.77e6, 1.22e6, 1.61e6, 1.93e6};
    MinFrrOptions opt;
    ReserveCurve curve = build_curve(fleet, cond, grid, CurveMode::override_inertia, opt, 4);
    for (const auto& p : curve.points()) {
        std::printf("curve K=%.3g frr=%.2f\n", p.inertia_mvas, p.min_frr_mw);
    }

    // day: sharper bell
    const double cf[24] = {0, 0, 0, 0, 0, 0, 0.02, 0.08, 0.20, 0.38, 0.58, 0.80,
                           1.00, 0.80, 0.58, 0.38, 0.20, 0.08, 0.02, 0, 0, 0, 0, 0};
    const double pv_capacity = 400000.0;
    double total = 0.0, peak = 0.0;
    int argmax_frr = -1, argmin_inertia = -1;
    double max_frr = -1, min_in = 1e18;
    std::printf("\nday schedule:\n");
    for (int h = 0; h < 24; ++h) {
        const Fleet d = displace_for_renewables(fleet, cond.load_mw, cf[h] * pv_capacity);
        const double k = total_inertia(d);
        const double frr = evaluate_curve(curve, k);
        total += frr;
        peak = std::max(peak, frr);
        if (frr > max_frr) { max_frr = frr; argmax_frr = h; }
        if (k < min_in) { min_in = k; argmin_inertia = h; }
        std::printf("  h=%02d cf=%.2f K=%.4g frr=%.1f\n", h, cf[h], k, frr);
    }
    const double savings = 1.0 - total / (24.0 * peak);
    std::printf("peak=%.1f mean=%.1f savings=%.4f argmaxFRR=%d argminK=%d\n", peak, total / 24.0,
                savings, argmax_frr, argmin_inertia);

    // rocof family with deadband-widened fleet, D=0.02
    Fleet wide = fleet;
    for (auto& u : wide.units) {
        if (u.responsive) u.deadband_hz = 0.036;
    }
    SystemCondition rc = cond;
    rc.damping_pu = 0.02;
    rc.contingency_mw = 1000.0;
    rc.horizon_s = 10.0;
    std::printf("\nrocof family (db=0.036, D=0.02, P=1000):\n");
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double k = 0.39e6 + i * (2.4e6 - 0.39e6) / 9.0;
        rc.inertia_override_mvas = k;
        const double measured = std::abs(rocof_initial(simulate(wide, rc), 0.5));
        const double expected = rocof_eq1(60.0, 1000.0, k);
        const double rel = std::abs(measured - expected) / expected;
        worst = std::max(worst, rel);
    }
    std::printf("worst rel err: %.4f%%\n", worst * 100.0);

    // unit-test example: db=0.017 fleet, K=1.2e6, P=1000, D=0.05
    Fleet narrow = fleet;
    for (auto& u : narrow.units) {
        if (u.responsive) u.deadband_hz = 0.017;
    }
    SystemCondition uc = rc;
    uc.damping_pu = 0.05;
    uc.inertia_override_mvas = 1.2e6;
    const double m2 = std::abs(rocof_initial(simulate(narrow, uc), 0.5));
    const double e2 = rocof_eq1(60.0, 1000.0, 1.2e6);
    std::printf("unit example rel err: %.4f%%\n", std::abs(m2 - e2) / e2 * 100.0);

    // grid-scan oracle vs bisection at base point
    cond.inertia_override_mvas = 1.93e6;
    const double frr_total = total_frr(fleet);
    double oracle = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double s = i / 100.0;
        if (nadir(simulate(scale_headroom(fleet, s), cond)) >= cond.ufls_threshold_hz) {
            oracle = s * frr_total;
            break;
        }
    }
    opt.verify_monotone = false;
    const double bisect = min_frr(fleet, cond, opt);
    std::printf("\noracle=%.2f bisect=%.2f diff=%.2f allowed=%.2f\n", oracle, bisect,
                std::abs(bisect - oracle), frr_total / 100.0 + opt.tolerance_mw);
    return 0;
}
