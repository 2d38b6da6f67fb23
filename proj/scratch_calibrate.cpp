// Throwaway calibration probe; not part of the build.
#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/metrics.hpp"
#include "frr/reserve.hpp"
#include "frr/simulate.hpp"

#include <cmath>
#include <cstdio>

using namespace frr;

int main() {
    Fleet fleet = load_fleet_csv("data/fleet.csv");
    std::printf("total_inertia=%.17g total_frr=%.17g\n", total_inertia(fleet), total_frr(fleet));

    SystemCondition cond;
    cond.load_mw = 500000.0;
    cond.damping_pu = 1.0;
    cond.ufls_threshold_hz = 59.5;
    cond.horizon_s = 60.0;
    cond.dt_s = 0.01;

    const double grid[] = {0.39e6, 0.77e6, 1.22e6, 1.61e6, 1.93e6};

    for (double p_loss : {7000.0, 9000.0, 11000.0}) {
        cond.contingency_mw = p_loss;
        std::printf("\n=== contingency %.0f MW ===\n", p_loss);
        for (double k : grid) {
            cond.inertia_override_mvas = k;
            const double n1 = nadir(simulate(fleet, cond));
            const double n0 = nadir(simulate(scale_headroom(fleet, 0.0), cond));
            double frr595 = -1.0, frr593 = -1.0;
            MinFrrOptions opt;
            opt.verify_monotone = false;
            try {
                frr595 = min_frr(fleet, cond, opt);
            } catch (const InfeasibleError&) {
            }
            SystemCondition c2 = cond;
            c2.ufls_threshold_hz = 59.3;
            try {
                frr593 = min_frr(fleet, c2, opt);
            } catch (const InfeasibleError&) {
            }
            std::printf("K=%.3g nadir(s=1)=%.4f nadir(s=0)=%.4f minfrr595=%.1f minfrr593=%.1f gap=%.1f\n",
                        k, n1, n0, frr595, frr593, frr595 - frr593);
        }
    }

    // monotone scan in s at the low-inertia point, contingency 9000
    cond.contingency_mw = 9000.0;
    cond.inertia_override_mvas = 0.39e6;
    std::printf("\nnadir vs scale at K=0.39e6:\n");
    double prev = 0.0;
    bool mono = true;
    for (int i = 0; i <= 10; ++i) {
        const double s = i / 10.0;
        const double n = nadir(simulate(scale_headroom(fleet, s), cond));
        if (i && n < prev - 1e-9) mono = false;
        std::printf("  s=%.1f nadir=%.5f\n", s, n);
        prev = n;
    }
    std::printf("monotone in s: %s\n", mono ? "yes" : "NO");

    // rocof acceptance family: P_loss=1000, D=0.05, window 0.5
    std::printf("\nrocof family (P=1000, D=0.05, db from fleet):\n");
    SystemCondition rc;
    rc.load_mw = 500000.0;
    rc.damping_pu = 0.05;
    rc.contingency_mw = 1000.0;
    rc.ufls_threshold_hz = 59.5;
    rc.horizon_s = 10.0;
    rc.dt_s = 0.01;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double k = 0.39e6 + i * (2.4e6 - 0.39e6) / 9.0;
        rc.inertia_override_mvas = k;
        const double measured = -rocof_initial(simulate(fleet, rc), 0.5);
        const double expected = rocof_eq1(60.0, 1000.0, k);
        const double rel = std::abs(measured - expected) / expected;
        worst = std::max(worst, rel);
        std::printf("  K=%.3g measured=%.6g eq1=%.6g rel=%.4f%%\n", k, measured, expected,
                    rel * 100.0);
    }
    std::printf("worst rel err: %.4f%%\n", worst * 100.0);

    // step halving at base case
    cond.inertia_override_mvas.reset();
    cond.contingency_mw = 9000.0;
    const double nad1 = nadir(simulate(fleet, cond));
    SystemCondition half = cond;
    half.dt_s = 0.005;
    const double nad2 = nadir(simulate(fleet, half));
    std::printf("\nbase nadir dt=0.01: %.8f, dt=0.005: %.8f, delta=%.3g\n", nad1, nad2,
                std::abs(nad1 - nad2));
    return 0;
}
