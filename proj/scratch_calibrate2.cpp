// Throwaway calibration probe, variant scan.
#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/metrics.hpp"
#include "frr/reserve.hpp"
#include "frr/simulate.hpp"

#include <cmath>
#include <cstdio>

using namespace frr;

struct Variant {
    const char* name;
    GovernorParams steam, gas, hydro;
    double damping;
    double p_loss;
};

int main() {
    Fleet base = load_fleet_csv("data/fleet.csv");

    const double grid[] = {0.39e6, 0.77e6, 1.22e6, 1.61e6, 1.93e6};
    const Variant variants[] = {
        {"E st20/gas2 F.02/.5 D=.3 P=11k", {0.5, 20, 0.02}, {0.4, 2.0, 0.5}, {0.5, 8.0, -0.6}, 0.3, 11000},
        {"F st20/gas2 F.02/.5 D=.4 P=12k", {0.5, 20, 0.02}, {0.4, 2.0, 0.5}, {0.5, 8.0, -0.6}, 0.4, 12000},
        {"G st18/gas2.5 F.05/.4 D=.25 P=10k", {0.5, 18, 0.05}, {0.4, 2.5, 0.4}, {0.5, 9.0, -0.5}, 0.25, 10000},
        {"H st25/gas2 F.02/.5 D=.3 P=11k", {0.5, 25, 0.02}, {0.4, 2.0, 0.5}, {0.5, 10.0, -0.6}, 0.3, 11000},
    };

    for (const Variant& v : variants) {
        Fleet fleet = base;
        fleet.governors[(int)FuelType::steam] = v.steam;
        fleet.governors[(int)FuelType::other] = v.steam;
        fleet.governors[(int)FuelType::gas] = v.gas;
        fleet.governors[(int)FuelType::hydro] = v.hydro;

        SystemCondition cond;
        cond.load_mw = 500000.0;
        cond.damping_pu = v.damping;
        cond.contingency_mw = v.p_loss;
        cond.ufls_threshold_hz = 59.5;
        cond.horizon_s = 60.0;
        cond.dt_s = 0.01;

        std::printf("\n=== %s ===\n", v.name);
        MinFrrOptions opt;
        opt.verify_monotone = true;
        double prev595 = 1e18;
        bool strict = true;
        for (double k : grid) {
            cond.inertia_override_mvas = k;
            const double n1 = nadir(simulate(fleet, cond));
            double frr595 = -1.0, frr593 = -1.0;
            const char* flag = "";
            try {
                frr595 = min_frr(fleet, cond, opt);
            } catch (const InfeasibleError&) {
                flag = " INFEASIBLE@59.5";
            } catch (const NonMonotoneError&) {
                flag = " NONMONO@59.5";
            }
            SystemCondition c2 = cond;
            c2.ufls_threshold_hz = 59.3;
            try {
                frr593 = min_frr(fleet, c2, opt);
            } catch (const InfeasibleError&) {
                flag = " INFEASIBLE@59.3";
            } catch (const NonMonotoneError&) {
                flag = " NONMONO@59.3";
            }
            if (frr595 >= prev595 - 50.0) strict = false;  // want >50 MW step
            prev595 = frr595;
            std::printf("K=%.3g nadir(s=1)=%.4f frr595=%.1f frr593=%.1f gap=%.1f%s\n", k, n1,
                        frr595, frr593, frr595 - frr593, flag);
        }
        std::printf("strictly decreasing by >50 MW: %s\n", strict ? "yes" : "NO");
    }
    return 0;
}
