#include "frr/errors.hpp"
#include "frr/fleet.hpp"
#include "frr/io.hpp"
#include "frr/reserve.hpp"
#include "frr/simulate.hpp"
#include <cstdio>
using namespace frr;
int main() {
    Fleet fleet = load_fleet_csv("data/fleet.csv");
    Scenario sc = load_scenario_json("data/scenario.json");
    apply_scenario_governors(fleet, sc);
    SystemCondition cond = sc.condition;

    // gap test: find P with 0.39e6 infeasible but 1.93e6 feasible at s=1
    for (double p : {13000.0, 14000.0, 15000.0, 16000.0, 18000.0}) {
        cond.contingency_mw = p;
        cond.inertia_override_mvas = 0.39e6;
        double lo = nadir(simulate(fleet, cond));
        cond.inertia_override_mvas = 1.93e6;
        double hi = nadir(simulate(fleet, cond));
        std::printf("P=%.0f nadir@0.39=%.4f nadir@1.93=%.4f\n", p, lo, hi);
    }

    // displacement-mode: feasibility of displaced commitments
    cond = sc.condition;
    cond.inertia_override_mvas.reset();
    for (double p : {2500.0, 3000.0, 4000.0, 5000.0}) {
        cond.contingency_mw = p;
        std::printf("P=%.0f displaced:", p);
        for (double k : {0.39e6, 1.22e6, 1.93e6}) {
            double r = solve_displacement_mw(fleet, cond.load_mw, k);
            Fleet d = displace_for_renewables(fleet, cond.load_mw, r);
            double n1 = nadir(simulate(d, cond));
            double frr = -1;
            MinFrrOptions o; o.verify_monotone = true;
            const char* tag = "";
            try { frr = min_frr(d, cond, o); }
            catch (const InfeasibleError&) { tag = "INF"; }
            catch (const NonMonotoneError&) { tag = "NONMONO"; }
            std::printf("  K=%.3g nadir=%.4f frr=%.1f%s", k, n1, frr, tag);
        }
        std::printf("\n");
    }
    return 0;
}
