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
    cond.contingency_mw = 2500.0;

    const double r = solve_displacement_mw(fleet, cond.load_mw, 0.39e6);
    const Fleet d = displace_for_renewables(fleet, cond.load_mw, r);
    std::printf("displaced frr pool = %.1f MW\n", total_frr(d));
    for (int i = 0; i <= 10; ++i) {
        const double s = i / 10.0;
        std::printf("s=%.1f nadir=%.9f\n", s, nadir(simulate(scale_headroom(d, s), cond)));
    }

    // probe displaced feasibility at mid grid points, P=3000
    cond.contingency_mw = 3000.0;
    for (double k : {0.77e6, 1.61e6}) {
        const double rr = solve_displacement_mw(fleet, cond.load_mw, k);
        const Fleet dd = displace_for_renewables(fleet, cond.load_mw, rr);
        MinFrrOptions o;
        double frr = -1; const char* tag = "";
        try { frr = min_frr(dd, cond, o); }
        catch (const InfeasibleError&) { tag = "INF"; }
        catch (const NonMonotoneError&) { tag = "NONMONO"; }
        std::printf("P=3000 K=%.3g frr=%.1f%s\n", k, frr, tag);
    }
    return 0;
}
